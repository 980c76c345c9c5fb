#include "acdual/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace acdual {

namespace {

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
    const Vec3 ab = b - a;
    const double len2 = ab.norm2();
    if (len2 == 0.0) return (p - a).norm();
    double t = (p - a).dot(ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return (p - (a + t * ab)).norm();
}

}  // namespace

Path make_path(std::vector<Vec3> vertices, bool closed, int dimension) {
    Path path{std::move(vertices), closed, dimension};
    validate(path);
    return path;
}

void validate(const Path& path) {
    if (path.dimension != 2 && path.dimension != 3)
        throw ConfigError("path.dimension: must be 2 or 3");
    if (path.vertices.size() < 2)
        throw ConfigError("path.vertices: at least 2 vertices required");
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
        const Vec3& v = path.vertices[i];
        if (!v.finite())
            throw ConfigError("path.vertices[" + std::to_string(i) + "]: not finite");
        if (path.dimension == 2 && v.z != 0.0)
            throw ConfigError("path.vertices[" + std::to_string(i) +
                              "]: nonzero z in a 2D path");
    }
    const std::int64_t nseg = segment_count(path);
    for (std::int64_t i = 0; i < nseg; ++i) {
        const auto [a, b] = segment(path, i);
        if (distance(a, b) <= 0.0)
            throw ConfigError("path.vertices: consecutive vertices coincide at segment " +
                              std::to_string(i));
    }
}

std::int64_t segment_count(const Path& path) {
    const auto n = static_cast<std::int64_t>(path.vertices.size());
    return path.closed ? n : n - 1;
}

std::pair<Vec3, Vec3> segment(const Path& path, std::int64_t i) {
    const auto n = static_cast<std::int64_t>(path.vertices.size());
    const Vec3& a = path.vertices[static_cast<std::size_t>(i)];
    const Vec3& b = path.vertices[static_cast<std::size_t>((i + 1) % n)];
    return {a, b};
}

double arc_length(const Path& path) {
    double total = 0.0;
    const std::int64_t nseg = segment_count(path);
    for (std::int64_t i = 0; i < nseg; ++i) {
        const auto [a, b] = segment(path, i);
        total += distance(a, b);
    }
    return total;
}

double bounding_diameter(const Path& path) {
    Vec3 lo = path.vertices.front();
    Vec3 hi = lo;
    for (const Vec3& v : path.vertices) {
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
    }
    return (hi - lo).norm();
}

double distance_to_path(const Path& path, const Vec3& point) {
    double best = std::numeric_limits<double>::infinity();
    const std::int64_t nseg = segment_count(path);
    for (std::int64_t i = 0; i < nseg; ++i) {
        const auto [a, b] = segment(path, i);
        best = std::min(best, point_segment_distance(point, a, b));
    }
    if (!path.closed) best = std::min(best, (point - path.vertices.back()).norm());
    return best;
}

Path reversed(const Path& path) {
    Path out = path;
    std::reverse(out.vertices.begin(), out.vertices.end());
    return out;
}

Path refine(const Path& path, double max_segment_length) {
    if (!(max_segment_length > 0.0))
        throw ConfigError("refine: max_segment_length must be > 0");
    Path out;
    out.closed = path.closed;
    out.dimension = path.dimension;
    const std::int64_t nseg = segment_count(path);
    for (std::int64_t i = 0; i < nseg; ++i) {
        const auto [a, b] = segment(path, i);
        const double len = distance(a, b);
        const auto pieces =
            std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(len / max_segment_length)));
        out.vertices.push_back(a);
        for (std::int64_t k = 1; k < pieces; ++k) {
            const double t = static_cast<double>(k) / static_cast<double>(pieces);
            out.vertices.push_back(a + t * (b - a));
        }
    }
    if (!path.closed) out.vertices.push_back(path.vertices.back());
    return out;
}

Path circle_path(const Vec3& center, double radius, int segments, int turns) {
    if (!(radius > 0.0)) throw ConfigError("circle.radius: must be > 0");
    if (segments < 3) throw ConfigError("circle.segments: must be >= 3");
    if (turns == 0) throw ConfigError("circle.turns: must be nonzero");
    Path out;
    out.closed = true;
    out.dimension = (center.z != 0.0) ? 3 : 2;
    const int total = segments * std::abs(turns);
    const double step = (turns > 0 ? 1.0 : -1.0) * 2.0 * std::numbers::pi / segments;
    out.vertices.reserve(static_cast<std::size_t>(total));
    for (int k = 0; k < total; ++k) {
        const double theta = step * k;
        out.vertices.push_back(
            {center.x + radius * std::cos(theta), center.y + radius * std::sin(theta), center.z});
    }
    return out;
}

int winding_number(const Path& path, const Vec2& about, double eps_on_path) {
    validate(path);
    if (!path.closed) throw ConfigError("winding_number: path must be closed");
    if (path.dimension != 2) throw ConfigError("winding_number: path must be 2D");
    const double eps = eps_on_path >= 0.0 ? eps_on_path : 1e-9 * bounding_diameter(path);
    const Vec3 q{about.x, about.y, 0.0};
    if (distance_to_path(path, q) < eps)
        throw PointOnPath("winding_number: query point lies on the path (tolerance " +
                          std::to_string(eps) + ")");
    double angle_sum = 0.0;
    const std::int64_t nseg = segment_count(path);
    for (std::int64_t i = 0; i < nseg; ++i) {
        const auto [a, b] = segment(path, i);
        const Vec2 u = a.xy() - about;
        const Vec2 v = b.xy() - about;
        angle_sum += std::atan2(u.cross(v), u.dot(v));
    }
    return static_cast<int>(std::llround(angle_sum / (2.0 * std::numbers::pi)));
}

int winding_about_axis(const Path& path, const Vec3& axis_point, const Vec3& axis_dir,
                       double eps_on_path) {
    // Orthonormal frame (u, v, axis_dir), right-handed so counterclockwise
    // in the (u, v) plane is positive about +axis_dir.
    const Vec3 w = axis_dir;
    Vec3 seed = std::abs(w.x) <= std::abs(w.y) && std::abs(w.x) <= std::abs(w.z)
                    ? Vec3{1.0, 0.0, 0.0}
                    : (std::abs(w.y) <= std::abs(w.z) ? Vec3{0.0, 1.0, 0.0} : Vec3{0.0, 0.0, 1.0});
    const Vec3 u = w.cross(seed).normalized();
    const Vec3 v = w.cross(u);
    Path projected;
    projected.closed = path.closed;
    projected.dimension = 2;
    projected.vertices.reserve(path.vertices.size());
    for (const Vec3& p : path.vertices) {
        const Vec3 d = p - axis_point;
        projected.vertices.push_back({d.dot(u), d.dot(v), 0.0});
    }
    return winding_number(projected, Vec2{0.0, 0.0}, eps_on_path);
}

Path random_star_loop(Rng& rng, const Vec3& center, int vertex_count, double radius_min,
                      double radius_max) {
    Path out;
    out.closed = true;
    out.dimension = (center.z != 0.0) ? 3 : 2;
    out.vertices.reserve(static_cast<std::size_t>(vertex_count));
    const double spacing = 2.0 * std::numbers::pi / vertex_count;
    for (int k = 0; k < vertex_count; ++k) {
        // Jitter below half the spacing keeps the angles strictly increasing.
        const double theta = spacing * (k + 0.45 * rng.uniform(-1.0, 1.0));
        const double r = rng.uniform(radius_min, radius_max);
        out.vertices.push_back(
            {center.x + r * std::cos(theta), center.y + r * std::sin(theta), center.z});
    }
    return out;
}

}  // namespace acdual
