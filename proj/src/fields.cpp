#include "acdual/fields.hpp"

#include <cmath>
#include <string>

namespace acdual {

namespace {

void require_separation(double dist, double eps, const char* what) {
    if (!(dist > eps))
        throw SingularPoint(std::string(what) + ": evaluation point within " +
                            std::to_string(eps) + " of the source");
}

}  // namespace

void validate(const FieldSource& source) {
    std::visit(
        [](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, Fluxon2D>) {
                if (!std::isfinite(s.flux)) throw ConfigError("source.flux: not finite");
            } else if constexpr (std::is_same_v<S, Dipole>) {
                if (!s.moment.finite() || !s.position.finite())
                    throw ConfigError("source.moment/position: not finite");
            } else if constexpr (std::is_same_v<S, InfiniteLineCharge>) {
                if (!std::isfinite(s.lambda)) throw ConfigError("source.lambda: not finite");
                if (std::abs(s.axis_dir.norm() - 1.0) > 1e-12)
                    throw ConfigError("source.axis_dir: must be unit length (tolerance 1e-12)");
            } else if constexpr (std::is_same_v<S, FiniteChargeLine>) {
                if (!std::isfinite(s.lambda)) throw ConfigError("source.lambda: not finite");
                if (s.samples < 2) throw ConfigError("source.samples: must be >= 2");
                if (!(distance(s.start, s.end) > 0.0))
                    throw ConfigError("source.start/end: endpoints coincide");
            }
        },
        source);
}

const char* source_tag(const FieldSource& source) {
    struct Tag {
        const char* operator()(const Fluxon2D&) const { return "fluxon"; }
        const char* operator()(const Dipole&) const { return "dipole"; }
        const char* operator()(const InfiniteLineCharge&) const { return "infinite_line"; }
        const char* operator()(const FiniteChargeLine&) const { return "finite_line"; }
    };
    return std::visit(Tag{}, source);
}

Vec3 dipole_vector_potential(const Vec3& moment, const Vec3& d, double eps_singular) {
    const double r = d.norm();
    require_separation(r, eps_singular, "dipole_vector_potential");
    return moment.cross(d) / (r * r * r);
}

Vec3 dipole_field(const Vec3& moment, const Vec3& d, double eps_singular) {
    const double r = d.norm();
    require_separation(r, eps_singular, "dipole_field");
    const Vec3 dhat = d / r;
    return (3.0 * moment.dot(dhat) * dhat - moment) / (r * r * r);
}

Vec2 fluxon_vector_potential(double flux, const Vec2& p, double eps_singular) {
    const double r2 = p.norm2();
    require_separation(std::sqrt(r2), eps_singular, "fluxon_vector_potential");
    const double scale = flux / (2.0 * std::numbers::pi * r2);
    return {-p.y * scale, p.x * scale};
}

Vec3 line_charge_field(const InfiniteLineCharge& line, const Vec3& at, double eps_singular) {
    const Vec3 d = at - line.axis_point;
    const Vec3 radial = d - d.dot(line.axis_dir) * line.axis_dir;
    const double rho = radial.norm();
    require_separation(rho, eps_singular, "line_charge_field");
    return (2.0 * line.lambda / (rho * rho)) * radial;
}

Vec3 finite_line_field(const FiniteChargeLine& line, const Vec3& at, double eps_singular,
                       const ExecPolicy& policy) {
    const Vec3 span = line.end - line.start;
    const double length = span.norm();
    const double q = line.lambda * length / static_cast<double>(line.samples);
    const double inv_n = 1.0 / static_cast<double>(line.samples);
    const Vec3 field = blocked_sum_vec3(
        line.samples,
        [&](std::int64_t i) {
            const double t = (static_cast<double>(i) + 0.5) * inv_n;
            const Vec3 d = at - (line.start + t * span);
            const double r = d.norm();
            require_separation(r, eps_singular, "finite_line_field");
            return q / (r * r * r) * d;
        },
        policy);
    return field;
}

Vec3 ac_effective_potential(const Vec3& moment, const Vec3& electric_field,
                            const UnitSystem& units) {
    return moment.cross(electric_field) / units.c;
}

}  // namespace acdual
