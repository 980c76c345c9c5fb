#include "acdual/phase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace acdual {

namespace {

bool lex_less(const Vec3& a, const Vec3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

// Traversal-order normalization. A path and its reversal (or any cyclic
// rotation of a closed path) map to the same canonical vertex sequence, so
// their quadrature terms are summed in the identical order and reversal
// negates the result bit-exactly.
struct CanonicalPath {
    std::vector<Vec3> vertices;
    bool closed{true};
    bool flipped{false};
};

CanonicalPath canonicalize(const Path& path) {
    const auto n = static_cast<std::int64_t>(path.vertices.size());
    const auto at = [&](std::int64_t i) -> const Vec3& {
        return path.vertices[static_cast<std::size_t>(((i % n) + n) % n)];
    };

    if (!path.closed) {
        // Direction with the lexicographically smaller endpoint-first
        // sequence wins; palindromes keep the stored direction.
        bool backward = false;
        for (std::int64_t k = 0; k < n; ++k) {
            const Vec3& f = at(k);
            const Vec3& b = at(n - 1 - k);
            if (f == b) continue;
            backward = lex_less(b, f);
            break;
        }
        CanonicalPath out;
        out.closed = false;
        out.flipped = backward;
        out.vertices = path.vertices;
        if (backward) std::reverse(out.vertices.begin(), out.vertices.end());
        return out;
    }

    Vec3 min_vertex = path.vertices.front();
    for (const Vec3& v : path.vertices)
        if (lex_less(v, min_vertex)) min_vertex = v;

    std::int64_t best_start = -1;
    int best_dir = 1;
    const auto candidate_less = [&](std::int64_t s, int dir) {
        // Compare candidate traversal (s, dir) against the current best.
        for (std::int64_t k = 0; k < n; ++k) {
            const Vec3& a = at(s + dir * k);
            const Vec3& b = at(best_start + best_dir * k);
            if (a == b) continue;
            return lex_less(a, b);
        }
        return false;
    };
    for (std::int64_t s = 0; s < n; ++s) {
        if (!(at(s) == min_vertex)) continue;
        for (int dir : {1, -1}) {
            if (best_start < 0 || candidate_less(s, dir)) {
                best_start = s;
                best_dir = dir;
            }
        }
    }

    CanonicalPath out;
    out.closed = true;
    out.flipped = best_dir < 0;
    out.vertices.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) out.vertices.push_back(at(best_start + best_dir * k));
    return out;
}

// Closest approach of a segment to an infinite line (for the excluded-tube
// check around line-charge sources).
double segment_line_distance(const Vec3& a, const Vec3& b, const Vec3& line_point,
                             const Vec3& line_dir) {
    const Vec3 d1 = b - a;
    const Vec3& d2 = line_dir;  // unit
    const Vec3 r = a - line_point;
    const double a11 = d1.norm2();
    const double a12 = d1.dot(d2);
    const double det = a11 - a12 * a12;  // |d2| = 1
    double s;
    if (det > 1e-30 * std::max(a11, 1.0)) {
        s = std::clamp((a12 * r.dot(d2) - r.dot(d1)) / det, 0.0, 1.0);
    } else {
        s = 0.0;  // segment parallel to the line
    }
    const Vec3 p = a + s * d1;
    const Vec3 rp = p - line_point;
    return (rp - rp.dot(d2) * d2).norm();
}

// Closest approach between two segments (Ericson-style clamped solve).
double segment_segment_distance(const Vec3& p1, const Vec3& q1, const Vec3& p2, const Vec3& q2) {
    const Vec3 d1 = q1 - p1;
    const Vec3 d2 = q2 - p2;
    const Vec3 r = p1 - p2;
    const double a = d1.norm2();
    const double e = d2.norm2();
    const double f = d2.dot(r);
    double s = 0.0, t = 0.0;
    if (a <= 1e-30 && e <= 1e-30) return r.norm();
    if (a <= 1e-30) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        const double c = d1.dot(r);
        if (e <= 1e-30) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            const double b = d1.dot(d2);
            const double denom = a * e - b * b;
            if (denom > 1e-30 * a * e) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
            t = (b * s + f) / e;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    return ((p1 + s * d1) - (p2 + t * d2)).norm();
}

double min_distance_to_source(const Path& path, const FieldSource& source) {
    double best = std::numeric_limits<double>::infinity();
    const std::int64_t nseg = segment_count(path);
    for (std::int64_t i = 0; i < nseg; ++i) {
        const auto [a, b] = segment(path, i);
        const double d = std::visit(
            [&](const auto& s) {
                using S = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<S, Fluxon2D>) {
                    return segment_segment_distance(a, b, Vec3{s.position}, Vec3{s.position});
                } else if constexpr (std::is_same_v<S, Dipole>) {
                    return segment_segment_distance(a, b, s.position, s.position);
                } else if constexpr (std::is_same_v<S, InfiniteLineCharge>) {
                    return segment_line_distance(a, b, s.axis_point, s.axis_dir);
                } else {
                    return segment_segment_distance(a, b, s.start, s.end);
                }
            },
            source);
        best = std::min(best, d);
    }
    return best;
}

// Effective vector potential whose circulation, divided by hbar, is the
// phase. Dispatch happens once; the per-point evaluator stays inlined in
// the quadrature loop.
template <typename Field>
double quadrature_total(const CanonicalPath& cpath, std::int64_t level, Field&& a_eff,
                        const ExecPolicy& policy) {
    const auto n = static_cast<std::int64_t>(cpath.vertices.size());
    const std::int64_t nseg = cpath.closed ? n : n - 1;
    const std::int64_t pieces = std::int64_t{1} << level;
    const double inv_pieces = 1.0 / static_cast<double>(pieces);
    return blocked_sum(
        nseg * pieces,
        [&](std::int64_t j) {
            const std::int64_t seg = j >> level;
            const std::int64_t sub = j & (pieces - 1);
            const Vec3& a = cpath.vertices[static_cast<std::size_t>(seg)];
            const Vec3& b = cpath.vertices[static_cast<std::size_t>((seg + 1) % n)];
            const Vec3 dl = (b - a) * inv_pieces;
            const Vec3 mid = a + (static_cast<double>(sub) + 0.5) * inv_pieces * (b - a);
            return a_eff(mid).dot(dl);
        },
        policy);
}

struct QuadratureResult {
    double circulation{0.0};
    std::int64_t segments_used{0};
    double estimated_error{0.0};
};

template <typename Field>
QuadratureResult adaptive_quadrature(const Path& path, Field&& a_eff, double tol_phase,
                                     double hbar, const QuadratureOptions& opts) {
    const CanonicalPath cpath = canonicalize(path);
    const auto n = static_cast<std::int64_t>(cpath.vertices.size());
    const std::int64_t nseg = cpath.closed ? n : n - 1;
    if (nseg > opts.max_segments)
        throw NoConvergence("phase_along_path: path has more segments than the cap");

    const double sign = cpath.flipped ? -1.0 : 1.0;
    double prev = quadrature_total(cpath, 0, a_eff, opts.policy);
    for (std::int64_t level = 1;; ++level) {
        if ((nseg << level) > opts.max_segments)
            throw NoConvergence("phase_along_path: no convergence within " +
                                std::to_string(opts.max_segments) + " segments");
        const double cur = quadrature_total(cpath, level, a_eff, opts.policy);
        const double delta = std::abs(cur - prev) / hbar;
        if (delta < tol_phase)
            return {sign * cur, nseg << level, delta};
        prev = cur;
    }
}

}  // namespace

double ab_phase_analytic(double flux, int winding, double charge, const UnitSystem& units) {
    return winding * charge * flux / (units.hbar * units.c);
}

double ac_phase_analytic(double lambda, double moment_magnitude, int winding,
                         const UnitSystem& units) {
    return winding * 4.0 * std::numbers::pi * moment_magnitude * lambda / (units.hbar * units.c);
}

PhaseReport phase_along_path(const Path& path, const FieldSource& source,
                             const UnitSystem& units, const Coupling& coupling, double tol,
                             const QuadratureOptions& opts) {
    validate(path);
    validate(source);
    validate(units);
    if (!(tol > 0.0)) throw ConfigError("tol: must be > 0");

    const double clearance = min_distance_to_source(path, source);
    if (!(clearance > opts.eps_singular))
        throw SingularPoint("phase_along_path: path approaches the source within " +
                            std::to_string(opts.eps_singular));

    PhaseReport report;
    report.source_tag = source_tag(source);

    QuadratureResult q;
    if (const auto* fluxon = std::get_if<Fluxon2D>(&source)) {
        const auto* cc = std::get_if<ChargeCoupling>(&coupling);
        if (cc == nullptr)
            throw ConfigError("coupling: fluxon source requires a charge coupling");
        if (path.dimension != 2)
            throw ConfigError("path: fluxon source requires a 2D path");
        const double scale = cc->charge / units.c;
        q = adaptive_quadrature(
            path,
            [&](const Vec3& x) {
                const Vec2 a = fluxon_vector_potential(fluxon->flux, x.xy() - fluxon->position,
                                                       opts.eps_singular);
                return Vec3{scale * a.x, scale * a.y, 0.0};
            },
            tol, units.hbar, opts);
        report.winding = winding_number(path, fluxon->position, opts.eps_on_path);
        report.analytic_phase = ab_phase_analytic(fluxon->flux, report.winding, cc->charge, units);
    } else if (const auto* dipole = std::get_if<Dipole>(&source)) {
        const auto* cc = std::get_if<ChargeCoupling>(&coupling);
        if (cc == nullptr)
            throw ConfigError("coupling: dipole source requires a charge coupling");
        const double scale = cc->charge / units.c;
        q = adaptive_quadrature(
            path,
            [&](const Vec3& x) {
                return scale *
                       dipole_vector_potential(dipole->moment, x - dipole->position,
                                               opts.eps_singular);
            },
            tol, units.hbar, opts);
        // The dipole potential is not curl-free, so no winding topology and
        // no closed-form reference apply.
        report.winding = 0;
    } else if (const auto* line = std::get_if<InfiniteLineCharge>(&source)) {
        const auto* mc = std::get_if<MomentCoupling>(&coupling);
        if (mc == nullptr)
            throw ConfigError("coupling: line-charge source requires a moment coupling");
        q = adaptive_quadrature(
            path,
            [&](const Vec3& x) {
                return ac_effective_potential(
                    mc->moment, line_charge_field(*line, x, opts.eps_singular), units);
            },
            tol, units.hbar, opts);
        report.winding = winding_about_axis(path, line->axis_point, line->axis_dir,
                                            opts.eps_on_path);
        const double axial = mc->moment.dot(line->axis_dir);
        if ((mc->moment - axial * line->axis_dir).norm() <= 1e-9 * mc->moment.norm())
            report.analytic_phase = ac_phase_analytic(line->lambda, axial, report.winding, units);
    } else {
        const auto& fline = std::get<FiniteChargeLine>(source);
        const auto* mc = std::get_if<MomentCoupling>(&coupling);
        if (mc == nullptr)
            throw ConfigError("coupling: line-charge source requires a moment coupling");
        q = adaptive_quadrature(
            path,
            [&](const Vec3& x) {
                return ac_effective_potential(
                    mc->moment, finite_line_field(fline, x, opts.eps_singular, opts.policy),
                    units);
            },
            tol, units.hbar, opts);
        const Vec3 axis = (fline.end - fline.start).normalized();
        const Vec3 midpoint = 0.5 * (fline.start + fline.end);
        report.winding = winding_about_axis(path, midpoint, axis, opts.eps_on_path);
        const double axial = mc->moment.dot(axis);
        if ((mc->moment - axial * axis).norm() <= 1e-9 * mc->moment.norm()) {
            // Reference is the infinite-line limit; the finite-line phase
            // converges to it as the line grows.
            report.analytic_phase = ac_phase_analytic(fline.lambda, axial, report.winding, units);
        }
    }

    report.phase = q.circulation / units.hbar;
    report.segments_used = q.segments_used;
    report.estimated_error = q.estimated_error;
    if (report.analytic_phase)
        report.analytic_deviation = std::abs(report.phase - *report.analytic_phase);
    return report;
}

InvarianceSummary topological_invariance_report(const std::vector<Path>& loops,
                                                const FieldSource& source,
                                                const UnitSystem& units,
                                                const Coupling& coupling, double tol,
                                                const QuadratureOptions& opts) {
    std::map<int, InvarianceGroup> groups;
    for (const Path& loop : loops) {
        const PhaseReport r = phase_along_path(loop, source, units, coupling, tol, opts);
        auto [it, fresh] = groups.try_emplace(r.winding);
        InvarianceGroup& g = it->second;
        if (fresh) {
            g.winding = r.winding;
            g.phase_min = g.phase_max = r.phase;
            g.analytic_phase = r.analytic_phase;
        } else {
            g.phase_min = std::min(g.phase_min, r.phase);
            g.phase_max = std::max(g.phase_max, r.phase);
        }
        g.count += 1;
    }
    InvarianceSummary summary;
    summary.tol = tol;
    summary.all_pass = true;
    for (auto& [winding, g] : groups) {
        g.spread = g.phase_max - g.phase_min;
        g.pass = g.spread <= 10.0 * tol;
        summary.all_pass = summary.all_pass && g.pass;
        summary.groups.push_back(g);
    }
    return summary;
}

}  // namespace acdual
