#include "acdual/dynamics.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace acdual {

namespace {

constexpr double kEpsMachine = std::numeric_limits<double>::epsilon();

double fd_step(double requested, double scale) {
    const double base = std::max(1.0, std::abs(scale));
    const double h = requested > 0.0 ? requested : std::cbrt(kEpsMachine) * base;
    if (h < 64.0 * kEpsMachine * base)
        throw StepUnderflow("force_neutral_el: finite-difference step " + std::to_string(h) +
                            " below resolvable scale");
    return h;
}

}  // namespace

void validate(const DynConfig& cfg, double eps_singular) {
    if (!(cfg.charged.mass > 0.0)) throw ConfigError("charged.mass: must be > 0");
    if (!(cfg.neutral.mass > 0.0)) throw ConfigError("neutral.mass: must be > 0");
    validate(cfg.units);
    const double sep = distance(cfg.charged.position, cfg.neutral.position);
    if (!(sep > eps_singular))
        throw SingularPoint("DynConfig: particle separation " + std::to_string(sep) +
                            " within eps_singular");
}

double interaction_term(const DynConfig& cfg, double eps_singular) {
    const Vec3 a = dipole_vector_potential(cfg.neutral.moment,
                                           cfg.charged.position - cfg.neutral.position,
                                           eps_singular);
    const Vec3 w = cfg.charged.velocity - cfg.neutral.velocity;
    return cfg.charged.charge / cfg.units.c * a.dot(w);
}

double lagrangian(const DynConfig& cfg, double eps_singular) {
    const double kin_charged = 0.5 * cfg.charged.mass * cfg.charged.velocity.norm2();
    const double kin_neutral = 0.5 * cfg.neutral.mass * cfg.neutral.velocity.norm2();
    return kin_charged + kin_neutral + interaction_term(cfg, eps_singular);
}

DynConfig duality_swap(const DynConfig& cfg) {
    DynConfig out = cfg;
    out.charged.position = cfg.neutral.position;
    out.charged.velocity = cfg.neutral.velocity;
    out.neutral.position = cfg.charged.position;
    out.neutral.velocity = cfg.charged.velocity;
    return out;
}

DynConfig galilean_boost(const DynConfig& cfg, const Vec3& u) {
    DynConfig out = cfg;
    out.charged.velocity = cfg.charged.velocity + u;
    out.neutral.velocity = cfg.neutral.velocity + u;
    return out;
}

Vec3 force_neutral_el(const DynConfig& cfg, std::span<const ChargedState> sources,
                      const ForceOptions& opts) {
    const NeutralState& n = cfg.neutral;
    const double inv_c = 1.0 / cfg.units.c;
    // Per-coordinate gradient steps scale with the coordinate, the time step
    // with unity; velocities are independent Euler-Lagrange coordinates and
    // are held fixed throughout.
    const double ht = fd_step(opts.fd_step, 1.0);
    const Vec3 hr{fd_step(opts.fd_step, n.position.x), fd_step(opts.fd_step, n.position.y),
                  fd_step(opts.fd_step, n.position.z)};
    return blocked_sum_vec3(
        static_cast<std::int64_t>(sources.size()),
        [&](std::int64_t i) {
            const ChargedState& s = sources[static_cast<std::size_t>(i)];
            const Vec3 w = s.velocity - n.velocity;

            // d/dt A along the instantaneous relative trajectory.
            const Vec3 d_plus = (s.position + (0.5 * ht) * s.velocity) -
                                (n.position + (0.5 * ht) * n.velocity);
            const Vec3 d_minus = (s.position - (0.5 * ht) * s.velocity) -
                                 (n.position - (0.5 * ht) * n.velocity);
            const Vec3 dA_dt = (dipole_vector_potential(n.moment, d_plus, opts.eps_singular) -
                                dipole_vector_potential(n.moment, d_minus, opts.eps_singular)) /
                               ht;

            // grad_R of A(r - R) . (v - V), central differences per coordinate.
            const auto g = [&](const Vec3& R) {
                return dipole_vector_potential(n.moment, s.position - R, opts.eps_singular)
                    .dot(w);
            };
            const Vec3 R = n.position;
            const Vec3 grad{
                (g({R.x + hr.x, R.y, R.z}) - g({R.x - hr.x, R.y, R.z})) / (2.0 * hr.x),
                (g({R.x, R.y + hr.y, R.z}) - g({R.x, R.y - hr.y, R.z})) / (2.0 * hr.y),
                (g({R.x, R.y, R.z + hr.z}) - g({R.x, R.y, R.z - hr.z})) / (2.0 * hr.z)};

            return (s.charge * inv_c) * (dA_dt + grad);
        },
        opts.policy);
}

Vec3 force_neutral_closed(const DynConfig& cfg, std::span<const ChargedState> sources,
                          const ForceOptions& opts) {
    const NeutralState& n = cfg.neutral;
    const double inv_c = 1.0 / cfg.units.c;
    return blocked_sum_vec3(
        static_cast<std::int64_t>(sources.size()),
        [&](std::int64_t i) {
            const ChargedState& s = sources[static_cast<std::size_t>(i)];
            const Vec3 w = s.velocity - n.velocity;
            const Vec3 b = dipole_field(n.moment, s.position - n.position, opts.eps_singular);
            return (-s.charge * inv_c) * w.cross(b);
        },
        opts.policy);
}

std::vector<ChargedState> sources_from_line(const FiniteChargeLine& line) {
    const Vec3 span = line.end - line.start;
    const double q = line.lambda * span.norm() / static_cast<double>(line.samples);
    std::vector<ChargedState> out;
    out.reserve(static_cast<std::size_t>(line.samples));
    for (std::int64_t i = 0; i < line.samples; ++i) {
        const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(line.samples);
        out.push_back({1.0, line.start + t * span, Vec3{}, q});
    }
    return out;
}

}  // namespace acdual
