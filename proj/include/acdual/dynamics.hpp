#pragma once

// Two-body Lagrangian of a charge and a neutral magnetic moment, its
// exchange (duality) symmetry, Galilean behavior, and the force on the
// neutral particle.
//
//   L = 1/2 m v^2 + 1/2 M V^2 + (e/c) A(r - R) . (v - V),
//   A(d) = mu x d / |d|^3.
//
// L depends on velocities only through v - V, so it is invariant under an
// instantaneous boost of both particles, and it is symmetric under the
// interchange of (r, v) with (R, V): the same interaction serves a charge
// circling a flux line and a moment circling a charge line.
//
// The force on the neutral particle comes from Euler-Lagrange applied to
// the summed interaction, evaluated by central finite differences, with an
// independent closed-form reduction F = -(e/c) sum_i (v_i - V) x B(r_i - R)
// as a mutual cross-check.

#include <optional>
#include <span>
#include <vector>

#include "acdual/exec.hpp"
#include "acdual/fields.hpp"
#include "acdual/units.hpp"
#include "acdual/vec.hpp"

namespace acdual {

struct ChargedState {
    double mass{1.0};
    Vec3 position{};
    Vec3 velocity{};
    double charge{1.0};
};

struct NeutralState {
    double mass{1.0};
    Vec3 position{};
    Vec3 velocity{};
    Vec3 moment{0.0, 0.0, 1.0};
};

struct DynConfig {
    ChargedState charged{};
    NeutralState neutral{};
    UnitSystem units{};
};

/// Checks masses > 0 and particle separation > eps_singular.
void validate(const DynConfig& cfg, double eps_singular = kDefaultEpsSingular);

/// The full Lagrangian at the configured kinematic state.
double lagrangian(const DynConfig& cfg, double eps_singular = kDefaultEpsSingular);

/// (e/c) A(r - R) . (v - V), the velocity-dependent coupling alone.
double interaction_term(const DynConfig& cfg, double eps_singular = kDefaultEpsSingular);

/// Exchanges (r, v) with (R, V); masses, charge, moment, units untouched.
DynConfig duality_swap(const DynConfig& cfg);

/// Adds u to both velocities; positions unchanged (instantaneous boost).
DynConfig galilean_boost(const DynConfig& cfg, const Vec3& u);

struct ForceOptions {
    double eps_singular{kDefaultEpsSingular};
    /// Central-difference step; <= 0 selects eps_machine^(1/3) * max(1, |scale|)
    /// per differentiated coordinate.
    double fd_step{0.0};
    ExecPolicy policy{};
};

/// M dV/dt on the neutral particle from Euler-Lagrange finite differences of
/// the summed interaction:
///   F = sum_i (e_i/c) [ d/dt A(r_i - R) + grad_R (A(r_i - R) . (v_i - V)) ].
/// d/dt differences A along the instantaneous relative trajectory with
/// velocities held fixed. Throws StepUnderflow if the step collapses below
/// 64 * eps_machine * scale.
Vec3 force_neutral_el(const DynConfig& cfg, std::span<const ChargedState> sources,
                      const ForceOptions& opts = {});

/// Closed-form reduction of the same Euler-Lagrange force,
/// F = -(e/c) sum_i (v_i - V) x B(r_i - R); no finite differences.
Vec3 force_neutral_closed(const DynConfig& cfg, std::span<const ChargedState> sources,
                          const ForceOptions& opts = {});

/// The sampled sub-segment charges of a finite line as static point sources.
std::vector<ChargedState> sources_from_line(const FiniteChargeLine& line);

}  // namespace acdual
