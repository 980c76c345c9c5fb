#pragma once

// Topological phase accumulated along a path around a field source.
//
// For a charge e circling a flux tube the phase is (e/hbar c) times the
// circulation of the source's vector potential; for a magnetic moment
// circling a line of charge it is (1/hbar c) times the circulation of
// mu x E. Both are evaluated by per-segment midpoint quadrature with dyadic
// adaptive refinement, converged on the whole-path total. The result depends
// only on the winding number about the source, which is what the analytic
// references assert.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "acdual/exec.hpp"
#include "acdual/fields.hpp"
#include "acdual/geometry.hpp"
#include "acdual/units.hpp"

namespace acdual {

/// Coupling of the circulating particle: its charge when the source supplies
/// a vector potential, its magnetic moment when the source supplies an
/// electric field.
struct ChargeCoupling {
    double charge{1.0};
};
struct MomentCoupling {
    Vec3 moment{0.0, 0.0, 1.0};
};
using Coupling = std::variant<ChargeCoupling, MomentCoupling>;

struct PhaseReport {
    /// Accumulated phase in radians.
    double phase{0.0};
    /// Winding number about the source (projection winding for line
    /// sources; 0 for dipole sources, whose phase is not topological).
    int winding{0};
    /// Sub-segments in the final quadrature level.
    std::int64_t segments_used{0};
    /// Last refinement delta of the whole-path total, in radians.
    double estimated_error{0.0};
    /// Closed-form reference when one exists for this source/coupling.
    std::optional<double> analytic_phase{};
    /// |phase - analytic_phase| when the reference exists.
    std::optional<double> analytic_deviation{};
    std::string source_tag{};
};

struct QuadratureOptions {
    double eps_singular{kDefaultEpsSingular};
    /// Winding-number on-path tolerance; < 0 selects 1e-9 * path diameter.
    double eps_on_path{-1.0};
    /// Hard cap on sub-segments per level; exceeding it throws NoConvergence.
    std::int64_t max_segments{std::int64_t{1} << 22};
    ExecPolicy policy{};
};

/// Default convergence tolerance, radians.
inline constexpr double kDefaultPhaseTol = 1e-8;

/// Accumulates the phase along `path` around `source`. Refinement stops when
/// the two-level total changes by less than tol (radians). Throws
/// SingularPoint when the path comes within eps_singular of the source,
/// ConfigError on a source/coupling mismatch, NoConvergence at the cap.
PhaseReport phase_along_path(const Path& path, const FieldSource& source,
                             const UnitSystem& units, const Coupling& coupling,
                             double tol = kDefaultPhaseTol, const QuadratureOptions& opts = {});

/// n e flux / (hbar c): the flux-tube phase for winding n.
double ab_phase_analytic(double flux, int winding, double charge, const UnitSystem& units);

/// n 4 pi mu lambda / (hbar c): the line-charge phase for winding n, with
/// the moment parallel to the line axis.
double ac_phase_analytic(double lambda, double moment_magnitude, int winding,
                         const UnitSystem& units);

struct InvarianceGroup {
    int winding{0};
    int count{0};
    double phase_min{0.0};
    double phase_max{0.0};
    double spread{0.0};
    std::optional<double> analytic_phase{};
    bool pass{false};
};

struct InvarianceSummary {
    std::vector<InvarianceGroup> groups;
    double tol{0.0};
    bool all_pass{false};
};

/// Groups loops by winding number about the source and reports the phase
/// spread within each group; a group passes when its spread is at most
/// 10 * tol. Loops of equal winding must agree on the phase regardless of
/// shape: that is the topological content of the effect.
InvarianceSummary topological_invariance_report(const std::vector<Path>& loops,
                                                const FieldSource& source,
                                                const UnitSystem& units,
                                                const Coupling& coupling,
                                                double tol = kDefaultPhaseTol,
                                                const QuadratureOptions& opts = {});

}  // namespace acdual
