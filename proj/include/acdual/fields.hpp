#pragma once

// Closed-form field evaluators, Gaussian units.
//
// Sources come in dual pairs: a fluxon (2D flux tube) circled by a charge,
// and a line of charge circled by a magnetic moment. The dipole vector
// potential mu x d / |d|^3 is the interaction kernel shared by both
// readings; its curl (the dipole B field) backs the closed-form force
// cross-check.

#include <cstdint>
#include <variant>

#include "acdual/errors.hpp"
#include "acdual/exec.hpp"
#include "acdual/units.hpp"
#include "acdual/vec.hpp"

namespace acdual {

/// Localized magnetic flux normal to the 2D plane (positive = out of plane).
struct Fluxon2D {
    double flux{0.0};
    Vec2 position{};
};

/// Point magnetic dipole.
struct Dipole {
    Vec3 moment{};
    Vec3 position{};
};

/// Infinite straight line of charge; axis_dir must be unit length.
struct InfiniteLineCharge {
    double lambda{0.0};
    Vec3 axis_point{};
    Vec3 axis_dir{0.0, 0.0, 1.0};
};

/// Straight charged segment discretized into `samples` equal midpoint
/// sub-segments, each carrying charge lambda * length / samples.
struct FiniteChargeLine {
    double lambda{0.0};
    Vec3 start{};
    Vec3 end{};
    std::int64_t samples{1024};
};

using FieldSource = std::variant<Fluxon2D, Dipole, InfiniteLineCharge, FiniteChargeLine>;

/// Enforces the source invariants (unit axis within 1e-12, samples >= 2,
/// distinct endpoints, finite values). Throws ConfigError.
void validate(const FieldSource& source);

const char* source_tag(const FieldSource& source);

/// A(d) = mu x d / |d|^3 for displacement d = r - R from the dipole.
/// Throws SingularPoint for |d| <= eps_singular.
Vec3 dipole_vector_potential(const Vec3& moment, const Vec3& d,
                             double eps_singular = kDefaultEpsSingular);

/// B(d) = (3 (mu.dhat) dhat - mu) / |d|^3, the curl of the dipole vector
/// potential away from the origin.
Vec3 dipole_field(const Vec3& moment, const Vec3& d, double eps_singular = kDefaultEpsSingular);

/// Pure-gauge-outside fluxon potential (flux/2pi) (-y, x) / |p|^2; its
/// circulation around any counterclockwise enclosing loop equals the flux.
Vec2 fluxon_vector_potential(double flux, const Vec2& p,
                             double eps_singular = kDefaultEpsSingular);

/// E = (2 lambda / rho) rho_hat of an infinite straight line charge.
Vec3 line_charge_field(const InfiniteLineCharge& line, const Vec3& at,
                       double eps_singular = kDefaultEpsSingular);

/// Direct Coulomb sum over the sampled sub-segment charges.
Vec3 finite_line_field(const FiniteChargeLine& line, const Vec3& at,
                       double eps_singular = kDefaultEpsSingular, const ExecPolicy& policy = {});

/// Effective vector potential coupling a moving magnetic moment to an
/// electric field: (mu x E) / c. Orientation convention: a counterclockwise
/// loop around a positive line charge with the moment along +axis
/// accumulates positive phase.
Vec3 ac_effective_potential(const Vec3& moment, const Vec3& electric_field,
                            const UnitSystem& units);

}  // namespace acdual
