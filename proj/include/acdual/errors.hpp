#pragma once

#include <stdexcept>
#include <string>

namespace acdual {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Field or potential evaluated inside the excluded region around a source.
struct SingularPoint : Error {
    using Error::Error;
};

/// Winding-number query point lies on (or within tolerance of) the path:
/// the enclosing topology is ill-posed.
struct PointOnPath : Error {
    using Error::Error;
};

/// Adaptive quadrature exceeded its segment cap without meeting tolerance.
struct NoConvergence : Error {
    using Error::Error;
};

/// Conditional relative phase requested on a branch with (near-)zero amplitude.
struct ZeroBranch : Error {
    using Error::Error;
};

/// Finite-difference step collapsed below the resolvable scale.
struct StepUnderflow : Error {
    using Error::Error;
};

/// Scenario configuration violates the schema; message carries the field path.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace acdual
