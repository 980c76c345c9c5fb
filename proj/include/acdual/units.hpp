#pragma once

// Gaussian units throughout; desk-scale numerics default to hbar = c = 1.

#include <cmath>

#include "acdual/errors.hpp"

namespace acdual {

struct UnitSystem {
    double hbar{1.0};
    double c{1.0};
};

inline void validate(const UnitSystem& u) {
    if (!(std::isfinite(u.hbar) && u.hbar > 0.0))
        throw ConfigError("units.hbar: must be finite and > 0");
    if (!(std::isfinite(u.c) && u.c > 0.0))
        throw ConfigError("units.c: must be finite and > 0");
}

/// Default excluded-region radius around line/point sources, in scenario
/// length units (absolute; configurable per scenario).
inline constexpr double kDefaultEpsSingular = 1e-9;

}  // namespace acdual
