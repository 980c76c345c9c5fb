#pragma once

// Deterministic random draws for property tests and the bundled suite.
// mt19937_64 has a standard-specified sequence and the uniform mapping below
// uses only the raw bits, so draws are identical across platforms and
// standard libraries.

#include <cstdint>
#include <random>

#include "acdual/vec.hpp"

namespace acdual {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1) with 53 random mantissa bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t bits() { return gen_(); }

    /// Uniform over the solid unit ball (rejection sampling).
    Vec3 in_unit_ball() {
        for (;;) {
            Vec3 v{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            if (v.norm2() <= 1.0) return v;
        }
    }

    Vec3 on_unit_sphere() {
        for (;;) {
            Vec3 v = in_unit_ball();
            const double n = v.norm();
            if (n > 1e-3) return v / n;
        }
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace acdual
