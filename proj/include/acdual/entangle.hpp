#pragma once

// Two-packet x two-packet state algebra.
//
// A fluxon in a superposition of two wave packets |f1>, |f2> meets a
// particle in a superposition |e1>, |e2>. Scattering multiplies exactly one
// joint branch by a phase factor, which entangles the pair: conditioned on
// either subsystem's branch, the partner carries a relative phase, and both
// factorizations of the same state read out the same phase. Packets are
// treated as exactly orthonormal basis branches.

#include <array>
#include <complex>
#include <utility>

#include "acdual/errors.hpp"

namespace acdual {

enum class Subsystem { Fluxon, Electron };

/// Four complex amplitudes over the basis {f1,f2} x {e1,e2}.
class TwoPacketState {
  public:
    using Amplitude = std::complex<double>;

    TwoPacketState() = default;
    explicit TwoPacketState(const std::array<Amplitude, 4>& amplitudes)
        : amplitudes_(amplitudes) {}

    /// f, e in {1, 2}.
    const Amplitude& amp(int f, int e) const {
        return amplitudes_[static_cast<std::size_t>((f - 1) * 2 + (e - 1))];
    }
    Amplitude& amp(int f, int e) {
        return amplitudes_[static_cast<std::size_t>((f - 1) * 2 + (e - 1))];
    }

    const std::array<Amplitude, 4>& amplitudes() const { return amplitudes_; }

    double norm() const;

  private:
    std::array<Amplitude, 4> amplitudes_{};
};

/// The product state (|f1> + |f2>)(|e1> + |e2>) / 2: all four amplitudes 1/2.
TwoPacketState make_in_state();

/// Multiplies the (f2, e2) amplitude by e^{i phi}: the branch where the
/// particle's path encloses the partner picks up the scattering phase.
TwoPacketState apply_scattering(const TwoPacketState& state, double phi);

/// Relative phase of the partner subsystem conditioned on one branch:
/// conditioning on fluxon branch f returns arg(amp(f,2) / amp(f,1));
/// conditioning on electron branch e returns arg(amp(2,e) / amp(1,e)).
/// Result in (-pi, pi], ties at -pi rounded to +pi. Throws ZeroBranch when
/// either conditioned amplitude has modulus below 1e-14.
double conditional_relative_phase(const TwoPacketState& state, Subsystem condition_on,
                                  int branch);

/// Rebuilds the state from its electron-conditioned decomposition (branch
/// weights times normalized conditional fluxon states) and returns the norm
/// of the difference from the original. The regrouping is an exact algebraic
/// identity, so the residual is rounding-level for every state.
double rewrite_identity_residual(const TwoPacketState& state);

/// Projects the chosen subsystem onto (|1> +- e^{i alpha} |2>) / sqrt(2) and
/// returns the two outcome probabilities (plus first); they sum to 1.
std::pair<double, double> interference_probabilities(const TwoPacketState& state,
                                                     Subsystem measure, double analyzer_phase);

/// Wraps an angle into (-pi, pi], with the -pi tie mapped to +pi.
double principal_phase(double phi);

}  // namespace acdual
