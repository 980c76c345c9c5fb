#include "acdual/entangle.hpp"

#include <cmath>
#include <numbers>

namespace acdual {

namespace {

constexpr double kZeroBranchTol = 1e-14;

}  // namespace

double TwoPacketState::norm() const {
    double sum = 0.0;
    for (const Amplitude& a : amplitudes_) sum += std::norm(a);
    return std::sqrt(sum);
}

TwoPacketState make_in_state() {
    return TwoPacketState({{{0.5, 0.0}, {0.5, 0.0}, {0.5, 0.0}, {0.5, 0.0}}});
}

TwoPacketState apply_scattering(const TwoPacketState& state, double phi) {
    TwoPacketState out = state;
    out.amp(2, 2) *= std::polar(1.0, phi);
    return out;
}

double principal_phase(double phi) {
    double r = std::remainder(phi, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
    return r;
}

double conditional_relative_phase(const TwoPacketState& state, Subsystem condition_on,
                                  int branch) {
    if (branch != 1 && branch != 2) throw ConfigError("branch: must be 1 or 2");
    const auto [first, second] = condition_on == Subsystem::Fluxon
                                     ? std::pair{state.amp(branch, 1), state.amp(branch, 2)}
                                     : std::pair{state.amp(1, branch), state.amp(2, branch)};
    if (std::abs(first) < kZeroBranchTol || std::abs(second) < kZeroBranchTol)
        throw ZeroBranch("conditional_relative_phase: conditioned branch amplitude below 1e-14");
    return principal_phase(std::arg(second * std::conj(first)));
}

double rewrite_identity_residual(const TwoPacketState& state) {
    // Electron-conditioned decomposition: |Psi> = sum_e w_e |chi_e> |e>,
    // w_e the branch weight and |chi_e> the normalized conditional fluxon
    // state. Reassembling must reproduce the original amplitudes.
    TwoPacketState rebuilt;
    for (int e = 1; e <= 2; ++e) {
        const std::complex<double> f1 = state.amp(1, e);
        const std::complex<double> f2 = state.amp(2, e);
        const double w = std::sqrt(std::norm(f1) + std::norm(f2));
        if (w == 0.0) continue;
        rebuilt.amp(1, e) = w * (f1 / w);
        rebuilt.amp(2, e) = w * (f2 / w);
    }
    double diff2 = 0.0;
    for (int f = 1; f <= 2; ++f)
        for (int e = 1; e <= 2; ++e) diff2 += std::norm(rebuilt.amp(f, e) - state.amp(f, e));
    return std::sqrt(diff2);
}

std::pair<double, double> interference_probabilities(const TwoPacketState& state,
                                                     Subsystem measure, double analyzer_phase) {
    // <analyzer_pm| = (<1| +- e^{-i alpha} <2|) / sqrt(2) on the chosen
    // subsystem; the partner subsystem is traced over.
    const std::complex<double> conj_factor = std::polar(1.0, -analyzer_phase);
    double p_plus = 0.0;
    double p_minus = 0.0;
    for (int partner = 1; partner <= 2; ++partner) {
        const auto [one, two] = measure == Subsystem::Electron
                                    ? std::pair{state.amp(partner, 1), state.amp(partner, 2)}
                                    : std::pair{state.amp(1, partner), state.amp(2, partner)};
        p_plus += 0.5 * std::norm(one + conj_factor * two);
        p_minus += 0.5 * std::norm(one - conj_factor * two);
    }
    return {p_plus, p_minus};
}

}  // namespace acdual
