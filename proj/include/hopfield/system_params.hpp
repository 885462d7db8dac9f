// system_params.hpp — Scenario parameters for the two-mode junction

#pragma once

#include "hopfield/errors.hpp"

namespace hopfield {

// Bath spectral density policy. Flat is the wideband limit gamma(omega) = gamma;
// Ohmic scales linearly, gamma(omega) = gamma * omega / omega_c.
enum class SpectralDensity { Flat, Ohmic };

struct BathSpec {
    double temperature{0.0};  // k_B = 1, same energy units as the frequencies
    double gamma{0.0};        // bath coupling strength
    SpectralDensity spectral_density{SpectralDensity::Flat};
};

// Single source of truth for a scenario. Units: hbar = k_B = 1, energies in
// multiples of omega_c. The diamagnetic term is never stored: it is always
// locked to g^2/omega_b (TRK sum rule).
struct SystemParams {
    double omega_c{1.0};  // photon mode frequency
    double omega_b{1.0};  // matter mode frequency
    double g{0.0};        // isotropic light-matter coupling
    double gamma_L{0.0};  // left (photon-side) bath coupling
    double gamma_R{0.0};  // right (matter-side) bath coupling
    double T_L{0.0};      // left bath temperature
    double T_R{0.0};      // right bath temperature
    SpectralDensity spectral_density{SpectralDensity::Flat};

    // Throws DomainError on any violated invariant.
    void validate() const;

    BathSpec left_bath() const { return {T_L, gamma_L, spectral_density}; }
    BathSpec right_bath() const { return {T_R, gamma_R, spectral_density}; }
};

// gamma_lambda(omega) under the bath's spectral-density policy.
double bath_coupling(const BathSpec& bath, double omega, double omega_c);

} // namespace hopfield
