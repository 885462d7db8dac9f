// virtual_photons.hpp — Bare-mode populations in the interacting ground and steady states

#pragma once

#include "hopfield/system_params.hpp"

namespace hopfield {

enum class Regime { Weak, USC, DSC };

struct VirtualPhotonReport {
    double exact{0.0};                // f2^2 + f4^2 (ground state, any coupling)
    double thermal{0.0};              // steady-state value at the scenario temperatures
    double weak_approx{0.0};          // (g/omega)^2/4          (resonant closed form)
    double intermediate_approx{0.0};  // g/(6 omega) + g^2/(11 omega^2) - 1/20
    double dsc_approx{0.0};           // g/(2 omega) - 1/2
    Regime regime_label{Regime::Weak};
};

// Ground-state photon population of the bare left mode, f2^2 + f4^2.
// Equals the bare right-mode population (TRK-induced symmetry).
double virtual_photons_ground(const SystemParams& p);

// Steady-state bare-mode population with the polariton occupations at their
// t -> infinity values. Throws DegenerateError when both bath couplings vanish.
double virtual_photons_thermal(const SystemParams& p);

// Resonant closed-form approximations (DomainError when omega_c != omega_b).
double asymptote_weak(const SystemParams& p);
double asymptote_intermediate(const SystemParams& p);
double asymptote_dsc(const SystemParams& p);

// Coupling-regime label from g/min(omega_c, omega_b): [0, 0.1) weak,
// [0.1, 1] ultrastrong, (1, inf) deep-strong.
Regime regime_label(const SystemParams& p);

// Aggregated report. Off resonance the three approximation fields are NaN
// (the strict operations above throw instead); with no baths the thermal field
// falls back to the ground-state value.
VirtualPhotonReport virtual_photon_report(const SystemParams& p);

} // namespace hopfield
