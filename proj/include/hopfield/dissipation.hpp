// dissipation.hpp — Global-master-equation rates, decay rates and polariton populations

#pragma once

#include "hopfield/polariton.hpp"
#include "hopfield/system_params.hpp"

namespace hopfield {

// The four Lindblad rates of the global master equation. alpha_{1,2} drive the
// upper polariton (emission/absorption), beta_{1,2} the lower one.
struct RateSet {
    double alpha1{0.0};
    double alpha2{0.0};
    double beta1{0.0};
    double beta2{0.0};
};

// Temperature-independent polariton decay rates, Gamma_x = alpha1 - alpha2,
// Gamma_y = beta1 - beta2.
struct DecayRates {
    double gamma_x{0.0};
    double gamma_y{0.0};
};

struct PolaritonPopulations {
    double upper{0.0};  // <A_L^dag A_L>
    double lower{0.0};  // <A_R^dag A_R>
};

// Bose-Einstein occupation 1/(e^{omega/T} - 1), evaluated via expm1 so the
// omega/T << 1 regime keeps full relative accuracy. Returns 0 at T = 0 and for
// omega/T > 700 (below double-precision underflow). Throws DomainError for
// omega <= 0.
double bose_einstein(double omega, double T);

RateSet gme_rates(const SystemParams& p);

DecayRates decay_rates(const SystemParams& p);

// Closed-form overlays for the decay rates: the weak-coupling quadratic law
// 4 g^2 omega_c^2 gamma_L / (omega_c^2 - omega_b^2)^2 (DomainError at resonance)
// and the deep-strong-coupling tail
// omega_b^2 gamma_L sqrt(omega_c omega_b) / (g (omega_c^2 + omega_b^2)).
// Both are stated for a disconnected right bath and a flat spectral density and
// are evaluated as printed.
double purcell_weak_asymptote(const SystemParams& p);
double purcell_dsc_asymptote(const SystemParams& p);

// Time-dependent mean polariton occupations from the vacuum initial condition:
// n_j(t) = pump/decay * (1 - e^{-2 decay t}). Throws DegenerateError when both
// bath couplings vanish (no relaxation). A polariton whose decay rate is zero
// stays at its initial population 0.
PolaritonPopulations polariton_populations(const SystemParams& p, double t);

// t -> infinity limit: alpha2/(alpha1-alpha2), beta2/(beta1-beta2).
PolaritonPopulations steady_populations(const SystemParams& p);
PolaritonPopulations steady_populations(const RateSet& rates);

} // namespace hopfield
