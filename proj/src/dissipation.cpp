// dissipation.cpp — Lindblad rates, decay rates, Purcell asymptotes, populations

#include "hopfield/dissipation.hpp"

#include <cmath>

namespace hopfield {

double bose_einstein(double omega, double T) {
    if (!(omega > 0.0)) throw DomainError("bose_einstein: omega must be > 0");
    if (T <= 0.0) return 0.0;
    const double x = omega / T;
    if (x > 700.0) return 0.0;  // below double-precision underflow
    return 1.0 / std::expm1(x);
}

RateSet gme_rates(const SystemParams& p) {
    p.validate();
    const PolaritonSpectrum spec = polariton_frequencies(p);
    const BogoliubovCoefficients f = bogoliubov_coefficients(p, spec);
    const BathSpec left = p.left_bath();
    const BathSpec right = p.right_bath();

    const double gLx = bath_coupling(left, spec.omega_x, p.omega_c) * f.lx_weight();
    const double gRx = bath_coupling(right, spec.omega_x, p.omega_c) * f.rx_weight();
    const double gLy = bath_coupling(left, spec.omega_y, p.omega_c) * f.ly_weight();
    const double gRy = bath_coupling(right, spec.omega_y, p.omega_c) * f.ry_weight();

    const double nLx = bose_einstein(spec.omega_x, p.T_L);
    const double nRx = bose_einstein(spec.omega_x, p.T_R);
    const double nLy = bose_einstein(spec.omega_y, p.T_L);
    const double nRy = bose_einstein(spec.omega_y, p.T_R);

    RateSet r;
    r.alpha1 = gLx * (nLx + 1.0) + gRx * (nRx + 1.0);
    r.alpha2 = gLx * nLx + gRx * nRx;
    r.beta1 = gLy * (nLy + 1.0) + gRy * (nRy + 1.0);
    r.beta2 = gLy * nLy + gRy * nRy;
    return r;
}

DecayRates decay_rates(const SystemParams& p) {
    p.validate();
    const PolaritonSpectrum spec = polariton_frequencies(p);
    const BogoliubovCoefficients f = bogoliubov_coefficients(p, spec);
    const BathSpec left = p.left_bath();
    const BathSpec right = p.right_bath();

    DecayRates d;
    d.gamma_x = bath_coupling(left, spec.omega_x, p.omega_c) * f.lx_weight() +
                bath_coupling(right, spec.omega_x, p.omega_c) * f.rx_weight();
    d.gamma_y = bath_coupling(left, spec.omega_y, p.omega_c) * f.ly_weight() +
                bath_coupling(right, spec.omega_y, p.omega_c) * f.ry_weight();
    return d;
}

double purcell_weak_asymptote(const SystemParams& p) {
    p.validate();
    if (p.omega_c == p.omega_b)
        throw DomainError("purcell_weak_asymptote: undefined at resonance");
    const double delta = p.omega_c * p.omega_c - p.omega_b * p.omega_b;
    return 4.0 * p.g * p.g * p.omega_c * p.omega_c * p.gamma_L / (delta * delta);
}

double purcell_dsc_asymptote(const SystemParams& p) {
    p.validate();
    return p.omega_b * p.omega_b * p.gamma_L * std::sqrt(p.omega_c * p.omega_b) /
           (p.g * (p.omega_c * p.omega_c + p.omega_b * p.omega_b));
}

namespace {

double relaxed_population(double pump, double decay, double t) {
    // pump = alpha2 (absorption), decay = alpha1 - alpha2 = Gamma. A channel
    // with Gamma = 0 also has pump = 0 and stays in the vacuum.
    if (decay <= 0.0) return 0.0;
    return pump / decay * (-std::expm1(-2.0 * decay * t));
}

} // namespace

PolaritonPopulations polariton_populations(const SystemParams& p, double t) {
    if (t < 0.0) throw DomainError("polariton_populations: t must be >= 0");
    if (p.gamma_L == 0.0 && p.gamma_R == 0.0)
        throw DegenerateError("polariton_populations: no bath coupling, no relaxation");
    const RateSet r = gme_rates(p);
    return {relaxed_population(r.alpha2, r.alpha1 - r.alpha2, t),
            relaxed_population(r.beta2, r.beta1 - r.beta2, t)};
}

PolaritonPopulations steady_populations(const RateSet& r) {
    PolaritonPopulations n;
    n.upper = (r.alpha1 > r.alpha2) ? r.alpha2 / (r.alpha1 - r.alpha2) : 0.0;
    n.lower = (r.beta1 > r.beta2) ? r.beta2 / (r.beta1 - r.beta2) : 0.0;
    return n;
}

PolaritonPopulations steady_populations(const SystemParams& p) {
    if (p.gamma_L == 0.0 && p.gamma_R == 0.0)
        throw DegenerateError("steady_populations: no bath coupling, no steady state");
    return steady_populations(gme_rates(p));
}

} // namespace hopfield
