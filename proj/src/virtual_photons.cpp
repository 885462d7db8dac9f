// virtual_photons.cpp — Ground-state and steady-state virtual photon populations

#include "hopfield/virtual_photons.hpp"

#include <algorithm>
#include <limits>

#include "hopfield/dissipation.hpp"
#include "hopfield/polariton.hpp"

namespace hopfield {

namespace {

void require_resonance(const SystemParams& p, const char* who) {
    if (p.omega_c != p.omega_b)
        throw DomainError(std::string(who) + ": stated at resonance omega_c = omega_b only");
}

} // namespace

double virtual_photons_ground(const SystemParams& p) {
    const BogoliubovCoefficients f = bogoliubov_coefficients(p);
    return f.f2 * f.f2 + f.f4 * f.f4;
}

double virtual_photons_thermal(const SystemParams& p) {
    if (p.gamma_L == 0.0 && p.gamma_R == 0.0)
        throw DegenerateError("virtual_photons_thermal: no bath coupling, no steady state");
    const BogoliubovCoefficients f = bogoliubov_coefficients(p);
    const PolaritonPopulations n = steady_populations(p);
    return n.upper * (f.f1 * f.f1 + f.f2 * f.f2) +
           n.lower * (f.f3 * f.f3 + f.f4 * f.f4) + f.f2 * f.f2 + f.f4 * f.f4;
}

double asymptote_weak(const SystemParams& p) {
    p.validate();
    require_resonance(p, "asymptote_weak");
    const double x = p.g / p.omega_c;
    return 0.25 * x * x;
}

double asymptote_intermediate(const SystemParams& p) {
    p.validate();
    require_resonance(p, "asymptote_intermediate");
    const double x = p.g / p.omega_c;
    return x / 6.0 + x * x / 11.0 - 0.05;
}

double asymptote_dsc(const SystemParams& p) {
    p.validate();
    require_resonance(p, "asymptote_dsc");
    return 0.5 * p.g / p.omega_c - 0.5;
}

Regime regime_label(const SystemParams& p) {
    p.validate();
    const double ratio = p.g / std::min(p.omega_c, p.omega_b);
    if (ratio < 0.1) return Regime::Weak;
    if (ratio <= 1.0) return Regime::USC;
    return Regime::DSC;
}

VirtualPhotonReport virtual_photon_report(const SystemParams& p) {
    VirtualPhotonReport rep;
    rep.exact = virtual_photons_ground(p);
    rep.thermal = (p.gamma_L == 0.0 && p.gamma_R == 0.0) ? rep.exact
                                                         : virtual_photons_thermal(p);
    if (p.omega_c == p.omega_b) {
        rep.weak_approx = asymptote_weak(p);
        rep.intermediate_approx = asymptote_intermediate(p);
        rep.dsc_approx = asymptote_dsc(p);
    } else {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        rep.weak_approx = rep.intermediate_approx = rep.dsc_approx = nan;
    }
    rep.regime_label = regime_label(p);
    return rep;
}

} // namespace hopfield
