// transport.cpp — GME/LME heat currents and thermodynamic audits

#include "hopfield/transport.hpp"

#include <algorithm>
#include <cmath>

#include "hopfield/polariton.hpp"

namespace hopfield {

namespace {

struct ChannelGeometry {
    double omega;       // polariton frequency
    double gL, gR;      // bath couplings at that frequency
    double left_trig;   // sec^2/csc^2 factor on the left-bath term
    double right_trig;  // and on the right-bath term
};

// Delta-line weight of the transmission coefficient at one polariton
// frequency: 2 gL gR / [gL (omega_b/omega) left_trig + gR (omega/omega_c) right_trig].
double line_weight(const ChannelGeometry& ch, double omega_b, double omega_c) {
    if (ch.gL == 0.0 || ch.gR == 0.0) return 0.0;
    const double den = ch.gL * (omega_b / ch.omega) * ch.left_trig +
                       ch.gR * (ch.omega / omega_c) * ch.right_trig;
    if (!std::isfinite(den)) return 0.0;  // fully polarized angle: channel closed
    return 2.0 * ch.gL * ch.gR / den;
}

// The upper channel carries theta_x = theta + pi/2, which turns its secant
// factors into cosecants of theta and vice versa; both channels are spelled
// out in terms of theta directly.
std::array<ChannelGeometry, 2> channel_geometries(const SystemParams& p,
                                                  const PolaritonSpectrum& spec) {
    const BathSpec left = p.left_bath();
    const BathSpec right = p.right_bath();
    const double s2 = std::sin(spec.theta) * std::sin(spec.theta);
    const double c2 = std::cos(spec.theta) * std::cos(spec.theta);
    ChannelGeometry x{spec.omega_x, bath_coupling(left, spec.omega_x, p.omega_c),
                      bath_coupling(right, spec.omega_x, p.omega_c), 1.0 / s2, 1.0 / c2};
    ChannelGeometry y{spec.omega_y, bath_coupling(left, spec.omega_y, p.omega_c),
                      bath_coupling(right, spec.omega_y, p.omega_c), 1.0 / c2, 1.0 / s2};
    return {x, y};
}

} // namespace

std::array<TransmissionLine, 2> transmission_lines(const SystemParams& p) {
    p.validate();
    const PolaritonSpectrum spec = polariton_frequencies(p);
    const auto chans = channel_geometries(p, spec);
    return {TransmissionLine{chans[0].omega, line_weight(chans[0], p.omega_b, p.omega_c)},
            TransmissionLine{chans[1].omega, line_weight(chans[1], p.omega_b, p.omega_c)}};
}

LmeCurrent heat_current_lme(const SystemParams& p) {
    p.validate();
    LmeCurrent out;
    out.validity_warning = p.g > std::min(p.gamma_L, p.gamma_R);
    if (p.g == 0.0 || p.gamma_L == 0.0 || p.gamma_R == 0.0) return out;
    const double gsq4 = 4.0 * p.g * p.g;
    out.value = 2.0 * p.omega_c * gsq4 * p.gamma_L * p.gamma_R /
                ((p.gamma_L + p.gamma_R) * (p.gamma_L * p.gamma_R + gsq4)) *
                (bose_einstein(p.omega_c, p.T_L) - bose_einstein(p.omega_b, p.T_R));
    return out;
}

TransportReport heat_current_gme(const SystemParams& p) {
    p.validate();
    const PolaritonSpectrum spec = polariton_frequencies(p);
    const auto chans = channel_geometries(p, spec);

    TransportReport rep;
    for (int j = 0; j < 2; ++j) {
        const double w = line_weight(chans[j], p.omega_b, p.omega_c);
        rep.per_polariton[j] = w * chans[j].omega *
                               (bose_einstein(chans[j].omega, p.T_L) -
                                bose_einstein(chans[j].omega, p.T_R));
    }
    rep.j_left = rep.per_polariton[0] + rep.per_polariton[1];

    // Right-bath current from the dissipator route at the steady populations.
    // Algebraically -j_left; evaluated independently so the first law is a
    // genuine cross-check.
    if (p.gamma_L == 0.0 && p.gamma_R == 0.0) {
        rep.j_right = 0.0;
    } else {
        const BogoliubovCoefficients f = bogoliubov_coefficients(p, spec);
        const BathSpec right = p.right_bath();
        const PolaritonPopulations n_ss = steady_populations(p);
        rep.j_right =
            2.0 * spec.omega_x * bath_coupling(right, spec.omega_x, p.omega_c) *
                f.rx_weight() * (bose_einstein(spec.omega_x, p.T_R) - n_ss.upper) +
            2.0 * spec.omega_y * bath_coupling(right, spec.omega_y, p.omega_c) *
                f.ry_weight() * (bose_einstein(spec.omega_y, p.T_R) - n_ss.lower);
    }

    if (p.T_L > 0.0 && p.T_R > 0.0)
        rep.entropy_production = rep.j_left * (1.0 / p.T_R - 1.0 / p.T_L);

    const double gamma_max = std::max(p.gamma_L, p.gamma_R);
    rep.gme_validity_warning =
        p.g < gamma_max && std::abs(p.omega_c - p.omega_b) < gamma_max;
    rep.lme = heat_current_lme(p);
    return rep;
}

double heat_current_time_dependent(const SystemParams& p, double t) {
    if (t < 0.0) throw DomainError("heat_current_time_dependent: t must be >= 0");
    p.validate();
    if (p.gamma_L == 0.0) return 0.0;  // no left-bath channel at all
    const PolaritonSpectrum spec = polariton_frequencies(p);
    const BogoliubovCoefficients f = bogoliubov_coefficients(p, spec);
    const BathSpec left = p.left_bath();
    const PolaritonPopulations n = polariton_populations(p, t);
    return 2.0 * spec.omega_x * bath_coupling(left, spec.omega_x, p.omega_c) *
               f.lx_weight() * (bose_einstein(spec.omega_x, p.T_L) - n.upper) +
           2.0 * spec.omega_y * bath_coupling(left, spec.omega_y, p.omega_c) *
               f.ly_weight() * (bose_einstein(spec.omega_y, p.T_L) - n.lower);
}

SecondLawAudit second_law_audit(const SystemParams& p) {
    p.validate();
    if (p.T_L <= 0.0 || p.T_R <= 0.0)
        throw DomainError("second_law_audit: requires T_L > 0 and T_R > 0");
    const TransportReport rep = heat_current_gme(p);
    SecondLawAudit audit;
    audit.entropy_production_gme = *rep.entropy_production;
    audit.lme_violation_predicate = p.omega_b / p.T_R < p.omega_c / p.T_L;
    audit.lme_current = rep.lme.value;
    return audit;
}

} // namespace hopfield
