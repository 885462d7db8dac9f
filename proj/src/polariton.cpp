// polariton.cpp — Polariton spectrum, mixing angle and Bogoliubov coefficients

#include "hopfield/polariton.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace hopfield {

double diamagnetic_term(const SystemParams& p) {
    p.validate();
    return p.g * p.g / p.omega_b;
}

double mixing_angle(const SystemParams& p) {
    p.validate();
    if (p.g == 0.0) {
        // Continuity limit; for omega_c < omega_b the quadrature rotation
        // approaches the mode swap.
        return (p.omega_c >= p.omega_b) ? 0.0 : std::numbers::pi / 2.0;
    }
    const double D = p.g * p.g / p.omega_b;
    const double num = 4.0 * p.g * std::sqrt(p.omega_b * p.omega_c);
    const double den = p.omega_c * p.omega_c - p.omega_b * p.omega_b + 4.0 * D * p.omega_c;
    // atan2 on the principal branch keeps 2*theta in (0, pi), which is exactly
    // the theta -> theta + pi/2 continuation required below the critical
    // coupling when omega_c < omega_b.
    return 0.5 * std::atan2(num, den);
}

PolaritonSpectrum polariton_frequencies(const SystemParams& p) {
    p.validate();
    const double wc = p.omega_c;
    const double wb = p.omega_b;
    const double D = diamagnetic_term(p);
    const double sum = wc * wc + wb * wb + 4.0 * D * wc;
    const double diff = wc * wc - wb * wb + 4.0 * D * wc;
    const double radicand = diff * diff + 16.0 * p.g * p.g * wc * wb;
    assert(radicand >= 0.0);
    const double root = std::sqrt(radicand);

    PolaritonSpectrum spec;
    spec.omega_x = std::sqrt(0.5 * (sum + root));
    // Lower branch: (sum - root)/2 cancels catastrophically in the deep-strong
    // regime. With the TRK-locked D, sum^2 - radicand = 4 wc^2 wb^2 exactly,
    // so the equivalent quotient form stays fully accurate.
    spec.omega_y = wc * wb * std::sqrt(2.0 / (sum + root));
    spec.theta = mixing_angle(p);
    return spec;
}

BogoliubovCoefficients bogoliubov_coefficients(const SystemParams& p,
                                               const PolaritonSpectrum& spec) {
    const double wc = p.omega_c;
    const double wb = p.omega_b;
    const double wx = spec.omega_x;
    const double wy = spec.omega_y;
    const double c = std::cos(spec.theta);
    const double s = std::sin(spec.theta);

    BogoliubovCoefficients f;
    f.f1 = (wc + wx) / (2.0 * std::sqrt(wx * wc)) * c;
    f.f2 = (wc - wx) / (2.0 * std::sqrt(wx * wc)) * c;
    f.f3 = (wc + wy) / (2.0 * std::sqrt(wy * wc)) * s;
    f.f4 = (wc - wy) / (2.0 * std::sqrt(wy * wc)) * s;
    f.f5 = (wb + wx) / (2.0 * std::sqrt(wx * wb)) * s;
    f.f6 = (wb - wx) / (2.0 * std::sqrt(wx * wb)) * s;
    f.f7 = (wb + wy) / (2.0 * std::sqrt(wy * wb)) * c;
    f.f8 = (wb - wy) / (2.0 * std::sqrt(wy * wb)) * c;
    return f;
}

BogoliubovCoefficients bogoliubov_coefficients(const SystemParams& p) {
    return bogoliubov_coefficients(p, polariton_frequencies(p));
}

double eigenenergy(const PolaritonSpectrum& spec, int m, int n) {
    if (m < 0 || n < 0) throw DomainError("eigenenergy: quantum numbers must be >= 0");
    return spec.omega_x * (m + 0.5) + spec.omega_y * (n + 0.5);
}

} // namespace hopfield
