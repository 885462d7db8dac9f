// polariton.hpp — Analytic diagonalization of the isotropic two-mode Hopfield Hamiltonian

#pragma once

#include "hopfield/system_params.hpp"

namespace hopfield {

// Upper/lower polariton frequencies and the branch-continuous mixing angle.
struct PolaritonSpectrum {
    double omega_x{0.0};  // upper polariton
    double omega_y{0.0};  // lower polariton
    double theta{0.0};    // mixing angle, radians, in [0, pi/2]
};

// The eight coefficients relating bare (a_L, a_R) and dressed (A_L, A_R)
// mode operators. All are real and dimensionless.
struct BogoliubovCoefficients {
    double f1{0.0}, f2{0.0}, f3{0.0}, f4{0.0};
    double f5{0.0}, f6{0.0}, f7{0.0}, f8{0.0};

    // Bosonic commutator sums; both equal 1 for a canonical transform.
    double photon_commutator() const { return f1 * f1 - f2 * f2 + f3 * f3 - f4 * f4; }
    double matter_commutator() const { return f5 * f5 - f6 * f6 + f7 * f7 - f8 * f8; }

    // Squared bath-coupling weights of each polariton: |left/right bare
    // amplitude|^2 entering the dissipation rates.
    double lx_weight() const { return (f1 + f2) * (f1 + f2); }
    double ly_weight() const { return (f3 + f4) * (f3 + f4); }
    double rx_weight() const { return (f5 - f6) * (f5 - f6); }
    double ry_weight() const { return (f7 - f8) * (f7 - f8); }
};

// Diamagnetic (self-interaction) energy D = g^2/omega_b fixed by the TRK sum rule.
double diamagnetic_term(const SystemParams& p);

// Mixing angle of the quadrature rotation, continuous in g across the critical
// coupling for omega_c < omega_b. Convention at g = 0: 0 when omega_c >= omega_b,
// pi/2 otherwise (the continuity limit; mode labels swap).
double mixing_angle(const SystemParams& p);

// Polariton frequencies (and the angle, which comes along for free).
// omega_x >= omega_y > 0 and omega_x * omega_y = omega_c * omega_b.
PolaritonSpectrum polariton_frequencies(const SystemParams& p);

BogoliubovCoefficients bogoliubov_coefficients(const SystemParams& p);
BogoliubovCoefficients bogoliubov_coefficients(const SystemParams& p,
                                               const PolaritonSpectrum& spec);

// E_mn = omega_x (m + 1/2) + omega_y (n + 1/2).
double eigenenergy(const PolaritonSpectrum& spec, int m, int n);

} // namespace hopfield
