// transport.hpp — Steady-state and transient heat currents, Landauer lines, thermodynamic audits

#pragma once

#include <array>
#include <optional>

#include "hopfield/dissipation.hpp"
#include "hopfield/system_params.hpp"

namespace hopfield {

// One Dirac-delta line of the Landauer-type transmission: weight is the
// coefficient multiplying delta(nu - frequency).
struct TransmissionLine {
    double frequency{0.0};
    double weight{0.0};
};

// Local-master-equation benchmark current with its validity flag
// (the LME is justified only for g <~ gamma_lambda << omega).
struct LmeCurrent {
    double value{0.0};
    bool validity_warning{false};
};

struct TransportReport {
    double j_left{0.0};                      // heat current out of the left bath
    double j_right{0.0};                     // independently evaluated right-bath current
    std::array<double, 2> per_polariton{};   // upper/lower channel terms of j_left
    std::optional<double> entropy_production;  // Pi_SS; empty when a bath is at T = 0
    bool gme_validity_warning{false};
    LmeCurrent lme;
};

struct SecondLawAudit {
    double entropy_production_gme{0.0};   // Pi_SS, must be >= 0
    bool lme_violation_predicate{false};  // omega_b/T_R < omega_c/T_L
    double lme_current{0.0};              // sign of the benchmark current
};

// Steady-state currents under the global master equation. Sign convention:
// positive j_left means energy flows from the left bath into the system, and
// J_L^SS = -J_R^SS at steady state.
TransportReport heat_current_gme(const SystemParams& p);

// Left-bath current along the relaxation trajectory (vacuum start); converges
// to heat_current_gme().j_left.
double heat_current_time_dependent(const SystemParams& p, double t);

// The two transmission lines at omega_x, omega_y. Reconstructing
// sum_j weight_j * omega_j * [n(omega_j,T_L) - n(omega_j,T_R)] reproduces j_left.
std::array<TransmissionLine, 2> transmission_lines(const SystemParams& p);

// Benchmark current of the local (RWA) master equation; depends on the bare
// frequencies only.
LmeCurrent heat_current_lme(const SystemParams& p);

// Requires T_L > 0 and T_R > 0 (DomainError otherwise).
SecondLawAudit second_law_audit(const SystemParams& p);

} // namespace hopfield
