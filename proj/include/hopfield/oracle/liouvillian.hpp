// liouvillian.hpp — Vectorized Lindblad generator in the polariton Fock basis

#pragma once

#include <Eigen/Dense>

#include "hopfield/dissipation.hpp"
#include "hopfield/oracle/fock_space.hpp"
#include "hopfield/system_params.hpp"

namespace hopfield::oracle {

struct LiouvillianTruncation {
    int n_max{8};      // Fock cutoff per polariton mode
    int n_max_cap{12}; // superoperator dimension grows as (n_max+1)^4

    void validate() const;
};

// Vectorized generator of the global master equation on the truncated
// polariton Fock space (column-major vec convention). The rates are passed in
// explicitly so callers can drive the generator with an independently
// corrupted set (fault-injection tests).
SparseMatrixC build_liouvillian(const SystemParams& p, const LiouvillianTruncation& trunc,
                                const RateSet& rates);

struct LiouvillianSteadyState {
    Eigen::MatrixXcd rho;     // density matrix, dimension (n_max+1)^2
    double n_upper{0.0};      // <A_L^dag A_L>
    double n_lower{0.0};      // <A_R^dag A_R>
    double trace_error{0.0};
    double min_eigenvalue{0.0};
};

// Unique null-space state of the generator, normalized by trace. Solved by
// augmenting the (rank dim-1) generator with the trace functional.
LiouvillianSteadyState steady_state(const SystemParams& p,
                                    const LiouvillianTruncation& trunc,
                                    const RateSet& rates);

// Max |id^T L| column sum: the trace-preservation defect of the generator.
double trace_preservation_defect(const SparseMatrixC& liouvillian);

// Mean occupation of the truncated single-mode birth-death chain with
// up/down-rate ratio q (the exact marginal of the truncated steady state);
// used as the factorized higher-cutoff value in convergence audits.
double truncated_thermal_mean(double q, int n_max);

} // namespace hopfield::oracle
