// fock_space.hpp — Truncated-Fock exact diagonalization of the bare-basis Hamiltonian

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "hopfield/system_params.hpp"

namespace hopfield::oracle {

using SparseMatrixC = Eigen::SparseMatrix<std::complex<double>>;

struct FockTruncation {
    int n_max{60};                 // photon-number cutoff per mode
    double convergence_tol{1e-6};  // relative tolerance of the cutoff-doubling test
    int dimension_cap{62500};      // max allowed (n_max+1)^2

    void validate() const;  // DomainError if n_max < 2 etc.
};

// Single-mode annihilation operator on the (n_max+1)-level Fock ladder.
SparseMatrixC ladder_operator(int n_max);

// Two-mode embeddings a_L = a (x) 1, a_R = 1 (x) a; basis is mode-major with
// ascending occupation (index = m*(n_max+1) + n for |m, n>).
SparseMatrixC left_mode_operator(int n_max);
SparseMatrixC right_mode_operator(int n_max);

// All five terms of the bare-basis Hamiltonian with the TRK diamagnetic term.
// Throws ResourceError if (n_max+1)^2 exceeds the dimension cap.
SparseMatrixC build_hamiltonian(const SystemParams& p, const FockTruncation& trunc);

struct LanczosOptions {
    int num_values{1};          // how many lowest eigenpairs to converge
    int max_iterations{1400};
    double value_tol{1e-11};    // stagnation tolerance on Ritz values (x spectral span)
    double residual_tol{1e-8};  // final residual bound (x spectral span)
    int check_every{20};
    std::uint64_t seed{0x9e3779b97f4a7c15ull};
};

struct LanczosResult {
    std::vector<double> values;   // lowest Ritz values, ascending
    Eigen::MatrixXcd vectors;     // matching Ritz vectors (columns)
    int iterations{0};
    double max_residual{0.0};
    bool converged{false};
};

// Lanczos with full reorthogonalization for the lowest eigenpairs of a sparse
// Hermitian matrix. Throws ConvergenceError if the Krylov space is exhausted
// before the requested pairs settle.
LanczosResult lanczos_lowest(const SparseMatrixC& matrix, const LanczosOptions& opt);

// Lowest `levels` eigenvalues at the given cutoff (no convergence audit).
std::vector<double> ed_eigenvalues(const SystemParams& p, int n_max, int levels,
                                   const FockTruncation& trunc);

// Lowest `levels` eigenvalues passing the n_max -> n_max+10 stability test on
// the differences E_k - E_0 (the absolute offset is truncation-insensitive
// anyway, the differences are what the analytic ladder predicts).
std::vector<double> ed_spectrum(const SystemParams& p, const FockTruncation& trunc,
                                int levels);

// Ground-state photon number <G| a_L^dag a_L |G> with the cutoff-doubling
// convergence audit; throws ConvergenceError (with a hint to raise n_max)
// when the two cutoffs disagree.
double ed_ground_state_photons(const SystemParams& p, const FockTruncation& trunc);

} // namespace hopfield::oracle
