// fock_space.cpp — Sparse Fock-space operators, Hamiltonian assembly and Lanczos

#include "hopfield/oracle/fock_space.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "hopfield/polariton.hpp"

namespace hopfield::oracle {

using Complex = std::complex<double>;

void FockTruncation::validate() const {
    if (n_max < 2) throw DomainError("FockTruncation: n_max must be >= 2");
    if (!(convergence_tol > 0.0))
        throw DomainError("FockTruncation: convergence_tol must be > 0");
    if (dimension_cap < 9) throw DomainError("FockTruncation: dimension_cap too small");
}

SparseMatrixC ladder_operator(int n_max) {
    const int dim = n_max + 1;
    SparseMatrixC a(dim, dim);
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) trip.emplace_back(n - 1, n, std::sqrt(double(n)));
    a.setFromTriplets(trip.begin(), trip.end());
    return a;
}

SparseMatrixC left_mode_operator(int n_max) {
    const SparseMatrixC a = ladder_operator(n_max);
    SparseMatrixC id(n_max + 1, n_max + 1);
    id.setIdentity();
    return Eigen::kroneckerProduct(a, id).eval();
}

SparseMatrixC right_mode_operator(int n_max) {
    const SparseMatrixC a = ladder_operator(n_max);
    SparseMatrixC id(n_max + 1, n_max + 1);
    id.setIdentity();
    return Eigen::kroneckerProduct(id, a).eval();
}

SparseMatrixC build_hamiltonian(const SystemParams& p, const FockTruncation& trunc) {
    p.validate();
    trunc.validate();
    const long dim = long(trunc.n_max + 1) * long(trunc.n_max + 1);
    if (dim > trunc.dimension_cap)
        throw ResourceError("build_hamiltonian: dimension " + std::to_string(dim) +
                            " exceeds cap " + std::to_string(trunc.dimension_cap));

    const SparseMatrixC aL = left_mode_operator(trunc.n_max);
    const SparseMatrixC aR = right_mode_operator(trunc.n_max);
    const SparseMatrixC aLd = aL.adjoint();
    const SparseMatrixC aRd = aR.adjoint();
    const Complex ig(0.0, p.g);
    const double D = diamagnetic_term(p);

    SparseMatrixC field = aL + aLd;
    SparseMatrixC H = p.omega_c * (aLd * aL).eval() + p.omega_b * (aRd * aR).eval() +
                      ig * (aL * aRd - aLd * aR).eval() +
                      ig * (aLd * aRd - aL * aR).eval() + D * (field * field).eval();
    H.makeCompressed();
    return H;
}

namespace {

// Lowest Ritz values of the current tridiagonal projection.
std::vector<double> tridiag_values(const std::vector<double>& alpha,
                                   const std::vector<double>& beta, int count) {
    const int m = int(alpha.size());
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd sub = m > 1 ? Eigen::Map<const Eigen::VectorXd>(beta.data(), m - 1)
                                : Eigen::VectorXd();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    const int k = std::min(count, m);
    return {es.eigenvalues().data(), es.eigenvalues().data() + k};
}

// Residual bounds |beta_m s_{m,i}| of the lowest Ritz pairs, and the span.
struct RitzProbe {
    double max_residual;
    double span;
};

RitzProbe tridiag_residuals(const std::vector<double>& alpha,
                            const std::vector<double>& beta, int count) {
    const int m = int(alpha.size());
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd sub = m > 1 ? Eigen::Map<const Eigen::VectorXd>(beta.data(), m - 1)
                                : Eigen::VectorXd();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    RitzProbe probe{0.0, std::max(es.eigenvalues()[m - 1] - es.eigenvalues()[0], 1e-300)};
    for (int i = 0; i < std::min(count, m); ++i)
        probe.max_residual = std::max(
            probe.max_residual, beta[m - 1] * std::abs(es.eigenvectors()(m - 1, i)));
    return probe;
}

} // namespace

LanczosResult lanczos_lowest(const SparseMatrixC& matrix, const LanczosOptions& opt) {
    const Eigen::Index n = matrix.rows();
    if (matrix.cols() != n) throw DomainError("lanczos_lowest: matrix must be square");
    if (opt.num_values < 1 || opt.num_values >= n)
        throw DomainError("lanczos_lowest: bad num_values");

    // Krylov basis storage, memory-capped.
    const int mem_cap = int(std::max<long>(64, 300L * 1000 * 1000 / (16 * n)));
    const int m_max = int(std::min<Eigen::Index>({Eigen::Index(opt.max_iterations),
                                                  n, Eigen::Index(mem_cap)}));
    Eigen::MatrixXcd V(n, m_max + 1);
    std::vector<double> alpha, beta;
    alpha.reserve(m_max);
    beta.reserve(m_max);

    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss;
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(gauss(rng), gauss(rng));
    v.normalize();
    V.col(0) = v;

    std::vector<double> prev;
    int stable_checks = 0;
    double scale = 1.0;
    bool exhausted = false;
    int m = 0;

    while (m < m_max) {
        Eigen::VectorXcd w = matrix * V.col(m);
        const double a = V.col(m).dot(w).real();
        alpha.push_back(a);
        w -= a * V.col(m);
        if (m > 0) w -= beta[m - 1] * V.col(m - 1);
        // Full reorthogonalization, classical Gram-Schmidt with one refinement.
        for (int pass = 0; pass < 2; ++pass) {
            Eigen::VectorXcd proj = V.leftCols(m + 1).adjoint() * w;
            w.noalias() -= V.leftCols(m + 1) * proj;
        }
        const double b = w.norm();
        scale = std::max({scale, std::abs(a), b});
        beta.push_back(b);
        ++m;
        if (b < 1e-14 * scale) {
            exhausted = true;  // invariant subspace: projection is exact
            break;
        }
        V.col(m) = w / b;

        if (m % opt.check_every == 0 && m > opt.num_values + 2) {
            std::vector<double> vals = tridiag_values(alpha, beta, opt.num_values);
            if (prev.size() == vals.size()) {
                double drift = 0.0;
                for (size_t i = 0; i < vals.size(); ++i)
                    drift = std::max(drift, std::abs(vals[i] - prev[i]));
                if (drift < opt.value_tol * scale) {
                    ++stable_checks;
                } else {
                    stable_checks = 0;
                }
            }
            prev = std::move(vals);
            // Values settle before the vectors do; once they stagnate, keep
            // iterating until the residual bound clears the target.
            if (stable_checks >= 2) {
                const RitzProbe probe = tridiag_residuals(alpha, beta, opt.num_values);
                if (probe.max_residual <= opt.residual_tol * probe.span) break;
                stable_checks = 1;
            }
        }
    }

    // Final projected eigenproblem with vectors.
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd sub = m > 1 ? Eigen::Map<const Eigen::VectorXd>(beta.data(), m - 1)
                                : Eigen::VectorXd();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);

    const int k = std::min(opt.num_values, m);
    LanczosResult out;
    out.iterations = m;
    out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + k);
    out.vectors.resize(n, k);
    const double span = std::max(es.eigenvalues()[m - 1] - es.eigenvalues()[0], 1e-300);
    double max_res = 0.0;
    for (int i = 0; i < k; ++i) {
        out.vectors.col(i) = V.leftCols(m) * es.eigenvectors().col(i);
        // Kaniel-Paige residual bound |beta_m * s_{m,i}|; exact when exhausted.
        const double res = exhausted ? 0.0 : beta[m - 1] * std::abs(es.eigenvectors()(m - 1, i));
        max_res = std::max(max_res, res);
    }
    out.max_residual = max_res;
    out.converged = exhausted || max_res <= opt.residual_tol * span;
    if (!out.converged)
        throw ConvergenceError(
            "lanczos_lowest: Krylov space exhausted before the requested pairs settled "
            "(residual " + std::to_string(max_res) + ", span " + std::to_string(span) +
            "); raise max_iterations or reduce n_max");
    return out;
}

std::vector<double> ed_eigenvalues(const SystemParams& p, int n_max, int levels,
                                   const FockTruncation& trunc) {
    FockTruncation t = trunc;
    t.n_max = n_max;
    const SparseMatrixC H = build_hamiltonian(p, t);
    LanczosOptions opt;
    opt.num_values = levels;
    opt.residual_tol = 1e-10;
    const LanczosResult res = lanczos_lowest(H, opt);
    return res.values;
}

std::vector<double> ed_spectrum(const SystemParams& p, const FockTruncation& trunc,
                                int levels) {
    trunc.validate();
    if (levels < 1) throw DomainError("ed_spectrum: levels must be >= 1");
    const std::vector<double> coarse = ed_eigenvalues(p, trunc.n_max, levels, trunc);
    const std::vector<double> fine = ed_eigenvalues(p, trunc.n_max + 10, levels, trunc);
    for (int i = 0; i < levels; ++i) {
        const double d = std::abs((fine[i] - fine[0]) - (coarse[i] - coarse[0]));
        if (d > trunc.convergence_tol * p.omega_c)
            throw ConvergenceError(
                "ed_spectrum: level spacing not stable under n_max -> n_max+10 "
                "(delta " + std::to_string(d) + "); increase n_max");
    }
    return fine;
}

namespace {

// The Hamiltonian conserves the total-occupation parity (m+n) mod 2: every
// coupling term moves the pair occupation by 0 or +-2. The ground state is
// even (it is connected to |0,0>), so the ground solve can run in the even
// sector: half the dimension and twice the sector gap.
struct EvenSector {
    std::vector<Eigen::Index> to_full;
    std::vector<Eigen::Index> from_full;  // -1 for odd states
};

EvenSector even_sector(int n_max) {
    const Eigen::Index dim = n_max + 1;
    EvenSector s;
    s.from_full.assign(dim * dim, -1);
    for (Eigen::Index m = 0; m < dim; ++m)
        for (Eigen::Index n = 0; n < dim; ++n)
            if (((m + n) & 1) == 0) {
                s.from_full[m * dim + n] = Eigen::Index(s.to_full.size());
                s.to_full.push_back(m * dim + n);
            }
    return s;
}

SparseMatrixC restrict_to_even(const SparseMatrixC& H, const EvenSector& sector) {
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(H.nonZeros() / 2 + 1);
    for (int k = 0; k < H.outerSize(); ++k)
        for (SparseMatrixC::InnerIterator it(H, k); it; ++it) {
            const Eigen::Index r = sector.from_full[it.row()];
            const Eigen::Index c = sector.from_full[it.col()];
            if (r >= 0 && c >= 0)
                trip.emplace_back(int(r), int(c), it.value());
            else if ((r >= 0) != (c >= 0))
                throw NumericalError("restrict_to_even: parity-violating entry");
        }
    SparseMatrixC out(Eigen::Index(sector.to_full.size()),
                      Eigen::Index(sector.to_full.size()));
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

double ground_state_photons_at(const SystemParams& p, int n_max,
                               const FockTruncation& trunc) {
    FockTruncation t = trunc;
    t.n_max = n_max;
    const SparseMatrixC H = build_hamiltonian(p, t);
    const EvenSector sector = even_sector(n_max);
    const SparseMatrixC H_even = restrict_to_even(H, sector);
    LanczosOptions opt;
    opt.num_values = 1;
    opt.residual_tol = 1e-9;
    const LanczosResult res = lanczos_lowest(H_even, opt);
    Eigen::VectorXcd ground = Eigen::VectorXcd::Zero(H.rows());
    for (size_t k = 0; k < sector.to_full.size(); ++k)
        ground[sector.to_full[k]] = res.vectors(Eigen::Index(k), 0);
    const SparseMatrixC aL = left_mode_operator(n_max);
    return (aL * ground).squaredNorm();
}

} // namespace

double ed_ground_state_photons(const SystemParams& p, const FockTruncation& trunc) {
    trunc.validate();
    const double coarse = ground_state_photons_at(p, trunc.n_max, trunc);
    const double fine = ground_state_photons_at(p, trunc.n_max + 10, trunc);
    if (std::abs(fine - coarse) > trunc.convergence_tol * std::max(std::abs(fine), 1e-12))
        throw ConvergenceError(
            "ed_ground_state_photons: value not stable under n_max -> n_max+10 (" +
            std::to_string(coarse) + " vs " + std::to_string(fine) +
            "); deep-strong-coupling ground states need a larger n_max");
    return fine;
}

} // namespace hopfield::oracle
