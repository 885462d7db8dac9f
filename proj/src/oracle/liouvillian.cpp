// liouvillian.cpp — Vectorized Lindblad generator and its steady state

#include "hopfield/oracle/liouvillian.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/SparseLU>
#include <unsupported/Eigen/KroneckerProduct>

#include "hopfield/polariton.hpp"

namespace hopfield::oracle {

using Complex = std::complex<double>;

void LiouvillianTruncation::validate() const {
    if (n_max < 2) throw DomainError("LiouvillianTruncation: n_max must be >= 2");
    if (n_max_cap < 2) throw DomainError("LiouvillianTruncation: bad n_max_cap");
}

namespace {

SparseMatrixC sparse_identity(long dim) {
    SparseMatrixC id(dim, dim);
    id.setIdentity();
    return id;
}

// vec(O rho O^dag) = (conj(O) kron O) vec(rho) in the column-major convention.
SparseMatrixC lindblad_superop(const SparseMatrixC& op, const SparseMatrixC& id) {
    const SparseMatrixC opd = op.adjoint();
    const SparseMatrixC num = (opd * op).eval();
    return (2.0 * Eigen::kroneckerProduct(op.conjugate(), op)).eval() -
           Eigen::kroneckerProduct(id, num).eval() -
           Eigen::kroneckerProduct(SparseMatrixC(num.transpose()), id).eval();
}

} // namespace

SparseMatrixC build_liouvillian(const SystemParams& p, const LiouvillianTruncation& trunc,
                                const RateSet& rates) {
    p.validate();
    trunc.validate();
    if (trunc.n_max > trunc.n_max_cap)
        throw ResourceError("build_liouvillian: n_max " + std::to_string(trunc.n_max) +
                            " exceeds cap " + std::to_string(trunc.n_max_cap) +
                            " (superoperator dimension is (n_max+1)^4)");

    const PolaritonSpectrum spec = polariton_frequencies(p);
    const SparseMatrixC AL = left_mode_operator(trunc.n_max);
    const SparseMatrixC AR = right_mode_operator(trunc.n_max);
    const long dim = AL.rows();
    const SparseMatrixC id = sparse_identity(dim);

    SparseMatrixC H = spec.omega_x * (SparseMatrixC(AL.adjoint()) * AL).eval() +
                      spec.omega_y * (SparseMatrixC(AR.adjoint()) * AR).eval();

    const Complex mi(0.0, -1.0);
    SparseMatrixC L = (mi * (Eigen::kroneckerProduct(id, H).eval() -
                             Eigen::kroneckerProduct(SparseMatrixC(H.transpose()), id).eval()))
                          .eval();
    L += rates.alpha1 * lindblad_superop(AL, id);
    L += rates.alpha2 * lindblad_superop(SparseMatrixC(AL.adjoint()), id);
    L += rates.beta1 * lindblad_superop(AR, id);
    L += rates.beta2 * lindblad_superop(SparseMatrixC(AR.adjoint()), id);
    L.makeCompressed();
    return L;
}

double trace_preservation_defect(const SparseMatrixC& liouvillian) {
    const long N = liouvillian.rows();
    const long dim = std::lround(std::sqrt(double(N)));
    Eigen::VectorXcd id_vec = Eigen::VectorXcd::Zero(N);
    for (long i = 0; i < dim; ++i) id_vec[i * dim + i] = 1.0;
    const Eigen::VectorXcd row = SparseMatrixC(liouvillian.transpose()) * id_vec;
    return row.cwiseAbs().maxCoeff();
}

LiouvillianSteadyState steady_state(const SystemParams& p,
                                    const LiouvillianTruncation& trunc,
                                    const RateSet& rates) {
    SparseMatrixC L = build_liouvillian(p, trunc, rates);
    const long dim = trunc.n_max + 1;
    const long rho_dim = dim * dim;

    // Augment the rank-deficient generator with the trace functional in row 0
    // (a diagonal position, so the system becomes nonsingular) and solve for
    // the unique trace-one null vector.
    for (long i = 0; i < rho_dim; ++i) L.coeffRef(0, i * rho_dim + i) += 1.0;
    L.makeCompressed();

    Eigen::SparseLU<SparseMatrixC, Eigen::COLAMDOrdering<int>> lu;
    lu.analyzePattern(L);
    lu.factorize(L);
    if (lu.info() != Eigen::Success)
        throw NumericalError("liouvillian steady_state: sparse LU factorization failed");
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(rho_dim * rho_dim);
    rhs[0] = 1.0;
    const Eigen::VectorXcd x = lu.solve(rhs);

    LiouvillianSteadyState out;
    Eigen::MatrixXcd rho = Eigen::Map<const Eigen::MatrixXcd>(x.data(), rho_dim, rho_dim);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    out.trace_error = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());

    // Number operators are diagonal in this basis: index i = m*dim + n.
    double n_up = 0.0, n_low = 0.0;
    for (long i = 0; i < rho_dim; ++i) {
        n_up += double(i / dim) * rho(i, i).real();
        n_low += double(i % dim) * rho(i, i).real();
    }
    out.n_upper = n_up;
    out.n_lower = n_low;
    out.min_eigenvalue =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(rho, Eigen::EigenvaluesOnly)
            .eigenvalues()
            .minCoeff();
    out.rho = std::move(rho);
    return out;
}

double truncated_thermal_mean(double q, int n_max) {
    if (q < 0.0 || q >= 1.0)
        throw DomainError("truncated_thermal_mean: need 0 <= q < 1");
    if (q == 0.0) return 0.0;
    double norm = 0.0, mean = 0.0, w = 1.0;
    for (int n = 0; n <= n_max; ++n) {
        norm += w;
        mean += n * w;
        w *= q;
    }
    return mean / norm;
}

} // namespace hopfield::oracle
