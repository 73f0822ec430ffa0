#include "schwarz/la/dense.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace schwarz::la {

namespace {

using EMat = Eigen::MatrixXd;
using EMap = Eigen::Map<const EMat>;

EMap as_eigen(const DenseMatrix& M) { return EMap(M.data(), M.rows(), M.cols()); }

} // namespace

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix M(n, n);
    for (int i = 0; i < n; ++i) M(i, i) = 1.0;
    return M;
}

DenseMatrix DenseMatrix::from_sparse(const SparseMatrix& A) {
    DenseMatrix M(A.rows(), A.cols());
    for (int r = 0; r < A.rows(); ++r)
        for (long long k = A.row_ptr()[r]; k < A.row_ptr()[r + 1]; ++k)
            M(r, A.col_idx()[static_cast<std::size_t>(k)]) += A.values()[static_cast<std::size_t>(k)];
    return M;
}

Vector DenseMatrix::apply(const Vector& x) const {
    if (static_cast<int>(x.size()) != cols_) throw DimensionError("dense apply: size mismatch");
    Vector y(static_cast<std::size_t>(rows_));
    Eigen::Map<Eigen::VectorXd>(y.data(), rows_) =
        as_eigen(*this) * Eigen::Map<const Eigen::VectorXd>(x.data(), cols_);
    return y;
}

struct DenseFactorization::Impl {
    int n = 0;
    bool spd = false;
    Eigen::LLT<EMat> llt;
    Eigen::PartialPivLU<EMat> lu;
};

DenseFactorization::DenseFactorization() : impl_(std::make_unique<Impl>()) {}
DenseFactorization::~DenseFactorization() = default;
DenseFactorization::DenseFactorization(DenseFactorization&&) noexcept = default;
DenseFactorization& DenseFactorization::operator=(DenseFactorization&&) noexcept = default;

DenseFactorization DenseFactorization::compute(const DenseMatrix& M, bool symmetric) {
    if (M.rows() != M.cols()) throw DimensionError("factorize: matrix not square");
    const int n = M.rows();
    DenseFactorization F;
    F.impl_->n = n;

    const EMat A = as_eigen(M);
    if (symmetric) {
        F.impl_->llt.compute(A);
        if (F.impl_->llt.info() == Eigen::Success) {
            F.impl_->spd = true;
            return F;
        }
        // Indefinite but symmetric: fall through to pivoted LU.
    }
    F.impl_->lu.compute(A);
    const EMat& lu_mat = F.impl_->lu.matrixLU();
    for (int i = 0; i < n; ++i) {
        // exact singularity only; badly scaled saddle blocks legitimately
        // carry very small pivots
        if (lu_mat(i, i) == 0.0) {
            throw SingularMatrixError("factorize: singular matrix (pivot " + std::to_string(i) + ")", i);
        }
    }
    return F;
}

int DenseFactorization::dim() const { return impl_->n; }

Vector DenseFactorization::solve(const Vector& b) const {
    Vector x = b;
    solve_inplace(x);
    return x;
}

void DenseFactorization::solve_inplace(Vector& b) const {
    if (static_cast<int>(b.size()) != impl_->n) throw DimensionError("solve: size mismatch");
    Eigen::Map<Eigen::VectorXd> v(b.data(), impl_->n);
    if (impl_->spd)
        v = impl_->llt.solve(v).eval();
    else
        v = impl_->lu.solve(v).eval();
}

DenseFactorization factorize(const SparseMatrix& M, bool symmetric) {
    if (M.rows() != M.cols()) throw DimensionError("factorize: matrix not square");
    if (symmetric) {
        double scale = 1.0;
        for (double v : M.values()) scale = std::max(scale, std::abs(v));
        if (M.symmetry_gap() > 1e-10 * scale)
            throw DimensionError("factorize: matrix not numerically symmetric");
    }
    return DenseFactorization::compute(DenseMatrix::from_sparse(M), symmetric);
}

Vector solve(const DenseFactorization& F, const Vector& b) { return F.solve(b); }

DenseMatrix materialize(const ApplyFn& op, int dim) {
    DenseMatrix M(dim, dim);
    Vector e(static_cast<std::size_t>(dim), 0.0);
    for (int j = 0; j < dim; ++j) {
        e[static_cast<std::size_t>(j)] = 1.0;
        const Vector col = op(e);
        if (static_cast<int>(col.size()) != dim) throw DimensionError("materialize: operator changed dimension");
        for (int i = 0; i < dim; ++i) M(i, j) = col[static_cast<std::size_t>(i)];
        e[static_cast<std::size_t>(j)] = 0.0;
    }
    return M;
}

std::vector<double> dense_spectrum(const DenseMatrix& M, bool symmetric) {
    if (M.rows() != M.cols()) throw DimensionError("dense_spectrum: matrix not square");
    std::vector<double> ev(static_cast<std::size_t>(M.rows()));
    if (symmetric) {
        Eigen::SelfAdjointEigenSolver<EMat> es(as_eigen(M), Eigen::EigenvaluesOnly);
        for (int i = 0; i < M.rows(); ++i) ev[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    } else {
        Eigen::EigenSolver<EMat> es(as_eigen(M), /*computeEigenvectors=*/false);
        for (int i = 0; i < M.rows(); ++i) ev[static_cast<std::size_t>(i)] = es.eigenvalues()(i).real();
        std::sort(ev.begin(), ev.end());
    }
    return ev;
}

std::vector<double> dense_spectrum(const ApplyFn& op, int dim, bool symmetric) {
    if (dim > 20000) throw DimensionError("dense_spectrum: dim exceeds dense guard (20000)");
    DenseMatrix M = materialize(op, dim);
    if (symmetric) {
        // Symmetrize away the last-bit asymmetry of floating point sums.
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < i; ++j) {
                const double v = 0.5 * (M(i, j) + M(j, i));
                M(i, j) = M(j, i) = v;
            }
    }
    return dense_spectrum(M, symmetric);
}

std::vector<double> tridiag_eigenvalues(const std::vector<double>& diag,
                                        const std::vector<double>& offdiag) {
    const int n = static_cast<int>(diag.size());
    if (n == 0) return {};
    if (static_cast<int>(offdiag.size()) != n - 1)
        throw DimensionError("tridiag_eigenvalues: offdiag must have n-1 entries");
    Eigen::SelfAdjointEigenSolver<EMat> es;
    es.computeFromTridiagonal(Eigen::Map<const Eigen::VectorXd>(diag.data(), n),
                              Eigen::Map<const Eigen::VectorXd>(offdiag.data(), n - 1),
                              Eigen::EigenvaluesOnly);
    std::vector<double> ev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    return ev;
}

} // namespace schwarz::la
