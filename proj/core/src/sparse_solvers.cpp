#include "schwarz/la/sparse_solvers.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>

#include "schwarz/la/errors.hpp"

namespace schwarz::la {

namespace {

using ESparse = Eigen::SparseMatrix<double>;

ESparse to_eigen(const SparseMatrix& A) {
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(static_cast<std::size_t>(A.nnz()));
    for (int r = 0; r < A.rows(); ++r)
        for (long long k = A.row_ptr()[r]; k < A.row_ptr()[r + 1]; ++k)
            t.emplace_back(r, A.col_idx()[static_cast<std::size_t>(k)],
                           A.values()[static_cast<std::size_t>(k)]);
    ESparse M(A.rows(), A.cols());
    M.setFromTriplets(t.begin(), t.end());
    M.makeCompressed();
    return M;
}

} // namespace

struct SpdSolver::Impl {
    int n = 0;
    Eigen::SimplicialLDLT<ESparse> ldlt;
};

SpdSolver::SpdSolver(const SparseMatrix& A) : impl_(std::make_unique<Impl>()) {
    if (A.rows() != A.cols()) throw DimensionError("SpdSolver: matrix not square");
    impl_->n = A.rows();
    impl_->ldlt.compute(to_eigen(A));
    if (impl_->ldlt.info() != Eigen::Success)
        throw SingularMatrixError("SpdSolver: factorization failed (matrix singular or not SPD)", -1);
    // Exact zero pivots escape info() on some inputs; check D directly.
    const auto& D = impl_->ldlt.vectorD();
    for (int i = 0; i < impl_->n; ++i)
        if (D(i) == 0.0) throw SingularMatrixError("SpdSolver: zero pivot " + std::to_string(i), i);
}

SpdSolver::~SpdSolver() = default;
SpdSolver::SpdSolver(SpdSolver&&) noexcept = default;
SpdSolver& SpdSolver::operator=(SpdSolver&&) noexcept = default;

int SpdSolver::dim() const { return impl_->n; }

Vector SpdSolver::solve(const Vector& b) const {
    if (static_cast<int>(b.size()) != impl_->n) throw DimensionError("SpdSolver::solve: size mismatch");
    Vector x(b.size());
    solve(b.data(), x.data());
    return x;
}

void SpdSolver::solve(const double* b, double* x) const {
    Eigen::Map<const Eigen::VectorXd> bv(b, impl_->n);
    Eigen::Map<Eigen::VectorXd> xv(x, impl_->n);
    xv = impl_->ldlt.solve(bv);
}

struct LuSolver::Impl {
    int n = 0;
    Eigen::SparseLU<ESparse, Eigen::COLAMDOrdering<int>> lu;
};

LuSolver::LuSolver(const SparseMatrix& A) : impl_(std::make_unique<Impl>()) {
    if (A.rows() != A.cols()) throw DimensionError("LuSolver: matrix not square");
    impl_->n = A.rows();
    ESparse M = to_eigen(A);
    impl_->lu.analyzePattern(M);
    impl_->lu.factorize(M);
    if (impl_->lu.info() != Eigen::Success)
        throw SingularMatrixError("LuSolver: factorization failed: " + impl_->lu.lastErrorMessage(), -1);
}

LuSolver::~LuSolver() = default;
LuSolver::LuSolver(LuSolver&&) noexcept = default;
LuSolver& LuSolver::operator=(LuSolver&&) noexcept = default;

int LuSolver::dim() const { return impl_->n; }

Vector LuSolver::solve(const Vector& b) const {
    if (static_cast<int>(b.size()) != impl_->n) throw DimensionError("LuSolver::solve: size mismatch");
    Vector x(b.size());
    solve(b.data(), x.data());
    return x;
}

void LuSolver::solve(const double* b, double* x) const {
    Eigen::Map<const Eigen::VectorXd> bv(b, impl_->n);
    Eigen::Map<Eigen::VectorXd> xv(x, impl_->n);
    xv = impl_->lu.solve(bv);
}

} // namespace schwarz::la
