#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "schwarz/la/sparse_matrix.hpp"

namespace schwarz::la {

/// Column-major dense matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    static DenseMatrix identity(int n);
    static DenseMatrix from_sparse(const SparseMatrix& A);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(j) * rows_ + i]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(j) * rows_ + i]; }
    const double* data() const { return data_.data(); }
    double* data() { return data_.data(); }

    Vector apply(const Vector& x) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

/// Exact direct factorization of a square matrix. Symmetric inputs go
/// through Cholesky when positive definite and pivoted LU otherwise;
/// exact singularity raises SingularMatrixError with the pivot index.
class DenseFactorization {
public:
    DenseFactorization();
    ~DenseFactorization();
    DenseFactorization(DenseFactorization&&) noexcept;
    DenseFactorization& operator=(DenseFactorization&&) noexcept;

    static DenseFactorization compute(const DenseMatrix& M, bool symmetric);

    int dim() const;
    Vector solve(const Vector& b) const;
    void solve_inplace(Vector& b) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Materializes M densely and factorizes it (exact local/coarse solves).
/// `symmetric` asserts numerical symmetry to 1e-10 relative first.
DenseFactorization factorize(const SparseMatrix& M, bool symmetric);

Vector solve(const DenseFactorization& F, const Vector& b);

using ApplyFn = std::function<Vector(const Vector&)>;

/// Applies `op` to the unit vectors to materialize it as a dense matrix.
DenseMatrix materialize(const ApplyFn& op, int dim);

/// All eigenvalues of `op`, ascending. Symmetric operators get the exact
/// real spectrum; otherwise the sorted real parts are returned.
/// Guarded against accidental huge dims (dim <= 20000).
std::vector<double> dense_spectrum(const ApplyFn& op, int dim, bool symmetric);
std::vector<double> dense_spectrum(const DenseMatrix& M, bool symmetric);

/// Eigenvalues of the symmetric tridiagonal matrix with the given
/// diagonal/offdiagonal, ascending (Lanczos / PCG condition estimates).
std::vector<double> tridiag_eigenvalues(const std::vector<double>& diag,
                                        const std::vector<double>& offdiag);

} // namespace schwarz::la
