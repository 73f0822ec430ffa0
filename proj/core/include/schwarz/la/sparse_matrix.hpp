#pragma once

#include <iosfwd>
#include <vector>

#include "schwarz/la/vector_ops.hpp"

namespace schwarz::la {

struct Triplet {
    int row;
    int col;
    double value;
};

/// Row-compressed sparse matrix. Column indices are strictly increasing
/// within each row; duplicate triplets are summed on construction.
class SparseMatrix {
public:
    SparseMatrix() = default;

    static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet> entries);
    static SparseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long nnz() const { return static_cast<long long>(values_.size()); }

    const std::vector<long long>& row_ptr() const { return row_ptr_; }
    const std::vector<int>& col_idx() const { return col_idx_; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    /// y = A x
    Vector apply(const Vector& x) const;
    void apply(const double* x, double* y) const;
    /// y = A^T x
    Vector apply_transpose(const Vector& x) const;

    SparseMatrix transposed() const;

    /// max_ij |A_ij - A_ji|; matrix must be square.
    double symmetry_gap() const;

    /// `%%MatrixMarket matrix coordinate real general`, 1-based indices.
    void write_matrix_market(std::ostream& os) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<long long> row_ptr_{0};
    std::vector<int> col_idx_;
    std::vector<double> values_;
};

/// B = A(rows, cols) for ordered index lists (the Galerkin restriction
/// R A R^T when rows == cols select a subspace).
SparseMatrix extract_submatrix(const SparseMatrix& A,
                               const std::vector<int>& rows,
                               const std::vector<int>& cols);

} // namespace schwarz::la
