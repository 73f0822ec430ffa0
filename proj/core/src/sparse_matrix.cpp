#include "schwarz/la/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace schwarz::la {

SparseMatrix SparseMatrix::from_triplets(int rows, int cols, std::vector<Triplet> entries) {
    for (const Triplet& t : entries) {
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw DimensionError("from_triplets: entry out of bounds");
    }
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseMatrix A;
    A.rows_ = rows;
    A.cols_ = cols;
    A.row_ptr_.assign(static_cast<std::size_t>(rows) + 1, 0);
    A.col_idx_.reserve(entries.size());
    A.values_.reserve(entries.size());

    std::size_t i = 0;
    for (int r = 0; r < rows; ++r) {
        while (i < entries.size() && entries[i].row == r) {
            const int c = entries[i].col;
            double v = 0.0;
            while (i < entries.size() && entries[i].row == r && entries[i].col == c) {
                v += entries[i].value;
                ++i;
            }
            A.col_idx_.push_back(c);
            A.values_.push_back(v);
        }
        A.row_ptr_[static_cast<std::size_t>(r) + 1] = static_cast<long long>(A.col_idx_.size());
    }
    return A;
}

SparseMatrix SparseMatrix::identity(int n) {
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) t.push_back({i, i, 1.0});
    return from_triplets(n, n, std::move(t));
}

Vector SparseMatrix::apply(const Vector& x) const {
    if (static_cast<int>(x.size()) != cols_) throw DimensionError("spmv: size mismatch");
    Vector y(static_cast<std::size_t>(rows_));
    apply(x.data(), y.data());
    return y;
}

void SparseMatrix::apply(const double* x, double* y) const {
    for (int r = 0; r < rows_; ++r) {
        double s = 0.0;
        for (long long k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
            s += values_[static_cast<std::size_t>(k)] * x[col_idx_[static_cast<std::size_t>(k)]];
        y[r] = s;
    }
}

Vector SparseMatrix::apply_transpose(const Vector& x) const {
    if (static_cast<int>(x.size()) != rows_) throw DimensionError("spmv^T: size mismatch");
    Vector y(static_cast<std::size_t>(cols_), 0.0);
    for (int r = 0; r < rows_; ++r) {
        const double xr = x[static_cast<std::size_t>(r)];
        for (long long k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
            y[static_cast<std::size_t>(col_idx_[static_cast<std::size_t>(k)])] +=
                values_[static_cast<std::size_t>(k)] * xr;
    }
    return y;
}

SparseMatrix SparseMatrix::transposed() const {
    std::vector<Triplet> t;
    t.reserve(values_.size());
    for (int r = 0; r < rows_; ++r)
        for (long long k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
            t.push_back({col_idx_[static_cast<std::size_t>(k)], r, values_[static_cast<std::size_t>(k)]});
    return from_triplets(cols_, rows_, std::move(t));
}

double SparseMatrix::symmetry_gap() const {
    if (rows_ != cols_) throw DimensionError("symmetry_gap: matrix not square");
    const SparseMatrix At = transposed();
    double gap = 0.0;
    // Both matrices share the same sorted structure traversal.
    for (int r = 0; r < rows_; ++r) {
        long long ka = row_ptr_[r], kb = At.row_ptr_[r];
        const long long ea = row_ptr_[r + 1], eb = At.row_ptr_[r + 1];
        while (ka < ea || kb < eb) {
            const int ca = ka < ea ? col_idx_[static_cast<std::size_t>(ka)] : cols_;
            const int cb = kb < eb ? At.col_idx_[static_cast<std::size_t>(kb)] : cols_;
            if (ca == cb) {
                gap = std::max(gap, std::abs(values_[static_cast<std::size_t>(ka)] -
                                             At.values_[static_cast<std::size_t>(kb)]));
                ++ka;
                ++kb;
            } else if (ca < cb) {
                gap = std::max(gap, std::abs(values_[static_cast<std::size_t>(ka)]));
                ++ka;
            } else {
                gap = std::max(gap, std::abs(At.values_[static_cast<std::size_t>(kb)]));
                ++kb;
            }
        }
    }
    return gap;
}

void SparseMatrix::write_matrix_market(std::ostream& os) const {
    os << "%%MatrixMarket matrix coordinate real general\n";
    os << rows_ << ' ' << cols_ << ' ' << nnz() << '\n';
    os.precision(17);
    for (int r = 0; r < rows_; ++r)
        for (long long k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
            os << r + 1 << ' ' << col_idx_[static_cast<std::size_t>(k)] + 1 << ' '
               << values_[static_cast<std::size_t>(k)] << '\n';
}

SparseMatrix extract_submatrix(const SparseMatrix& A,
                               const std::vector<int>& rows,
                               const std::vector<int>& cols) {
    std::vector<int> col_map(static_cast<std::size_t>(A.cols()), -1);
    for (std::size_t j = 0; j < cols.size(); ++j) col_map[static_cast<std::size_t>(cols[j])] = static_cast<int>(j);

    std::vector<Triplet> t;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int r = rows[i];
        for (long long k = A.row_ptr()[r]; k < A.row_ptr()[r + 1]; ++k) {
            const int cj = col_map[static_cast<std::size_t>(A.col_idx()[static_cast<std::size_t>(k)])];
            if (cj >= 0) t.push_back({static_cast<int>(i), cj, A.values()[static_cast<std::size_t>(k)]});
        }
    }
    return SparseMatrix::from_triplets(static_cast<int>(rows.size()), static_cast<int>(cols.size()), std::move(t));
}

} // namespace schwarz::la
