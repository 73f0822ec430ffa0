#pragma once

#include <memory>

#include "schwarz/la/sparse_matrix.hpp"

namespace schwarz::la {

/// Exact sparse direct solver for symmetric positive definite systems
/// (fill-reducing ordering + simplicial LDLT). Immutable after
/// construction; solve() is safe to call concurrently.
class SpdSolver {
public:
    explicit SpdSolver(const SparseMatrix& A);
    ~SpdSolver();
    SpdSolver(SpdSolver&&) noexcept;
    SpdSolver& operator=(SpdSolver&&) noexcept;

    int dim() const;
    Vector solve(const Vector& b) const;
    void solve(const double* b, double* x) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Exact sparse LU with partial pivoting for square (possibly indefinite
/// or unsymmetric) systems, e.g. local and coarse saddle blocks.
class LuSolver {
public:
    explicit LuSolver(const SparseMatrix& A);
    ~LuSolver();
    LuSolver(LuSolver&&) noexcept;
    LuSolver& operator=(LuSolver&&) noexcept;

    int dim() const;
    Vector solve(const Vector& b) const;
    void solve(const double* b, double* x) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace schwarz::la
