#pragma once

#include "schwarz/assembly.hpp"

namespace schwarz {

/// Positive definite reduction of the saddle system: the pressure is
/// eliminated element by element, leaving
///   Abar = sum_K ( mu_K A_K + lambda_K B_K^T C_K^{-1} B_K )
/// on the displacement unknowns, plus the per-element data needed to
/// recover the pressure afterwards.
struct SpdOperator {
    la::SparseMatrix matrix;              ///< assembled Abar
    la::DenseMatrix pressure_recovery;    ///< C_K^{-1} B_K (shared, unscaled by lambda)
    DofMap dofs;
    SubdomainLayout layout;
    CoefficientField coeffs;
    ElementMatrices element;
    la::Vector F;

    int size() const { return matrix.rows(); }
    la::Vector apply(const la::Vector& x) const;
};

/// Fails on any incompressible subdomain: the Stokes limit has no
/// reformulation and must be solved in saddle form.
SpdOperator eliminate_pressure(const SaddleSystem& system);

/// Per-element p_K = lambda_K C_K^{-1} B_K u_K, concatenated globally.
la::Vector recover_pressure(const SpdOperator& op, const la::Vector& u);

inline la::Vector apply_spd(const SpdOperator& op, const la::Vector& x) { return op.apply(x); }

} // namespace schwarz
