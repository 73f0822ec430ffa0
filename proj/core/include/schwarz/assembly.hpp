#pragma once

#include <cstdint>
#include <functional>

#include "schwarz/coefficients.hpp"
#include "schwarz/dof_map.hpp"
#include "schwarz/la/sparse_matrix.hpp"

namespace schwarz {

/// Right-hand side recipe: a seeded random load on the displacement
/// unknowns (pressure rows stay zero), or an interpolated body force.
struct RhsSpec {
    enum class Kind { seeded_random, body_force };
    Kind kind = Kind::seeded_random;
    std::uint64_t seed = 1;
    std::function<std::array<double, 2>(double, double)> force;
};

/// Assembled block system
///   [ A   B^T ] [u]   [F]
///   [ B  -C   ] [p] = [0]
/// with A the mu-weighted stiffness, B the divergence coupling and C the
/// (1/lambda)-weighted pressure mass (empty in the Stokes limit).
struct SaddleSystem {
    la::SparseMatrix A;
    la::SparseMatrix B;
    la::SparseMatrix C;
    la::Vector F;  ///< displacement block of the right-hand side
    DofMap dofs;
    SubdomainLayout layout;
    CoefficientField coeffs;
    ElementMatrices element;  ///< shared reference element operators
    bool stokes = false;      ///< constant pressures are a true null mode

    int total_dofs() const { return dofs.total_dofs(); }
    /// Full saddle right-hand side [F; 0].
    la::Vector full_rhs() const;
    /// y = [A B^T; B -C] x on stacked (u, p) vectors.
    la::Vector apply(const la::Vector& x) const;
};

SaddleSystem assemble_saddle(const CartesianMesh& mesh, const SubdomainLayout& layout,
                             const ReferenceBasis& basis, const CoefficientField& coeffs,
                             const RhsSpec& rhs);

/// Removes the weighted mean from a pressure coefficient vector
/// (idempotent projection onto zero-mean pressures).
class ZeroMeanProjector {
public:
    ZeroMeanProjector() = default;
    ZeroMeanProjector(const DofMap& dofs, const ElementMatrices& element);

    void apply(la::Vector& pressure) const;
    /// Projects the pressure tail of a stacked (u, p) vector.
    void apply_to_tail(la::Vector& stacked, int displacement_dofs) const;
    double mean_weight(int pressure_dof) const { return weights_[static_cast<std::size_t>(pressure_dof)]; }
    const la::Vector& one_vector() const { return one_; }

private:
    la::Vector weights_;  ///< integral of each pressure basis function
    la::Vector one_;      ///< coefficients representing the constant 1
    double volume_ = 0.0;
};

ZeroMeanProjector zero_mean_projector(const DofMap& dofs, const ElementMatrices& element);

/// Discrete inf-sup constant: smallest positive generalized eigenvalue of
/// B A^{-1} B^T q = beta^2 M_p q on zero-mean pressures, for the system
/// assembled with mu = 1. Returns 0 when B is rank-deficient beyond the
/// constant mode. Dense computation, guarded.
double compute_infsup(const SaddleSystem& system, int dense_guard = 6000);

} // namespace schwarz
