#pragma once

#include <vector>

#include "schwarz/la/dense.hpp"

namespace schwarz {

/// Gauss-Lobatto-Legendre quadrature on [-1, 1]: endpoints plus the roots
/// of P_n', exact for polynomials of degree <= 2n-1.
struct GllRule {
    int degree = 0;
    std::vector<double> nodes;    ///< ascending, includes -1 and +1
    std::vector<double> weights;  ///< sums to 2
};

GllRule gll_rule(int degree);

enum class Discretization { fem_q2p1, sem };

/// Reference-square bases: biquadratic displacement with linear
/// discontinuous pressure (FEM), or degree-n tensor GLL displacement with
/// degree n-2 interior-node pressure (SEM).
class ReferenceBasis {
public:
    static ReferenceBasis make(Discretization kind, int degree = 2);

    Discretization kind() const { return kind_; }
    int degree() const { return degree_; }
    int nodes_per_side() const { return static_cast<int>(nodes_1d_.size()); }
    int displacement_nodes() const { return nodes_per_side() * nodes_per_side(); }
    int pressure_dofs() const { return pressure_dofs_; }
    const std::vector<double>& nodes_1d() const { return nodes_1d_; }

    /// Scalar displacement shapes at a reference point, tensor row-major
    /// (a = ay * nodes_per_side + ax).
    std::vector<double> displacement_values(double xi, double eta) const;
    /// Reference-coordinate gradients, same ordering; out[a] = {d/dxi, d/deta}.
    std::vector<std::array<double, 2>> displacement_gradients(double xi, double eta) const;
    std::vector<double> pressure_values(double xi, double eta) const;

    /// Quadrature on the reference square used for the element integrals:
    /// 3x3 Gauss for FEM (exact on affine squares), GLL(n) collocation for SEM.
    const std::vector<double>& quad_points_1d() const { return quad_points_; }
    const std::vector<double>& quad_weights_1d() const { return quad_weights_; }

private:
    Discretization kind_ = Discretization::fem_q2p1;
    int degree_ = 2;
    int pressure_dofs_ = 0;
    std::vector<double> nodes_1d_;
    std::vector<double> quad_points_;
    std::vector<double> quad_weights_;
};

/// Local operators of one square element of side h:
///   A: 2 * integral of D(u):D(v)   (displacement x displacement, unscaled by mu)
///   B: -integral of div(v) q       (pressure x displacement)
///   C: integral of p q             (pressure x pressure)
/// Displacement dofs are (node, component) interleaved: dof = 2*node + comp.
struct ElementMatrices {
    la::DenseMatrix A;
    la::DenseMatrix B;
    la::DenseMatrix C;
    la::DenseMatrix displacement_mass;  ///< component-scalar mass (node x node)
    std::vector<double> pressure_integrals;  ///< integral of each pressure shape
    double jacobian_det = 0.0;
    double h = 0.0;
};

ElementMatrices element_matrices(const ReferenceBasis& basis, double h);

} // namespace schwarz
