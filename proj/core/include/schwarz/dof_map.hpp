#pragma once

#include <vector>

#include "schwarz/elements.hpp"
#include "schwarz/mesh.hpp"

namespace schwarz {

/// Global numbering: vector displacement unknowns at the grid nodes with
/// the homogeneous Dirichlet boundary removed (two interleaved components
/// per free node, nodes row-major), and discontinuous pressure unknowns
/// grouped per element.
struct DofMap {
    Discretization kind = Discretization::fem_q2p1;
    int degree = 2;
    int step = 2;              ///< element side subdivisions of the node grid
    int grid_x = 0, grid_y = 0;  ///< node grid dimensions

    CartesianMesh mesh;

    std::vector<int> node_dof;   ///< node -> x-component dof id, -1 on the boundary
    std::vector<double> node_x;  ///< physical node coordinates
    std::vector<double> node_y;

    int displacement_dofs = 0;
    int pressure_per_element = 0;
    int pressure_dofs = 0;

    int node_id(int ix, int iy) const { return iy * grid_x + ix; }
    int total_dofs() const { return displacement_dofs + pressure_dofs; }

    /// Global node ids of element e, tensor row-major like the reference basis.
    std::vector<int> element_nodes(int e) const;
    /// Displacement dof ids of element e, (node, component) interleaved;
    /// -1 marks constrained boundary entries.
    std::vector<int> element_displacement_dofs(int e) const;
    int pressure_dof(int e, int local) const { return e * pressure_per_element + local; }
};

DofMap build_dof_map(const CartesianMesh& mesh, const ReferenceBasis& basis);

/// Displacement dofs strictly interior to a rectangle of elements
/// (the local space carrying zero Dirichlet data on the rectangle
/// boundary), ascending.
std::vector<int> interior_displacement_dofs(const DofMap& dofs, const ElementRect& rect);

} // namespace schwarz
