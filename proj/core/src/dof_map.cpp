#include "schwarz/dof_map.hpp"

#include <stdexcept>

namespace schwarz {

DofMap build_dof_map(const CartesianMesh& mesh, const ReferenceBasis& basis) {
    DofMap d;
    d.kind = basis.kind();
    d.degree = basis.degree();
    d.step = basis.nodes_per_side() - 1;
    d.grid_x = d.step * mesh.nx + 1;
    d.grid_y = d.step * mesh.ny + 1;
    d.mesh = mesh;

    const std::size_t n_nodes = static_cast<std::size_t>(d.grid_x) * d.grid_y;
    d.node_dof.assign(n_nodes, -1);
    d.node_x.assign(n_nodes, 0.0);
    d.node_y.assign(n_nodes, 0.0);

    // Node positions: elements carry the reference nodes mapped by the
    // affine element map, shared nodes coincide across elements.
    const auto& ref = basis.nodes_1d();
    std::vector<double> line_x(static_cast<std::size_t>(d.grid_x));
    std::vector<double> line_y(static_cast<std::size_t>(d.grid_y));
    for (int ix = 0; ix < d.grid_x; ++ix) {
        const int e = std::min(ix / d.step, mesh.nx - 1);
        const int local = ix - e * d.step;
        line_x[static_cast<std::size_t>(ix)] =
            (e + 0.5 * (ref[static_cast<std::size_t>(local)] + 1.0)) * mesh.hx;
    }
    for (int iy = 0; iy < d.grid_y; ++iy) {
        const int e = std::min(iy / d.step, mesh.ny - 1);
        const int local = iy - e * d.step;
        line_y[static_cast<std::size_t>(iy)] =
            (e + 0.5 * (ref[static_cast<std::size_t>(local)] + 1.0)) * mesh.hy;
    }

    int next = 0;
    for (int iy = 0; iy < d.grid_y; ++iy) {
        for (int ix = 0; ix < d.grid_x; ++ix) {
            const int id = d.node_id(ix, iy);
            d.node_x[static_cast<std::size_t>(id)] = line_x[static_cast<std::size_t>(ix)];
            d.node_y[static_cast<std::size_t>(id)] = line_y[static_cast<std::size_t>(iy)];
            const bool boundary = ix == 0 || ix == d.grid_x - 1 || iy == 0 || iy == d.grid_y - 1;
            if (!boundary) {
                d.node_dof[static_cast<std::size_t>(id)] = 2 * next;
                ++next;
            }
        }
    }
    d.displacement_dofs = 2 * next;
    d.pressure_per_element = basis.pressure_dofs();
    d.pressure_dofs = d.pressure_per_element * mesh.element_count();
    return d;
}

std::vector<int> DofMap::element_nodes(int e) const {
    const int ex = mesh.element_x(e), ey = mesh.element_y(e);
    const int nps = step + 1;
    std::vector<int> nodes(static_cast<std::size_t>(nps) * nps);
    for (int ay = 0; ay < nps; ++ay)
        for (int ax = 0; ax < nps; ++ax)
            nodes[static_cast<std::size_t>(ay * nps + ax)] =
                node_id(ex * step + ax, ey * step + ay);
    return nodes;
}

std::vector<int> DofMap::element_displacement_dofs(int e) const {
    const std::vector<int> nodes = element_nodes(e);
    std::vector<int> dofs(2 * nodes.size());
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        const int base = node_dof[static_cast<std::size_t>(nodes[a])];
        dofs[2 * a] = base < 0 ? -1 : base;
        dofs[2 * a + 1] = base < 0 ? -1 : base + 1;
    }
    return dofs;
}

std::vector<int> interior_displacement_dofs(const DofMap& dofs, const ElementRect& rect) {
    std::vector<int> out;
    const int x_lo = rect.x0 * dofs.step, x_hi = rect.x1 * dofs.step;
    const int y_lo = rect.y0 * dofs.step, y_hi = rect.y1 * dofs.step;
    for (int iy = y_lo + 1; iy < y_hi; ++iy) {
        for (int ix = x_lo + 1; ix < x_hi; ++ix) {
            const int base = dofs.node_dof[static_cast<std::size_t>(dofs.node_id(ix, iy))];
            if (base >= 0) {
                out.push_back(base);
                out.push_back(base + 1);
            }
        }
    }
    return out;
}

} // namespace schwarz
