#include "schwarz/mesh.hpp"

#include <algorithm>
#include <stdexcept>

namespace schwarz {

std::pair<CartesianMesh, SubdomainLayout> build_mesh(int subdomains_x, int subdomains_y,
                                                     int elems_per_subdomain_side) {
    if (subdomains_x < 1 || subdomains_y < 1 || elems_per_subdomain_side < 1)
        throw std::invalid_argument("build_mesh: all counts must be >= 1");

    CartesianMesh mesh;
    mesh.nx = subdomains_x * elems_per_subdomain_side;
    mesh.ny = subdomains_y * elems_per_subdomain_side;
    mesh.hx = 1.0 / mesh.nx;
    mesh.hy = 1.0 / mesh.ny;

    SubdomainLayout layout;
    layout.subdomains_x = subdomains_x;
    layout.subdomains_y = subdomains_y;
    layout.elems_per_side = elems_per_subdomain_side;
    layout.subdomain_size = elems_per_subdomain_side * mesh.hx;
    return {mesh, layout};
}

OverlapLayout extend_overlap(const CartesianMesh& mesh, const SubdomainLayout& layout, int layers) {
    if (layers < 1) throw std::invalid_argument("extend_overlap: need at least one layer");
    if (layers >= layout.elems_per_side && layout.count() > 1)
        throw std::invalid_argument("extend_overlap: overlap must stay below the subdomain width");

    OverlapLayout overlap;
    overlap.layers = layers;
    overlap.extended.reserve(static_cast<std::size_t>(layout.count()));
    overlap.element_sets.reserve(static_cast<std::size_t>(layout.count()));
    for (int s = 0; s < layout.count(); ++s) {
        ElementRect r = layout.element_rect(s);
        r.x0 = std::max(0, r.x0 - layers);
        r.y0 = std::max(0, r.y0 - layers);
        r.x1 = std::min(mesh.nx, r.x1 + layers);
        r.y1 = std::min(mesh.ny, r.y1 + layers);
        overlap.extended.push_back(r);

        std::vector<int> elems;
        elems.reserve(static_cast<std::size_t>(r.count()));
        for (int ey = r.y0; ey < r.y1; ++ey)
            for (int ex = r.x0; ex < r.x1; ++ex) elems.push_back(mesh.element_id(ex, ey));
        overlap.element_sets.push_back(std::move(elems));
    }
    return overlap;
}

std::vector<VertexPatch> vertex_patches(const SubdomainLayout& layout) {
    const int nvx = layout.subdomains_x + 1;
    const int nvy = layout.subdomains_y + 1;
    std::vector<VertexPatch> patches;
    patches.reserve(static_cast<std::size_t>(nvx) * nvy);

    for (int vy = 0; vy < nvy; ++vy) {
        for (int vx = 0; vx < nvx; ++vx) {
            VertexPatch p;
            p.vertex_id = vy * nvx + vx;
            p.vx = vx;
            p.vy = vy;
            p.on_boundary = (vx == 0 || vx == nvx - 1 || vy == 0 || vy == nvy - 1);

            // Up to four subdomains touch the vertex.
            for (int dy = -1; dy <= 0; ++dy)
                for (int dx = -1; dx <= 0; ++dx) {
                    const int sx = vx + dx, sy = vy + dy;
                    if (sx >= 0 && sx < layout.subdomains_x && sy >= 0 && sy < layout.subdomains_y)
                        p.subdomains.push_back(layout.subdomain_id(sx, sy));
                }
            std::sort(p.subdomains.begin(), p.subdomains.end());

            const int n = static_cast<int>(p.subdomains.size());
            p.adjacency.assign(static_cast<std::size_t>(n), {});
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const int a = p.subdomains[static_cast<std::size_t>(i)];
                    const int b = p.subdomains[static_cast<std::size_t>(j)];
                    const int manhattan = std::abs(layout.subdomain_x(a) - layout.subdomain_x(b)) +
                                          std::abs(layout.subdomain_y(a) - layout.subdomain_y(b));
                    if (manhattan == 1) {  // full shared face
                        p.adjacency[static_cast<std::size_t>(i)].push_back(j);
                        p.adjacency[static_cast<std::size_t>(j)].push_back(i);
                    }
                }

            p.boundary_face_at_vertex.assign(static_cast<std::size_t>(n), false);
            for (int i = 0; i < n; ++i) {
                const int s = p.subdomains[static_cast<std::size_t>(i)];
                const int sx = layout.subdomain_x(s), sy = layout.subdomain_y(s);
                // A subdomain face lies on the boundary and contains the vertex
                // iff the vertex sits on that boundary line.
                const bool left = sx == 0 && vx == 0;
                const bool right = sx == layout.subdomains_x - 1 && vx == nvx - 1;
                const bool bottom = sy == 0 && vy == 0;
                const bool top = sy == layout.subdomains_y - 1 && vy == nvy - 1;
                p.boundary_face_at_vertex[static_cast<std::size_t>(i)] = left || right || bottom || top;
            }
            patches.push_back(std::move(p));
        }
    }
    return patches;
}

} // namespace schwarz
