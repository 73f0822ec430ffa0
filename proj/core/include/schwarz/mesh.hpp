#pragma once

#include <array>
#include <vector>

namespace schwarz {

/// Axis-aligned rectangle of elements [x0, x1) x [y0, y1), in element
/// indices of the fine grid.
struct ElementRect {
    int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    int count() const { return (x1 - x0) * (y1 - y0); }
    bool contains(int ex, int ey) const { return ex >= x0 && ex < x1 && ey >= y0 && ey < y1; }
};

/// Structured rectangular fine mesh of congruent square elements on the
/// unit square. Elements are numbered row-major: e = ey * nx + ex.
struct CartesianMesh {
    int nx = 0;        ///< elements in x
    int ny = 0;        ///< elements in y
    double hx = 0.0;   ///< element size in x (= 1/nx)
    double hy = 0.0;   ///< element size in y (= 1/ny)

    int element_count() const { return nx * ny; }
    int element_x(int e) const { return e % nx; }
    int element_y(int e) const { return e / nx; }
    int element_id(int ex, int ey) const { return ey * nx + ex; }

    /// Corner vertex ids on the (nx+1) x (ny+1) vertex grid, counter-clockwise
    /// from the lower-left corner.
    std::array<int, 4> element_vertices(int e) const {
        const int ex = element_x(e), ey = element_y(e), s = nx + 1;
        return {ey * s + ex, ey * s + ex + 1, (ey + 1) * s + ex + 1, (ey + 1) * s + ex};
    }
};

/// Nonoverlapping decomposition into an Nx x Ny grid of square subdomains,
/// which doubles as the coarse mesh. Subdomains are numbered row-major.
struct SubdomainLayout {
    int subdomains_x = 0;
    int subdomains_y = 0;
    int elems_per_side = 0;     ///< H/h
    double subdomain_size = 0;  ///< H

    int count() const { return subdomains_x * subdomains_y; }
    int subdomain_x(int s) const { return s % subdomains_x; }
    int subdomain_y(int s) const { return s / subdomains_x; }
    int subdomain_id(int sx, int sy) const { return sy * subdomains_x + sx; }

    ElementRect element_rect(int s) const {
        const int sx = subdomain_x(s), sy = subdomain_y(s), m = elems_per_side;
        return {sx * m, (sx + 1) * m, sy * m, (sy + 1) * m};
    }
    /// Subdomain owning element (ex, ey).
    int owner(int ex, int ey) const { return subdomain_id(ex / elems_per_side, ey / elems_per_side); }
};

/// Overlapping extension: each subdomain grows by `layers` full element
/// rings, clipped at the domain boundary.
struct OverlapLayout {
    int layers = 0;  ///< overlap width in elements (delta = layers * h)
    std::vector<ElementRect> extended;           ///< per subdomain
    std::vector<std::vector<int>> element_sets;  ///< sorted element ids per subdomain
};

/// Subdomains sharing one coarse-grid vertex, with their face-adjacency
/// graph. Interior vertices of a regular grid carry 4 subdomains in a cycle.
struct VertexPatch {
    int vertex_id = 0;           ///< (Nx+1) x (Ny+1) coarse vertex grid, row-major
    int vx = 0, vy = 0;          ///< vertex coordinates on that grid
    bool on_boundary = false;    ///< vertex lies on the domain boundary
    std::vector<int> subdomains; ///< sorted subdomain ids
    /// adjacency[i] lists positions (into `subdomains`) of face neighbors
    std::vector<std::vector<int>> adjacency;
    /// true if the subdomain has a full face on the domain boundary that
    /// contains this vertex
    std::vector<bool> boundary_face_at_vertex;
};

std::pair<CartesianMesh, SubdomainLayout> build_mesh(int subdomains_x, int subdomains_y,
                                                     int elems_per_subdomain_side);

OverlapLayout extend_overlap(const CartesianMesh& mesh, const SubdomainLayout& layout, int layers);

std::vector<VertexPatch> vertex_patches(const SubdomainLayout& layout);

} // namespace schwarz
