#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "schwarz/dof_map.hpp"
#include "schwarz/mesh.hpp"

using namespace schwarz;

TEST_CASE("build_mesh shapes") {
    {
        auto [mesh, layout] = build_mesh(2, 2, 9);
        CHECK(mesh.nx == 18);
        CHECK(mesh.ny == 18);
        CHECK(mesh.hx == doctest::Approx(1.0 / 18));
        CHECK(layout.count() == 4);
        CHECK(layout.elems_per_side == 9);
        CHECK(layout.subdomain_size == doctest::Approx(0.5));
    }
    {
        auto [mesh, layout] = build_mesh(1, 1, 4);
        CHECK(mesh.element_count() == 16);
        CHECK(layout.count() == 1);
        CHECK(layout.element_rect(0).count() == 16);
    }
    {
        auto [mesh, layout] = build_mesh(4, 4, 5);
        CHECK(mesh.nx == 20);
        CHECK(mesh.ny == 20);
        CHECK(layout.count() == 16);
    }
    CHECK_THROWS(build_mesh(0, 2, 3));
    CHECK_THROWS(build_mesh(2, 2, 0));
}

TEST_CASE("subdomain rects partition the mesh") {
    for (auto [nx, ny, m] : {std::array{2, 3, 4}, std::array{4, 4, 2}, std::array{1, 2, 5}}) {
        auto [mesh, layout] = build_mesh(nx, ny, m);
        std::vector<int> owner_count(size_t(mesh.element_count()), 0);
        for (int s = 0; s < layout.count(); ++s) {
            const ElementRect r = layout.element_rect(s);
            for (int ey = r.y0; ey < r.y1; ++ey)
                for (int ex = r.x0; ex < r.x1; ++ex) {
                    ++owner_count[size_t(mesh.element_id(ex, ey))];
                    CHECK(layout.owner(ex, ey) == s);
                }
        }
        CHECK(std::all_of(owner_count.begin(), owner_count.end(), [](int c) { return c == 1; }));
    }
}

TEST_CASE("extend_overlap adds clipped element rings") {
    auto [mesh, layout] = build_mesh(2, 2, 4);
    const OverlapLayout overlap = extend_overlap(mesh, layout, 1);
    for (int s = 0; s < 4; ++s) {
        CHECK(overlap.extended[size_t(s)].count() == 25);  // 5x5, clipped at the corner
        CHECK(overlap.element_sets[size_t(s)].size() == 25);
    }
    // the extension contains the original subdomain
    for (int s = 0; s < 4; ++s) {
        const ElementRect own = layout.element_rect(s);
        const ElementRect ext = overlap.extended[size_t(s)];
        CHECK(ext.x0 <= own.x0);
        CHECK(ext.x1 >= own.x1);
        CHECK(ext.y0 <= own.y0);
        CHECK(ext.y1 >= own.y1);
    }
}

TEST_CASE("extend_overlap on a single subdomain fills the domain") {
    auto [mesh, layout] = build_mesh(1, 1, 4);
    const OverlapLayout overlap = extend_overlap(mesh, layout, 1);
    CHECK(overlap.extended[0].count() == mesh.element_count());
}

TEST_CASE("overlap coverage and monotonicity") {
    for (auto [n, m] : {std::array{2, 4}, std::array{3, 5}, std::array{4, 3}}) {
        auto [mesh, layout] = build_mesh(n, n, m);
        std::vector<std::vector<int>> previous;
        for (int k = 1; k < m; ++k) {
            const OverlapLayout overlap = extend_overlap(mesh, layout, k);
            std::set<int> covered;
            for (const auto& set : overlap.element_sets) covered.insert(set.begin(), set.end());
            CHECK(int(covered.size()) == mesh.element_count());
            if (!previous.empty()) {
                for (int s = 0; s < layout.count(); ++s)
                    CHECK(std::includes(overlap.element_sets[size_t(s)].begin(),
                                        overlap.element_sets[size_t(s)].end(),
                                        previous[size_t(s)].begin(), previous[size_t(s)].end()));
            }
            previous = overlap.element_sets;
        }
    }
}

TEST_CASE("extend_overlap rejects out-of-range widths") {
    auto [mesh, layout] = build_mesh(2, 2, 4);
    CHECK_THROWS(extend_overlap(mesh, layout, 0));
    CHECK_THROWS(extend_overlap(mesh, layout, 4));
}

TEST_CASE("vertex patches on a 2x2 layout form a 4-cycle at the center") {
    auto [mesh, layout] = build_mesh(2, 2, 3);
    const auto patches = vertex_patches(layout);
    CHECK(patches.size() == 9);

    int interior = 0;
    for (const VertexPatch& p : patches) {
        if (p.on_boundary) continue;
        ++interior;
        REQUIRE(p.subdomains.size() == 4);
        // each subdomain has exactly the two face neighbors, diagonals excluded
        for (const auto& adj : p.adjacency) CHECK(adj.size() == 2);
        // connected single cycle: walk it
        std::set<int> seen{0};
        int prev = 0, cur = p.adjacency[0][0];
        while (cur != 0) {
            seen.insert(cur);
            const auto& nb = p.adjacency[size_t(cur)];
            const int next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        CHECK(seen.size() == 4);
    }
    CHECK(interior == 1);
}

TEST_CASE("vertex patches: 1x2 layout has 2-subdomain interior-edge patches") {
    auto [mesh, layout] = build_mesh(1, 2, 3);
    const auto patches = vertex_patches(layout);
    int pairs = 0;
    for (const VertexPatch& p : patches)
        if (p.subdomains.size() == 2) {
            ++pairs;
            CHECK(p.adjacency[0] == std::vector<int>{1});
        }
    CHECK(pairs == 2);  // the two vertices of the shared face
}

TEST_CASE("vertex patch counts for a 4x4 layout") {
    auto [mesh, layout] = build_mesh(4, 4, 2);
    const auto patches = vertex_patches(layout);
    int interior = 0;
    for (const VertexPatch& p : patches)
        if (!p.on_boundary) ++interior;
    CHECK(interior == 9);
}

TEST_CASE("local dof sets are supported inside their extended subdomain") {
    // every element touching a local node belongs to the extension
    auto [mesh, layout] = build_mesh(3, 3, 3);
    const OverlapLayout overlap = extend_overlap(mesh, layout, 1);
    const auto basis = schwarz::ReferenceBasis::make(schwarz::Discretization::fem_q2p1);
    const schwarz::DofMap dofs = schwarz::build_dof_map(mesh, basis);
    for (int s = 0; s < layout.count(); ++s) {
        const ElementRect& rect = overlap.extended[size_t(s)];
        std::vector<bool> local(size_t(dofs.displacement_dofs), false);
        for (int d : interior_displacement_dofs(dofs, rect)) local[size_t(d)] = true;
        for (int e = 0; e < mesh.element_count(); ++e) {
            const bool inside = rect.contains(mesh.element_x(e), mesh.element_y(e));
            if (inside) continue;
            for (int d : dofs.element_displacement_dofs(e))
                if (d >= 0) CHECK_FALSE(local[size_t(d)]);
        }
    }
}

TEST_CASE("boundary patches record which subdomains own a boundary face at the vertex") {
    auto [mesh, layout] = build_mesh(2, 2, 3);
    for (const VertexPatch& p : vertex_patches(layout)) {
        if (!p.on_boundary) continue;
        // on a regular grid every subdomain of a boundary patch touches the
        // boundary with a face containing the vertex
        for (bool b : p.boundary_face_at_vertex) CHECK(b);
    }
}
