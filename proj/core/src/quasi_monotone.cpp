#include "schwarz/quasi_monotone.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace schwarz {

namespace {

// Reachability from `start` to any target, stepping only along edges
// admitted by `edge_ok(from, to)`.
bool reaches(int start, const std::vector<bool>& target,
             const std::vector<std::vector<int>>& adjacency,
             const std::function<bool(int, int)>& edge_ok) {
    const int n = static_cast<int>(adjacency.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::queue<int> q;
    q.push(start);
    seen[static_cast<std::size_t>(start)] = true;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        if (target[static_cast<std::size_t>(u)]) return true;
        for (int v : adjacency[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)] && edge_ok(u, v)) {
                seen[static_cast<std::size_t>(v)] = true;
                q.push(v);
            }
        }
    }
    return false;
}

} // namespace

QuasiMonotoneVerdict check_patch(const std::vector<double>& mu,
                                 const std::vector<std::vector<int>>& adjacency,
                                 const std::vector<bool>& boundary_face_at_vertex,
                                 bool vertex_on_boundary) {
    const int n = static_cast<int>(mu.size());
    QuasiMonotoneVerdict v{true, true};
    if (n == 0) return v;

    const double max_mu = *std::max_element(mu.begin(), mu.end());
    std::vector<bool> target(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        bool ok = mu[static_cast<std::size_t>(i)] == max_mu;
        // At a boundary vertex the patch maximum must touch the domain
        // boundary with a face containing the vertex.
        if (ok && vertex_on_boundary) ok = boundary_face_at_vertex[static_cast<std::size_t>(i)];
        target[static_cast<std::size_t>(i)] = ok;
    }
    if (std::none_of(target.begin(), target.end(), [](bool b) { return b; })) return {false, false};

    for (int i = 0; i < n; ++i) {
        const double mu_i = mu[static_cast<std::size_t>(i)];
        const bool a1 = reaches(i, target, adjacency, [&](int a, int b) {
            return mu[static_cast<std::size_t>(b)] >= mu[static_cast<std::size_t>(a)];
        });
        const bool a2 = reaches(i, target, adjacency, [&](int, int b) {
            return mu[static_cast<std::size_t>(b)] >= mu_i;
        });
        v.assumption1 = v.assumption1 && a1;
        v.assumption2 = v.assumption2 && a2;
    }
    return v;
}

QuasiMonotoneVerdict check_quasi_monotone(const CoefficientField& coeffs,
                                          const std::vector<VertexPatch>& patches) {
    QuasiMonotoneVerdict v{true, true};
    for (const VertexPatch& p : patches) {
        std::vector<double> mu;
        mu.reserve(p.subdomains.size());
        for (int s : p.subdomains) mu.push_back(coeffs.mu(s));
        const QuasiMonotoneVerdict pv =
            check_patch(mu, p.adjacency, p.boundary_face_at_vertex, p.on_boundary);
        v.assumption1 = v.assumption1 && pv.assumption1;
        v.assumption2 = v.assumption2 && pv.assumption2;
    }
    return v;
}

QuasiMonotoneVerdict classify_path(const std::vector<double>& mu_along_path) {
    QuasiMonotoneVerdict v{true, true};
    for (std::size_t i = 0; i + 1 < mu_along_path.size(); ++i)
        if (mu_along_path[i + 1] < mu_along_path[i]) v.assumption1 = false;
    for (double m : mu_along_path)
        if (m < mu_along_path.front()) v.assumption2 = false;
    return v;
}

} // namespace schwarz
