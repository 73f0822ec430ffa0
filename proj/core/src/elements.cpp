#include "schwarz/elements.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace schwarz {

namespace {

// P_n(x) and P_n'(x) by the Legendre three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0, p1 = x;
    if (n == 0) return {1.0, 0.0};
    for (int k = 1; k < n; ++k) {
        const double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
        p0 = p1;
        p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

std::vector<double> lagrange_values(const std::vector<double>& nodes, double x) {
    const int n = static_cast<int>(nodes.size());
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        double num = 1.0, den = 1.0;
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            num *= x - nodes[static_cast<std::size_t>(k)];
            den *= nodes[static_cast<std::size_t>(j)] - nodes[static_cast<std::size_t>(k)];
        }
        v[static_cast<std::size_t>(j)] = num / den;
    }
    return v;
}

std::vector<double> lagrange_derivatives(const std::vector<double>& nodes, double x) {
    const int n = static_cast<int>(nodes.size());
    std::vector<double> d(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        double den = 1.0;
        for (int k = 0; k < n; ++k)
            if (k != j) den *= nodes[static_cast<std::size_t>(j)] - nodes[static_cast<std::size_t>(k)];
        double sum = 0.0;
        for (int m = 0; m < n; ++m) {
            if (m == j) continue;
            double prod = 1.0;
            for (int k = 0; k < n; ++k)
                if (k != j && k != m) prod *= x - nodes[static_cast<std::size_t>(k)];
            sum += prod;
        }
        d[static_cast<std::size_t>(j)] = sum / den;
    }
    return d;
}

} // namespace

GllRule gll_rule(int degree) {
    if (degree < 1) throw std::invalid_argument("gll_rule: degree must be >= 1");
    const int n = degree;
    GllRule rule;
    rule.degree = n;
    rule.nodes.assign(static_cast<std::size_t>(n) + 1, 0.0);
    rule.weights.assign(static_cast<std::size_t>(n) + 1, 0.0);
    rule.nodes.front() = -1.0;
    rule.nodes.back() = 1.0;

    // Interior nodes: roots of P_n' by Newton from Chebyshev-like guesses.
    for (int i = 1; i < n; ++i) {
        double x = -std::cos(M_PI * i / n);
        for (int it = 0; it < 100; ++it) {
            const auto [p, dp] = legendre(n, x);
            const double d2p = (2.0 * x * dp - n * (n + 1.0) * p) / (1.0 - x * x);
            const double dx = dp / d2p;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = x;
    }
    // Enforce the exact symmetry of the node set.
    for (int i = 0; i <= n / 2; ++i) {
        const double s = 0.5 * (rule.nodes[static_cast<std::size_t>(i)] -
                                rule.nodes[static_cast<std::size_t>(n - i)]);
        rule.nodes[static_cast<std::size_t>(i)] = s;
        rule.nodes[static_cast<std::size_t>(n - i)] = -s;
    }
    for (int i = 0; i <= n; ++i) {
        const auto [p, dp] = legendre(n, rule.nodes[static_cast<std::size_t>(i)]);
        (void)dp;
        rule.weights[static_cast<std::size_t>(i)] = 2.0 / (n * (n + 1.0) * p * p);
    }
    return rule;
}

ReferenceBasis ReferenceBasis::make(Discretization kind, int degree) {
    ReferenceBasis basis;
    basis.kind_ = kind;
    if (kind == Discretization::fem_q2p1) {
        basis.degree_ = 2;
        basis.nodes_1d_ = {-1.0, 0.0, 1.0};
        basis.pressure_dofs_ = 3;
        // 3-point Gauss, exact to degree 5.
        const double g = std::sqrt(3.0 / 5.0);
        basis.quad_points_ = {-g, 0.0, g};
        basis.quad_weights_ = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
    } else {
        if (degree < 2) throw std::invalid_argument("ReferenceBasis: SEM requires degree >= 2");
        basis.degree_ = degree;
        const GllRule rule = gll_rule(degree);
        basis.nodes_1d_ = rule.nodes;
        basis.pressure_dofs_ = (degree - 1) * (degree - 1);
        basis.quad_points_ = rule.nodes;
        basis.quad_weights_ = rule.weights;
    }
    return basis;
}

std::vector<double> ReferenceBasis::displacement_values(double xi, double eta) const {
    const std::vector<double> vx = lagrange_values(nodes_1d_, xi);
    const std::vector<double> vy = lagrange_values(nodes_1d_, eta);
    const int nps = nodes_per_side();
    std::vector<double> out(static_cast<std::size_t>(nps) * nps);
    for (int ay = 0; ay < nps; ++ay)
        for (int ax = 0; ax < nps; ++ax)
            out[static_cast<std::size_t>(ay * nps + ax)] =
                vx[static_cast<std::size_t>(ax)] * vy[static_cast<std::size_t>(ay)];
    return out;
}

std::vector<std::array<double, 2>> ReferenceBasis::displacement_gradients(double xi, double eta) const {
    const std::vector<double> vx = lagrange_values(nodes_1d_, xi);
    const std::vector<double> vy = lagrange_values(nodes_1d_, eta);
    const std::vector<double> dx = lagrange_derivatives(nodes_1d_, xi);
    const std::vector<double> dy = lagrange_derivatives(nodes_1d_, eta);
    const int nps = nodes_per_side();
    std::vector<std::array<double, 2>> out(static_cast<std::size_t>(nps) * nps);
    for (int ay = 0; ay < nps; ++ay)
        for (int ax = 0; ax < nps; ++ax)
            out[static_cast<std::size_t>(ay * nps + ax)] = {
                dx[static_cast<std::size_t>(ax)] * vy[static_cast<std::size_t>(ay)],
                vx[static_cast<std::size_t>(ax)] * dy[static_cast<std::size_t>(ay)]};
    return out;
}

std::vector<double> ReferenceBasis::pressure_values(double xi, double eta) const {
    if (kind_ == Discretization::fem_q2p1) return {1.0, xi, eta};
    // Degree n-2 Lagrange basis on the interior GLL nodes, evaluated anywhere
    // (its values on the endpoint nodes are extrapolations, not zero).
    const std::vector<double> interior(nodes_1d_.begin() + 1, nodes_1d_.end() - 1);
    const std::vector<double> vx = lagrange_values(interior, xi);
    const std::vector<double> vy = lagrange_values(interior, eta);
    const int m = static_cast<int>(interior.size());
    std::vector<double> out(static_cast<std::size_t>(m) * m);
    for (int ay = 0; ay < m; ++ay)
        for (int ax = 0; ax < m; ++ax)
            out[static_cast<std::size_t>(ay * m + ax)] =
                vx[static_cast<std::size_t>(ax)] * vy[static_cast<std::size_t>(ay)];
    return out;
}

ElementMatrices element_matrices(const ReferenceBasis& basis, double h) {
    if (h <= 0.0) throw std::invalid_argument("element_matrices: h must be positive");
    const int nn = basis.displacement_nodes();
    const int np = basis.pressure_dofs();
    const int nq = static_cast<int>(basis.quad_points_1d().size());
    const double jac = h * h / 4.0;        // reference square [-1,1]^2
    const double chain = 2.0 / h;          // d/dx = (2/h) d/dxi

    ElementMatrices em;
    em.A = la::DenseMatrix(2 * nn, 2 * nn);
    em.B = la::DenseMatrix(np, 2 * nn);
    em.C = la::DenseMatrix(np, np);
    em.displacement_mass = la::DenseMatrix(nn, nn);
    em.pressure_integrals.assign(static_cast<std::size_t>(np), 0.0);
    em.jacobian_det = jac;
    em.h = h;

    for (int qy = 0; qy < nq; ++qy) {
        for (int qx = 0; qx < nq; ++qx) {
            const double xi = basis.quad_points_1d()[static_cast<std::size_t>(qx)];
            const double eta = basis.quad_points_1d()[static_cast<std::size_t>(qy)];
            const double w = basis.quad_weights_1d()[static_cast<std::size_t>(qx)] *
                             basis.quad_weights_1d()[static_cast<std::size_t>(qy)] * jac;

            const auto shapes = basis.displacement_values(xi, eta);
            const auto grads_ref = basis.displacement_gradients(xi, eta);
            const auto press = basis.pressure_values(xi, eta);

            std::vector<std::array<double, 2>> g(static_cast<std::size_t>(nn));
            for (int a = 0; a < nn; ++a)
                g[static_cast<std::size_t>(a)] = {grads_ref[static_cast<std::size_t>(a)][0] * chain,
                                                  grads_ref[static_cast<std::size_t>(a)][1] * chain};

            // 2 D(u):D(v) for u = N_a e_c, v = N_b e_d reduces to
            // delta_cd (grad_a . grad_b) + grad_a[d] grad_b[c].
            for (int a = 0; a < nn; ++a) {
                for (int b = 0; b < nn; ++b) {
                    const double gg = g[static_cast<std::size_t>(a)][0] * g[static_cast<std::size_t>(b)][0] +
                                      g[static_cast<std::size_t>(a)][1] * g[static_cast<std::size_t>(b)][1];
                    for (int c = 0; c < 2; ++c)
                        for (int d = 0; d < 2; ++d) {
                            double v = g[static_cast<std::size_t>(a)][d] * g[static_cast<std::size_t>(b)][c];
                            if (c == d) v += gg;
                            em.A(2 * a + c, 2 * b + d) += w * v;
                        }
                    em.displacement_mass(a, b) +=
                        w * shapes[static_cast<std::size_t>(a)] * shapes[static_cast<std::size_t>(b)];
                }
            }
            for (int m = 0; m < np; ++m) {
                const double qm = press[static_cast<std::size_t>(m)];
                for (int b = 0; b < nn; ++b)
                    for (int d = 0; d < 2; ++d)
                        em.B(m, 2 * b + d) -= w * qm * g[static_cast<std::size_t>(b)][d];
                for (int m2 = 0; m2 < np; ++m2)
                    em.C(m, m2) += w * qm * press[static_cast<std::size_t>(m2)];
                em.pressure_integrals[static_cast<std::size_t>(m)] += w * qm;
            }
        }
    }
    return em;
}

} // namespace schwarz
