#include <doctest.h>

#include <cmath>
#include <random>

#include "schwarz/elements.hpp"
#include "schwarz/la/dense.hpp"

using namespace schwarz;

TEST_CASE("gll rule low degrees") {
    const GllRule r1 = gll_rule(1);
    CHECK(r1.nodes == std::vector<double>{-1.0, 1.0});
    CHECK(r1.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r1.weights[1] == doctest::Approx(1.0).epsilon(1e-15));

    // roots of P_2' are {0}; weights 2/(n(n+1) P_n(x)^2) give (1/3, 4/3, 1/3)
    const GllRule r2 = gll_rule(2);
    CHECK(r2.nodes[0] == doctest::Approx(-1.0));
    CHECK(r2.nodes[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r2.nodes[2] == doctest::Approx(1.0));
    CHECK(r2.weights[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(r2.weights[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(r2.weights[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    CHECK_THROWS(gll_rule(0));
}

TEST_CASE("gll quadrature integrates monomials exactly up to degree 2n-1") {
    for (int n = 1; n <= 10; ++n) {
        const GllRule r = gll_rule(n);
        double wsum = 0.0;
        for (double w : r.weights) wsum += w;
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));

        for (int d = 0; d <= 2 * n - 1; ++d) {
            double q = 0.0;
            for (size_t i = 0; i < r.nodes.size(); ++i) q += r.weights[i] * std::pow(r.nodes[i], d);
            const double exact = d % 2 == 1 ? 0.0 : 2.0 / (d + 1);
            CHECK(std::abs(q - exact) <= 1e-12);
        }
    }
}

TEST_CASE("gll nodes are symmetric, sorted, and include the endpoints") {
    for (int n : {2, 3, 5, 8, 16}) {
        const GllRule r = gll_rule(n);
        REQUIRE(int(r.nodes.size()) == n + 1);
        CHECK(r.nodes.front() == -1.0);
        CHECK(r.nodes.back() == 1.0);
        for (size_t i = 1; i < r.nodes.size(); ++i) CHECK(r.nodes[i] > r.nodes[i - 1]);
        for (int i = 0; i <= n; ++i)
            CHECK(r.nodes[size_t(i)] == doctest::Approx(-r.nodes[size_t(n - i)]).epsilon(1e-14));
    }
}

TEST_CASE("reference basis dof counts") {
    const ReferenceBasis fem = ReferenceBasis::make(Discretization::fem_q2p1);
    CHECK(fem.displacement_nodes() == 9);
    CHECK(fem.pressure_dofs() == 3);

    const ReferenceBasis sem2 = ReferenceBasis::make(Discretization::sem, 2);
    CHECK(sem2.displacement_nodes() == 9);
    CHECK(sem2.pressure_dofs() == 1);

    const ReferenceBasis sem5 = ReferenceBasis::make(Discretization::sem, 5);
    CHECK(sem5.displacement_nodes() == 36);
    CHECK(sem5.pressure_dofs() == 16);

    CHECK_THROWS(ReferenceBasis::make(Discretization::sem, 1));
}

TEST_CASE("displacement shapes are a nodal partition of unity") {
    std::mt19937 gen(19);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (const ReferenceBasis& basis : {ReferenceBasis::make(Discretization::fem_q2p1),
                                        ReferenceBasis::make(Discretization::sem, 5)}) {
        for (int trial = 0; trial < 5; ++trial) {
            const double xi = dist(gen), eta = dist(gen);
            const auto vals = basis.displacement_values(xi, eta);
            double sum = 0.0;
            for (double v : vals) sum += v;
            CHECK(std::abs(sum - 1.0) <= 1e-13);
        }
        // nodal property
        const auto& nodes = basis.nodes_1d();
        const int nps = basis.nodes_per_side();
        const auto at_node = basis.displacement_values(nodes[1], nodes[0]);
        for (int a = 0; a < basis.displacement_nodes(); ++a)
            CHECK(at_node[size_t(a)] == doctest::Approx(a == 1 ? 1.0 : 0.0).epsilon(1e-13));
        (void)nps;
    }
}

TEST_CASE("element matrices: pressure mass and divergence against analytic values") {
    const double h = 0.125;
    for (const ReferenceBasis& basis : {ReferenceBasis::make(Discretization::fem_q2p1),
                                        ReferenceBasis::make(Discretization::sem, 4)}) {
        const ElementMatrices em = element_matrices(basis, h);

        // integral of 1*1 over the element
        double c_const = 0.0;
        if (basis.kind() == Discretization::fem_q2p1) {
            c_const = em.C(0, 0);
        } else {
            // constant pressure = all-ones coefficient vector
            for (int m = 0; m < em.C.rows(); ++m)
                for (int m2 = 0; m2 < em.C.cols(); ++m2) c_const += em.C(m, m2);
        }
        CHECK(c_const == doctest::Approx(h * h).epsilon(1e-12));

        // u = (x, 0) has div u = 1; the constant-pressure row of B gives -h^2
        const int nn = basis.displacement_nodes();
        const int nps = basis.nodes_per_side();
        la::Vector u(size_t(2 * nn), 0.0);
        for (int ay = 0; ay < nps; ++ay)
            for (int ax = 0; ax < nps; ++ax) {
                const double x = 0.5 * (basis.nodes_1d()[size_t(ax)] + 1.0) * h;
                u[size_t(2 * (ay * nps + ax))] = x;
            }
        la::Vector bu(size_t(em.B.rows()), 0.0);
        for (int m = 0; m < em.B.rows(); ++m)
            for (int j = 0; j < 2 * nn; ++j) bu[size_t(m)] += em.B(m, j) * u[size_t(j)];
        double integral = 0.0;
        if (basis.kind() == Discretization::fem_q2p1) {
            integral = bu[0];
        } else {
            for (double v : bu) integral += v;
        }
        CHECK(integral == doctest::Approx(-h * h).epsilon(1e-12));
    }
}

TEST_CASE("stiffness annihilates rigid body modes and nothing else") {
    for (const ReferenceBasis& basis : {ReferenceBasis::make(Discretization::fem_q2p1),
                                        ReferenceBasis::make(Discretization::sem, 3)}) {
        const double h = 0.25;
        const ElementMatrices em = element_matrices(basis, h);
        const int nn = basis.displacement_nodes();
        const int nps = basis.nodes_per_side();

        auto nodal = [&](auto fx, auto fy) {
            la::Vector u(static_cast<size_t>(2 * nn));
            for (int ay = 0; ay < nps; ++ay)
                for (int ax = 0; ax < nps; ++ax) {
                    const double x = 0.5 * (basis.nodes_1d()[size_t(ax)] + 1.0) * h;
                    const double y = 0.5 * (basis.nodes_1d()[size_t(ay)] + 1.0) * h;
                    u[size_t(2 * (ay * nps + ax))] = fx(x, y);
                    u[size_t(2 * (ay * nps + ax) + 1)] = fy(x, y);
                }
            return u;
        };
        const std::vector<la::Vector> rigid = {
            nodal([](double, double) { return 1.0; }, [](double, double) { return 0.0; }),
            nodal([](double, double) { return 0.0; }, [](double, double) { return 1.0; }),
            nodal([](double, double y) { return -y; }, [](double x, double) { return x; }),
        };
        for (const la::Vector& u : rigid) {
            la::Vector au(size_t(2 * nn), 0.0);
            for (int i = 0; i < 2 * nn; ++i)
                for (int j = 0; j < 2 * nn; ++j) au[size_t(i)] += em.A(i, j) * u[size_t(j)];
            CHECK(la::norm2(au) <= 1e-12);
        }

        // spectral count of the nullspace is exactly 3
        const auto ev = la::dense_spectrum(em.A, true);
        double scale = std::abs(ev.back());
        int zeros = 0;
        for (double v : ev)
            if (std::abs(v) <= 1e-12 * scale) ++zeros;
        CHECK(zeros == 3);
    }
}

TEST_CASE("element matrix scaling in h") {
    for (const ReferenceBasis& basis : {ReferenceBasis::make(Discretization::fem_q2p1),
                                        ReferenceBasis::make(Discretization::sem, 3)}) {
        const ElementMatrices e1 = element_matrices(basis, 0.2);
        const ElementMatrices e2 = element_matrices(basis, 0.4);
        for (int i = 0; i < e1.A.rows(); ++i)
            for (int j = 0; j < e1.A.cols(); ++j)
                CHECK(e2.A(i, j) == doctest::Approx(e1.A(i, j)).epsilon(1e-12));
        for (int m = 0; m < e1.B.rows(); ++m)
            for (int j = 0; j < e1.B.cols(); ++j)
                CHECK(e2.B(m, j) == doctest::Approx(2.0 * e1.B(m, j)).epsilon(1e-12));
        for (int m = 0; m < e1.C.rows(); ++m)
            for (int m2 = 0; m2 < e1.C.cols(); ++m2)
                CHECK(e2.C(m, m2) == doctest::Approx(4.0 * e1.C(m, m2)).epsilon(1e-12));
    }
}

TEST_CASE("sem displacement mass is diagonal under collocation quadrature") {
    for (int n : {2, 4, 7}) {
        const ReferenceBasis basis = ReferenceBasis::make(Discretization::sem, n);
        const ElementMatrices em = element_matrices(basis, 0.3);
        for (int a = 0; a < em.displacement_mass.rows(); ++a)
            for (int b = 0; b < em.displacement_mass.cols(); ++b)
                if (a != b) CHECK(std::abs(em.displacement_mass(a, b)) <= 1e-13);
    }
}
