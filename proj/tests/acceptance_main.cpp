// Acceptance suite: runs the published experiment tables end to end and
// verifies the solver laboratory against their quantitative targets.
// Each test prints one PASS/FAIL line per criterion.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include "schwarz/harness.hpp"
#include "schwarz/krylov.hpp"
#include "schwarz/quasi_monotone.hpp"
#include "schwarz/schwarz_preconditioner.hpp"
#include "schwarz/suites.hpp"

using namespace schwarz;

namespace {

int g_criterion = 0;

void criterion_banner(int k, const std::string& title) {
    g_criterion = k;
    std::printf("---- criterion %2d: %s\n", k, title.c_str());
    std::fflush(stdout);
}

void report(const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("criterion %2d  %-4s  %s%s\n", g_criterion, pass ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : ("  [" + detail + "]").c_str());
    std::fflush(stdout);
}

void run_table_criterion(int k, const std::string& title, const std::string& suite_name) {
    criterion_banner(k, title);
    const SuiteResult result = run_suite(built_in_suite(suite_name), 2, &std::cout);
    for (std::size_t i = 0; i < result.cases.size(); ++i) {
        if (!result.errors[i].empty()) {
            report("case " + result.cases[i].sweep, false, result.errors[i]);
            CHECK_MESSAGE(result.errors[i].empty(), result.cases[i].sweep, ": ", result.errors[i]);
        }
    }
    for (const SuiteCheck& c : result.checks) {
        report(c.name, c.pass, c.detail);
        CHECK_MESSAGE(c.pass, c.name, " [", c.detail, "]");
    }
}

struct SmallConfig {
    int nsub;
    int hh;
    int overlap;
    double nu;
};

// deterministic spread of decompositions, overlaps and materials
const std::vector<SmallConfig> kSpectrumConfigs = {
    {2, 4, 1, 0.3},  {2, 4, 1, 0.4999}, {2, 4, 2, 0.3},  {2, 4, 2, 0.4999},
    {3, 4, 1, 0.3},  {3, 4, 1, 0.4999}, {3, 4, 2, 0.3},  {3, 4, 2, 0.4999},
    {2, 5, 1, 0.3},  {2, 5, 2, 0.4999}, {3, 5, 1, 0.4999}, {3, 5, 1, 0.3},
};

struct BuiltSpectrumCase {
    std::shared_ptr<SpdOperator> op;
    std::shared_ptr<SchwarzPreconditioner> prec;
};

BuiltSpectrumCase build_case(const SmallConfig& c) {
    auto [mesh, layout] = build_mesh(c.nsub, c.nsub, c.hh);
    const ReferenceBasis basis = ReferenceBasis::make(Discretization::fem_q2p1);
    RhsSpec rhs;
    rhs.seed = 7;
    const SaddleSystem sys = assemble_saddle(mesh, layout, basis,
                                             CoefficientField::constant(layout, 6000.0, c.nu), rhs);
    BuiltSpectrumCase out;
    out.op = std::make_shared<SpdOperator>(eliminate_pressure(sys));
    const OverlapLayout overlap = extend_overlap(mesh, layout, c.overlap);
    SchwarzOptions opt;
    opt.variant = SchwarzVariant::multiplicative;  // applies double duty; variant chosen per apply
    opt.levels = 2;
    opt.threads = 2;
    out.prec = std::make_shared<SchwarzPreconditioner>(
        SchwarzPreconditioner::build(*out.op, overlap, opt));
    return out;
}

std::string config_label(const SmallConfig& c) {
    std::ostringstream os;
    os << c.nsub << "x" << c.nsub << " H/h=" << c.hh << " k=" << c.overlap << " nu=" << c.nu;
    return os.str();
}

} // namespace

TEST_CASE("criterion 1: scalability of the two-level hybrid method") {
    run_table_criterion(1, "PCG-OHS(2) scalability, H/h=9, nu=0.4999", "table1");
}

TEST_CASE("criterion 2: multiplicative scalability and speed ratio") {
    run_table_criterion(2, "GMRES-OMS scalability at H/h=5 and the OAS/OMS ratio", "table2");
}

TEST_CASE("criterion 3: overlap growth law") {
    run_table_criterion(3, "PCG-OHS(2) condition growth in H/delta at H/h=128", "table3");
}

TEST_CASE("criterion 4: independence of the local mesh size") {
    run_table_criterion(4, "PCG-OAS(2)/OHS(2) cond vs H/h at H/delta=4", "table4");
}

TEST_CASE("criterion 5: local pressure space versions") {
    run_table_criterion(5, "GMRES-OAS for Stokes with pressure versions v1/v2/v3", "table5");
}

TEST_CASE("criterion 6: hybrid eigenvalue bounds vs additive") {
    criterion_banner(6, "lambda_min/lambda_max ordering of OHS vs OAS on 12 configurations");
    REQUIRE(kSpectrumConfigs.size() >= 10);
    for (const SmallConfig& c : kSpectrumConfigs) {
        const BuiltSpectrumCase built = build_case(c);
        const auto oas = preconditioned_spectrum(*built.op, *built.prec, SchwarzVariant::additive);
        const auto ohs = preconditioned_spectrum(*built.op, *built.prec, SchwarzVariant::hybrid);
        const bool min_ok = ohs.front() >= oas.front() - 1e-8;
        const bool max_ok = ohs.back() <= oas.back() + 1e-8;
        std::ostringstream detail;
        detail.precision(5);
        detail << "oas [" << oas.front() << ", " << oas.back() << "] ohs [" << ohs.front() << ", "
               << ohs.back() << "]";
        report(config_label(c), min_ok && max_ok, detail.str());
        CHECK_MESSAGE(min_ok, config_label(c), ": lambda_min decreased");
        CHECK_MESSAGE(max_ok, config_label(c), ": lambda_max increased");
    }
}

TEST_CASE("criterion 7: multiplicative error propagation is contractive") {
    criterion_banner(7, "energy norm of I - P_OMS below one on dense-guard configurations");
    for (const SmallConfig& c : kSpectrumConfigs) {
        const BuiltSpectrumCase built = build_case(c);
        const la::DenseMatrix P = operator_matrix(*built.prec);
        la::DenseMatrix E(P.rows(), P.cols());
        for (int i = 0; i < P.rows(); ++i)
            for (int j = 0; j < P.cols(); ++j) E(i, j) = (i == j ? 1.0 : 0.0) - P(i, j);
        const double norm = a_norm(*built.op, E);
        report(config_label(c), norm < 1.0, "norm " + std::to_string(norm));
        CHECK_MESSAGE(norm < 1.0, config_label(c), ": ||E||_A = ", norm);
    }
}

TEST_CASE("criterion 8: pressure elimination consistency") {
    criterion_banner(8, "saddle direct solve vs reformulated solve with pressure recovery");
    for (double nu : {0.3, 0.4999}) {
        for (int elems : {2, 4, 6}) {
            auto [mesh, layout] = build_mesh(2, 2, elems / 2);
            const ReferenceBasis basis = ReferenceBasis::make(Discretization::fem_q2p1);
            RhsSpec rhs;
            rhs.seed = 99;
            const SaddleSystem sys = assemble_saddle(
                mesh, layout, basis, CoefficientField::constant(layout, 6000.0, nu), rhs);
            const SpdOperator op = eliminate_pressure(sys);
            const la::Vector u = direct_solve_reference(op, op.F);
            const la::Vector p = recover_pressure(op, u);
            la::Vector stacked(std::size_t(sys.total_dofs()));
            std::copy(u.begin(), u.end(), stacked.begin());
            std::copy(p.begin(), p.end(), stacked.begin() + op.size());
            const la::Vector direct = direct_solve_reference(sys, sys.full_rhs());
            la::Vector diff = stacked;
            la::axpy(-1.0, direct, diff);
            const double rel = la::norm2(diff) / la::norm2(direct);
            std::ostringstream label;
            label << elems << "x" << elems << " elements, nu=" << nu;
            report(label.str(), rel <= 1e-8, "rel " + std::to_string(rel));
            CHECK_MESSAGE(rel <= 1e-8, label.str(), ": relative gap ", rel);
        }
    }
}

TEST_CASE("criterion 9: robustness in the incompressible limit and under jumps") {
    run_table_criterion(9, "nu-sweep robustness (table7)", "table7");
    run_table_criterion(9, "central jump and checkerboard robustness (table8)", "table8");
}

TEST_CASE("criterion 10: spectral element degree independence") {
    run_table_criterion(10, "SEM PCG-OHS(2) cond across degrees 3..8", "table9");
}

TEST_CASE("criterion 11: quadrature and basis fundamentals") {
    criterion_banner(11, "GLL exactness, partition of unity, rigid modes, mass diagonality");

    bool gll_ok = true;
    for (int n = 1; n <= 8 && gll_ok; ++n) {
        const GllRule r = gll_rule(n);
        for (int d = 0; d <= 2 * n - 1; ++d) {
            double q = 0.0;
            for (std::size_t i = 0; i < r.nodes.size(); ++i)
                q += r.weights[i] * std::pow(r.nodes[i], d);
            const double exact = d % 2 == 1 ? 0.0 : 2.0 / (d + 1);
            if (std::abs(q - exact) > 1e-12) gll_ok = false;
        }
    }
    report("GLL quadrature exact to degree 2n-1 (1e-12)", gll_ok);
    CHECK(gll_ok);

    bool pou_ok = true;
    std::mt19937 gen(51);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (const ReferenceBasis& basis : {ReferenceBasis::make(Discretization::fem_q2p1),
                                        ReferenceBasis::make(Discretization::sem, 6)}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto vals = basis.displacement_values(dist(gen), dist(gen));
            double sum = 0.0;
            for (double v : vals) sum += v;
            if (std::abs(sum - 1.0) > 1e-13) pou_ok = false;
        }
    }
    report("displacement partition of unity (1e-13)", pou_ok);
    CHECK(pou_ok);

    bool rigid_ok = true;
    for (const ReferenceBasis& basis : {ReferenceBasis::make(Discretization::fem_q2p1),
                                        ReferenceBasis::make(Discretization::sem, 4)}) {
        const ElementMatrices em = element_matrices(basis, 0.2);
        const int nps = basis.nodes_per_side();
        const int nn = basis.displacement_nodes();
        la::Vector rot(std::size_t(2 * nn));
        for (int ay = 0; ay < nps; ++ay)
            for (int ax = 0; ax < nps; ++ax) {
                const double x = 0.5 * (basis.nodes_1d()[std::size_t(ax)] + 1.0) * 0.2;
                const double y = 0.5 * (basis.nodes_1d()[std::size_t(ay)] + 1.0) * 0.2;
                rot[std::size_t(2 * (ay * nps + ax))] = -y;
                rot[std::size_t(2 * (ay * nps + ax) + 1)] = x;
            }
        la::Vector out(std::size_t(2 * nn), 0.0);
        for (int i = 0; i < 2 * nn; ++i)
            for (int j = 0; j < 2 * nn; ++j) out[std::size_t(i)] += em.A(i, j) * rot[std::size_t(j)];
        if (la::norm2(out) > 1e-12) rigid_ok = false;
    }
    report("element stiffness annihilates rigid modes (1e-12)", rigid_ok);
    CHECK(rigid_ok);

    bool diag_ok = true;
    for (int n : {2, 5, 8}) {
        const ElementMatrices em = element_matrices(ReferenceBasis::make(Discretization::sem, n), 0.3);
        for (int a = 0; a < em.displacement_mass.rows(); ++a)
            for (int b = 0; b < em.displacement_mass.cols(); ++b)
                if (a != b && std::abs(em.displacement_mass(a, b)) > 1e-13) diag_ok = false;
    }
    report("SEM displacement mass diagonal (1e-13)", diag_ok);
    CHECK(diag_ok);
}

TEST_CASE("criterion 12: quasi-monotonicity verdicts") {
    criterion_banner(12, "published coefficient examples classify exactly");

    const QuasiMonotoneVerdict p1 = classify_path({300, 400, 600, 700});
    report("path (300,400,600,700): both assumptions", p1.assumption1 && p1.assumption2);
    CHECK(p1.assumption1);
    CHECK(p1.assumption2);

    // 4-cycle around an interior vertex, values (400, 600, 300, 700)
    // counter-clockwise: no admissible route from the 600 subdomain
    auto [mesh, layout] = build_mesh(2, 2, 1);
    (void)mesh;
    const auto patches = vertex_patches(layout);
    const VertexPatch* center = nullptr;
    for (const auto& p : patches)
        if (!p.on_boundary) center = &p;
    REQUIRE(center != nullptr);
    // sorted subdomains (SW, SE, NW, NE) host (400, 600, 700, 300): the cycle
    // SW-SE-NE-NW then reads 400, 600, 300, 700
    const QuasiMonotoneVerdict p2 = check_patch({400, 600, 700, 300}, center->adjacency,
                                                center->boundary_face_at_vertex, false);
    report("interior patch (400,600,300,700): neither", !p2.assumption1 && !p2.assumption2);
    CHECK_FALSE(p2.assumption1);
    CHECK_FALSE(p2.assumption2);

    const QuasiMonotoneVerdict p3 = classify_path({300, 600, 400, 700});
    report("path (300,600,400,700): relaxed only", !p3.assumption1 && p3.assumption2);
    CHECK_FALSE(p3.assumption1);
    CHECK(p3.assumption2);

    const QuasiMonotoneVerdict p4 = classify_path({300, 400, 600, 700});
    report("path (300,400,600,700) again: both assumptions", p4.assumption1 && p4.assumption2);
    CHECK(p4.assumption1);
    CHECK(p4.assumption2);

    auto [mesh4, layout4] = build_mesh(4, 4, 1);
    (void)mesh4;
    const QuasiMonotoneVerdict p5 =
        check_quasi_monotone(CoefficientField::checkerboard(layout4), vertex_patches(layout4));
    report("checkerboard coefficients: neither", !p5.assumption1 && !p5.assumption2);
    CHECK_FALSE(p5.assumption1);
    CHECK_FALSE(p5.assumption2);
}
