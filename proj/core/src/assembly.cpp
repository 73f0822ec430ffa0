#include "schwarz/assembly.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <stdexcept>

#include "schwarz/la/errors.hpp"

namespace schwarz {

la::Vector SaddleSystem::full_rhs() const {
    la::Vector rhs(static_cast<std::size_t>(total_dofs()), 0.0);
    std::copy(F.begin(), F.end(), rhs.begin());
    return rhs;
}

la::Vector SaddleSystem::apply(const la::Vector& x) const {
    const int nu = dofs.displacement_dofs, np = dofs.pressure_dofs;
    if (static_cast<int>(x.size()) != nu + np)
        throw la::DimensionError("SaddleSystem::apply: size mismatch");
    const la::Vector u(x.begin(), x.begin() + nu);
    const la::Vector p(x.begin() + nu, x.end());

    la::Vector yu = A.apply(u);
    const la::Vector btp = B.apply_transpose(p);
    for (int i = 0; i < nu; ++i) yu[static_cast<std::size_t>(i)] += btp[static_cast<std::size_t>(i)];

    la::Vector yp = B.apply(u);
    if (C.nnz() > 0) {
        const la::Vector cp = C.apply(p);
        for (int i = 0; i < np; ++i) yp[static_cast<std::size_t>(i)] -= cp[static_cast<std::size_t>(i)];
    }
    la::Vector y(static_cast<std::size_t>(nu + np));
    std::copy(yu.begin(), yu.end(), y.begin());
    std::copy(yp.begin(), yp.end(), y.begin() + nu);
    return y;
}

SaddleSystem assemble_saddle(const CartesianMesh& mesh, const SubdomainLayout& layout,
                             const ReferenceBasis& basis, const CoefficientField& coeffs,
                             const RhsSpec& rhs) {
    if (coeffs.subdomain_count() != layout.count())
        throw std::invalid_argument("assemble_saddle: coefficients must cover every subdomain");
    if (std::abs(mesh.hx - mesh.hy) > 1e-14 * mesh.hx)
        throw std::invalid_argument("assemble_saddle: elements must be square");

    SaddleSystem sys;
    sys.dofs = build_dof_map(mesh, basis);
    sys.layout = layout;
    sys.coeffs = coeffs;
    sys.element = element_matrices(basis, mesh.hx);
    sys.stokes = coeffs.all_incompressible();

    const ElementMatrices& em = sys.element;
    const int nn2 = em.A.rows();  // 2 * nodes per element
    const int np = em.C.rows();

    std::vector<la::Triplet> ta, tb, tc;
    ta.reserve(static_cast<std::size_t>(mesh.element_count()) * nn2 * nn2 / 2);
    tb.reserve(static_cast<std::size_t>(mesh.element_count()) * np * nn2);
    if (!sys.stokes) tc.reserve(static_cast<std::size_t>(mesh.element_count()) * np * np);

    for (int e = 0; e < mesh.element_count(); ++e) {
        const int s = layout.owner(mesh.element_x(e), mesh.element_y(e));
        const double mu = coeffs.mu(s);
        const double inv_lambda = coeffs.incompressible(s) ? 0.0 : 1.0 / coeffs.lambda(s);

        const std::vector<int> dofs = sys.dofs.element_displacement_dofs(e);
        for (int i = 0; i < nn2; ++i) {
            const int gi = dofs[static_cast<std::size_t>(i)];
            if (gi < 0) continue;
            for (int j = 0; j < nn2; ++j) {
                const int gj = dofs[static_cast<std::size_t>(j)];
                if (gj < 0) continue;
                ta.push_back({gi, gj, mu * em.A(i, j)});
            }
        }
        for (int m = 0; m < np; ++m) {
            const int gm = sys.dofs.pressure_dof(e, m);
            for (int j = 0; j < nn2; ++j) {
                const int gj = dofs[static_cast<std::size_t>(j)];
                if (gj < 0) continue;
                tb.push_back({gm, gj, em.B(m, j)});
            }
            if (inv_lambda != 0.0)
                for (int m2 = 0; m2 < np; ++m2)
                    tc.push_back({gm, sys.dofs.pressure_dof(e, m2), inv_lambda * em.C(m, m2)});
        }
    }
    const int nu = sys.dofs.displacement_dofs;
    const int npg = sys.dofs.pressure_dofs;
    sys.A = la::SparseMatrix::from_triplets(nu, nu, std::move(ta));
    sys.B = la::SparseMatrix::from_triplets(npg, nu, std::move(tb));
    sys.C = la::SparseMatrix::from_triplets(npg, npg, std::move(tc));

    // Right-hand side on the displacement block.
    sys.F.assign(static_cast<std::size_t>(nu), 0.0);
    if (rhs.kind == RhsSpec::Kind::seeded_random) {
        std::mt19937_64 gen(rhs.seed);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (double& v : sys.F) v = dist(gen);
    } else {
        if (!rhs.force) throw std::invalid_argument("assemble_saddle: body force not set");
        const auto& basis_pts = basis.quad_points_1d();
        const auto& basis_wts = basis.quad_weights_1d();
        const int nq = static_cast<int>(basis_pts.size());
        const double jac = em.jacobian_det;
        for (int e = 0; e < mesh.element_count(); ++e) {
            const std::vector<int> dofs = sys.dofs.element_displacement_dofs(e);
            const double x0 = mesh.element_x(e) * mesh.hx;
            const double y0 = mesh.element_y(e) * mesh.hy;
            for (int qy = 0; qy < nq; ++qy)
                for (int qx = 0; qx < nq; ++qx) {
                    const double xi = basis_pts[static_cast<std::size_t>(qx)];
                    const double eta = basis_pts[static_cast<std::size_t>(qy)];
                    const double w = basis_wts[static_cast<std::size_t>(qx)] *
                                     basis_wts[static_cast<std::size_t>(qy)] * jac;
                    const double px = x0 + 0.5 * (xi + 1.0) * mesh.hx;
                    const double py = y0 + 0.5 * (eta + 1.0) * mesh.hy;
                    const auto f = rhs.force(px, py);
                    const auto shapes = basis.displacement_values(xi, eta);
                    for (std::size_t a = 0; a < shapes.size(); ++a)
                        for (int c = 0; c < 2; ++c) {
                            const int g = dofs[2 * a + static_cast<std::size_t>(c)];
                            if (g >= 0)
                                sys.F[static_cast<std::size_t>(g)] +=
                                    w * shapes[a] * f[static_cast<std::size_t>(c)];
                        }
                }
        }
    }
    return sys;
}

ZeroMeanProjector::ZeroMeanProjector(const DofMap& dofs, const ElementMatrices& element) {
    const int np = dofs.pressure_per_element;
    weights_.assign(static_cast<std::size_t>(dofs.pressure_dofs), 0.0);
    one_.assign(static_cast<std::size_t>(dofs.pressure_dofs), 0.0);
    for (int e = 0; e < dofs.mesh.element_count(); ++e) {
        for (int m = 0; m < np; ++m) {
            weights_[static_cast<std::size_t>(dofs.pressure_dof(e, m))] =
                element.pressure_integrals[static_cast<std::size_t>(m)];
        }
        if (dofs.kind == Discretization::fem_q2p1) {
            one_[static_cast<std::size_t>(dofs.pressure_dof(e, 0))] = 1.0;  // constant mode
        } else {
            for (int m = 0; m < np; ++m) one_[static_cast<std::size_t>(dofs.pressure_dof(e, m))] = 1.0;
        }
    }
    volume_ = la::dot(weights_, one_);
}

void ZeroMeanProjector::apply(la::Vector& pressure) const {
    if (pressure.size() != weights_.size())
        throw la::DimensionError("ZeroMeanProjector: size mismatch");
    const double mean = la::dot(weights_, pressure) / volume_;
    la::axpy(-mean, one_, pressure);
}

void ZeroMeanProjector::apply_to_tail(la::Vector& stacked, int displacement_dofs) const {
    la::Vector p(stacked.begin() + displacement_dofs, stacked.end());
    apply(p);
    std::copy(p.begin(), p.end(), stacked.begin() + displacement_dofs);
}

ZeroMeanProjector zero_mean_projector(const DofMap& dofs, const ElementMatrices& element) {
    return {dofs, element};
}

double compute_infsup(const SaddleSystem& system, int dense_guard) {
    const int nu = system.dofs.displacement_dofs;
    const int np = system.dofs.pressure_dofs;
    if (nu > dense_guard || np > dense_guard)
        throw la::DimensionError("compute_infsup: problem exceeds the dense guard");

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nu, nu);
    for (int r = 0; r < nu; ++r)
        for (long long k = system.A.row_ptr()[r]; k < system.A.row_ptr()[r + 1]; ++k)
            A(r, system.A.col_idx()[static_cast<std::size_t>(k)]) +=
                system.A.values()[static_cast<std::size_t>(k)];
    Eigen::MatrixXd Bt = Eigen::MatrixXd::Zero(nu, np);
    for (int r = 0; r < np; ++r)
        for (long long k = system.B.row_ptr()[r]; k < system.B.row_ptr()[r + 1]; ++k)
            Bt(system.B.col_idx()[static_cast<std::size_t>(k)], r) +=
                system.B.values()[static_cast<std::size_t>(k)];

    // Unweighted pressure mass.
    Eigen::MatrixXd Mp = Eigen::MatrixXd::Zero(np, np);
    const int npe = system.dofs.pressure_per_element;
    for (int e = 0; e < system.dofs.mesh.element_count(); ++e)
        for (int m = 0; m < npe; ++m)
            for (int m2 = 0; m2 < npe; ++m2)
                Mp(system.dofs.pressure_dof(e, m), system.dofs.pressure_dof(e, m2)) +=
                    system.element.C(m, m2);

    const Eigen::MatrixXd S = Bt.transpose() * A.llt().solve(Bt);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Mp, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = es.eigenvalues();

    // One zero eigenvalue belongs to the constant pressure; more means B is
    // rank-deficient and the pair has no inf-sup constant.
    const double drop = std::max(1e-10 * std::max(ev.cwiseAbs().maxCoeff(), 1e-300), 1e-14);
    int zeros = 0;
    double smallest_positive = -1.0;
    for (int i = 0; i < ev.size(); ++i) {
        if (std::abs(ev(i)) <= drop)
            ++zeros;
        else if (ev(i) > 0.0 && smallest_positive < 0.0)
            smallest_positive = ev(i);
    }
    if (zeros > 1 || smallest_positive <= 0.0) return 0.0;
    return std::sqrt(smallest_positive);
}

} // namespace schwarz
