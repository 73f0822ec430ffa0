#include "schwarz/spd_reform.hpp"

#include <stdexcept>

#include "schwarz/la/errors.hpp"

namespace schwarz {

la::Vector SpdOperator::apply(const la::Vector& x) const { return matrix.apply(x); }

SpdOperator eliminate_pressure(const SaddleSystem& system) {
    if (system.coeffs.any_incompressible())
        throw std::invalid_argument(
            "eliminate_pressure: lambda is infinite on some subdomain; "
            "solve the saddle point formulation instead");

    SpdOperator op;
    op.dofs = system.dofs;
    op.layout = system.layout;
    op.coeffs = system.coeffs;
    op.element = system.element;
    op.F = system.F;

    const ElementMatrices& em = system.element;
    const int nn2 = em.A.rows();
    const int np = em.C.rows();

    // C_K^{-1} B_K once; all elements are congruent.
    const la::DenseFactorization c_factor = la::DenseFactorization::compute(em.C, /*symmetric=*/true);
    op.pressure_recovery = la::DenseMatrix(np, nn2);
    for (int j = 0; j < nn2; ++j) {
        la::Vector col(static_cast<std::size_t>(np));
        for (int m = 0; m < np; ++m) col[static_cast<std::size_t>(m)] = em.B(m, j);
        c_factor.solve_inplace(col);
        for (int m = 0; m < np; ++m) op.pressure_recovery(m, j) = col[static_cast<std::size_t>(m)];
    }
    // Penalty block B^T C^{-1} B, also shared.
    la::DenseMatrix penalty(nn2, nn2);
    for (int i = 0; i < nn2; ++i)
        for (int j = 0; j < nn2; ++j) {
            double s = 0.0;
            for (int m = 0; m < np; ++m) s += em.B(m, i) * op.pressure_recovery(m, j);
            penalty(i, j) = s;
        }

    // One reduced element matrix per subdomain coefficient pair.
    const int nsub = system.layout.count();
    std::vector<la::DenseMatrix> reduced(static_cast<std::size_t>(nsub));
    for (int s = 0; s < nsub; ++s) {
        la::DenseMatrix K(nn2, nn2);
        const double mu = system.coeffs.mu(s), lambda = system.coeffs.lambda(s);
        for (int i = 0; i < nn2; ++i)
            for (int j = 0; j < nn2; ++j) K(i, j) = mu * em.A(i, j) + lambda * penalty(i, j);
        reduced[static_cast<std::size_t>(s)] = std::move(K);
    }

    const CartesianMesh& mesh = system.dofs.mesh;
    std::vector<la::Triplet> t;
    t.reserve(static_cast<std::size_t>(mesh.element_count()) * nn2 * nn2 / 2);
    for (int e = 0; e < mesh.element_count(); ++e) {
        const int s = system.layout.owner(mesh.element_x(e), mesh.element_y(e));
        const la::DenseMatrix& K = reduced[static_cast<std::size_t>(s)];
        const std::vector<int> dofs = system.dofs.element_displacement_dofs(e);
        for (int i = 0; i < nn2; ++i) {
            const int gi = dofs[static_cast<std::size_t>(i)];
            if (gi < 0) continue;
            for (int j = 0; j < nn2; ++j) {
                const int gj = dofs[static_cast<std::size_t>(j)];
                if (gj < 0) continue;
                t.push_back({gi, gj, K(i, j)});
            }
        }
    }
    const int nu = system.dofs.displacement_dofs;
    op.matrix = la::SparseMatrix::from_triplets(nu, nu, std::move(t));
    return op;
}

la::Vector recover_pressure(const SpdOperator& op, const la::Vector& u) {
    if (static_cast<int>(u.size()) != op.dofs.displacement_dofs)
        throw la::DimensionError("recover_pressure: size mismatch");
    const CartesianMesh& mesh = op.dofs.mesh;
    const int nn2 = op.pressure_recovery.cols();
    const int np = op.pressure_recovery.rows();
    la::Vector p(static_cast<std::size_t>(op.dofs.pressure_dofs), 0.0);
    la::Vector u_local(static_cast<std::size_t>(nn2));
    for (int e = 0; e < mesh.element_count(); ++e) {
        const int s = op.layout.owner(mesh.element_x(e), mesh.element_y(e));
        const double lambda = op.coeffs.lambda(s);
        const std::vector<int> dofs = op.dofs.element_displacement_dofs(e);
        for (int i = 0; i < nn2; ++i) {
            const int g = dofs[static_cast<std::size_t>(i)];
            u_local[static_cast<std::size_t>(i)] = g < 0 ? 0.0 : u[static_cast<std::size_t>(g)];
        }
        for (int m = 0; m < np; ++m) {
            double s_val = 0.0;
            for (int i = 0; i < nn2; ++i) s_val += op.pressure_recovery(m, i) * u_local[static_cast<std::size_t>(i)];
            p[static_cast<std::size_t>(op.dofs.pressure_dof(e, m))] = lambda * s_val;
        }
    }
    return p;
}

} // namespace schwarz
