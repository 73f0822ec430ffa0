#include "schwarz/krylov.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "schwarz/la/errors.hpp"
#include "schwarz/la/sparse_solvers.hpp"

namespace schwarz {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

} // namespace

std::pair<la::Vector, SolveReport> pcg(const la::ApplyFn& op, const la::ApplyFn& prec,
                                       const la::Vector& b, double tol, int max_iter) {
    const auto t0 = Clock::now();
    SolveReport report;
    la::Vector x(b.size(), 0.0);
    la::Vector r = b;
    const double res0 = la::norm2(r);
    report.residual_history.push_back(res0);
    if (res0 == 0.0) {
        report.converged = true;
        report.wall_ms = elapsed_ms(t0);
        return {x, report};
    }

    std::vector<double> alphas, betas;
    la::Vector z = prec ? prec(r) : r;
    report.preconditioned_residual_history.push_back(la::norm2(z));
    double rz = la::dot(r, z);
    if (rz <= 0.0)
        throw std::runtime_error("pcg: preconditioner is not positive definite; use gmres instead");
    la::Vector p = z;

    for (int k = 0; k < max_iter; ++k) {
        const la::Vector Ap = op(p);
        const double pAp = la::dot(p, Ap);
        if (pAp <= 0.0) throw std::runtime_error("pcg: operator is not positive definite");
        const double alpha = rz / pAp;
        alphas.push_back(alpha);
        la::axpy(alpha, p, x);
        la::axpy(-alpha, Ap, r);
        const double res = la::norm2(r);
        report.residual_history.push_back(res);
        if (res <= tol * res0) {
            report.converged = true;
            break;
        }
        z = prec ? prec(r) : r;
        report.preconditioned_residual_history.push_back(la::norm2(z));
        const double rz_next = la::dot(r, z);
        if (rz_next <= 0.0)
            throw std::runtime_error("pcg: preconditioner is not positive definite; use gmres instead");
        const double beta = rz_next / rz;
        betas.push_back(beta);
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = z[i] + beta * p[i];
        rz = rz_next;
    }
    report.iterations = static_cast<int>(report.residual_history.size()) - 1;

    // Ritz values of the preconditioned operator from the iteration
    // coefficients.
    const std::size_t m = alphas.size();
    if (m > 0) {
        std::vector<double> diag(m), off(m > 1 ? m - 1 : 0);
        for (std::size_t k = 0; k < m; ++k) {
            diag[k] = 1.0 / alphas[k];
            if (k > 0) diag[k] += betas[k - 1] / alphas[k - 1];
            if (k + 1 < m) off[k] = std::sqrt(betas[k]) / alphas[k];
        }
        const std::vector<double> ev = la::tridiag_eigenvalues(diag, off);
        report.lambda_min = ev.front();
        report.lambda_max = ev.back();
        report.cond = report.lambda_max / report.lambda_min;
        report.cond_source = "lanczos";
    }
    report.wall_ms = elapsed_ms(t0);
    return {x, report};
}

std::pair<la::Vector, SolveReport> gmres(const la::ApplyFn& op, const la::ApplyFn& prec,
                                         const la::Vector& b, double tol, int max_iter) {
    const auto t0 = Clock::now();
    SolveReport report;
    const std::size_t n = b.size();
    la::Vector x(n, 0.0);

    la::Vector r0 = prec ? prec(b) : b;
    const double beta0 = la::norm2(r0);
    report.residual_history.push_back(beta0);
    if (beta0 == 0.0) {
        report.converged = true;
        report.wall_ms = elapsed_ms(t0);
        return {x, report};
    }

    std::vector<la::Vector> basis;
    la::scale(1.0 / beta0, r0);
    basis.push_back(std::move(r0));

    std::vector<std::vector<double>> hcols;  // column k holds h(0..k+1, k)
    std::vector<double> cs, sn, g{beta0};

    int m = 0;
    for (int k = 0; k < max_iter; ++k) {
        la::Vector w = op(basis[static_cast<std::size_t>(k)]);
        if (prec) w = prec(w);

        std::vector<double> h(static_cast<std::size_t>(k) + 2, 0.0);
        for (int i = 0; i <= k; ++i) {
            const double hik = la::dot(w, basis[static_cast<std::size_t>(i)]);
            h[static_cast<std::size_t>(i)] = hik;
            la::axpy(-hik, basis[static_cast<std::size_t>(i)], w);
        }
        // one reorthogonalization pass
        for (int i = 0; i <= k; ++i) {
            const double corr = la::dot(w, basis[static_cast<std::size_t>(i)]);
            h[static_cast<std::size_t>(i)] += corr;
            la::axpy(-corr, basis[static_cast<std::size_t>(i)], w);
        }
        const double hnext = la::norm2(w);
        h[static_cast<std::size_t>(k) + 1] = hnext;

        // previous Givens rotations
        for (int i = 0; i < k; ++i) {
            const double tmp = cs[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(i)] +
                               sn[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(i) + 1];
            h[static_cast<std::size_t>(i) + 1] = -sn[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(i)] +
                                                 cs[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(i) + 1];
            h[static_cast<std::size_t>(i)] = tmp;
        }
        const double denom = std::hypot(h[static_cast<std::size_t>(k)], hnext);
        const double c = denom == 0.0 ? 1.0 : h[static_cast<std::size_t>(k)] / denom;
        const double s = denom == 0.0 ? 0.0 : hnext / denom;
        cs.push_back(c);
        sn.push_back(s);
        h[static_cast<std::size_t>(k)] = c * h[static_cast<std::size_t>(k)] + s * hnext;
        h[static_cast<std::size_t>(k) + 1] = 0.0;
        g.push_back(-s * g[static_cast<std::size_t>(k)]);
        g[static_cast<std::size_t>(k)] *= c;
        hcols.push_back(std::move(h));
        m = k + 1;

        const double res = std::abs(g[static_cast<std::size_t>(k) + 1]);
        report.residual_history.push_back(res);
        if (res <= tol * beta0) {
            report.converged = true;
            break;
        }
        if (k + 1 >= 50) {
            const double before = report.residual_history[report.residual_history.size() - 51];
            if (res >= before * (1.0 - 1e-10))
                throw std::runtime_error("gmres: stagnation, no residual reduction over 50 iterations");
        }
        if (hnext == 0.0) {  // exact breakdown: solution lies in the current space
            report.converged = true;
            break;
        }
        la::scale(1.0 / hnext, w);
        basis.push_back(std::move(w));
    }

    // back substitution on the triangularized Hessenberg system
    std::vector<double> y(static_cast<std::size_t>(m), 0.0);
    for (int i = m - 1; i >= 0; --i) {
        double s = g[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            s -= hcols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s / hcols[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    }
    for (int j = 0; j < m; ++j) la::axpy(y[static_cast<std::size_t>(j)], basis[static_cast<std::size_t>(j)], x);

    report.iterations = m;
    report.wall_ms = elapsed_ms(t0);
    return {x, report};
}

la::Vector direct_solve_reference(const SpdOperator& op, const la::Vector& b) {
    return la::SpdSolver(op.matrix).solve(b);
}

la::Vector direct_solve_reference(const SaddleSystem& system, const la::Vector& full_rhs) {
    const int nu = system.dofs.displacement_dofs;
    const int np = system.dofs.pressure_dofs;
    const int n = nu + np;
    if (static_cast<int>(full_rhs.size()) != n)
        throw la::DimensionError("direct_solve_reference: size mismatch");
    // Pin a pressure dof that carries the constant null mode (the first
    // pressure basis function of element 0 represents the constant).
    const int pin = system.stokes ? nu : -1;

    std::vector<la::Triplet> t;
    t.reserve(static_cast<std::size_t>(system.A.nnz() + 2 * system.B.nnz() + system.C.nnz()) + 1);
    auto add = [&](int row, int col, double v) {
        if (row == pin || col == pin) return;
        t.push_back({row, col, v});
    };
    for (int r = 0; r < nu; ++r)
        for (long long k = system.A.row_ptr()[r]; k < system.A.row_ptr()[r + 1]; ++k)
            add(r, system.A.col_idx()[static_cast<std::size_t>(k)],
                system.A.values()[static_cast<std::size_t>(k)]);
    for (int r = 0; r < np; ++r)
        for (long long k = system.B.row_ptr()[r]; k < system.B.row_ptr()[r + 1]; ++k) {
            const int col = system.B.col_idx()[static_cast<std::size_t>(k)];
            const double v = system.B.values()[static_cast<std::size_t>(k)];
            add(nu + r, col, v);
            add(col, nu + r, v);
        }
    for (int r = 0; r < np; ++r)
        for (long long k = system.C.row_ptr()[r]; k < system.C.row_ptr()[r + 1]; ++k)
            add(nu + r, nu + system.C.col_idx()[static_cast<std::size_t>(k)],
                -system.C.values()[static_cast<std::size_t>(k)]);
    if (pin >= 0) t.push_back({pin, pin, 1.0});

    la::Vector rhs = full_rhs;
    if (pin >= 0) rhs[static_cast<std::size_t>(pin)] = 0.0;
    la::Vector x = la::LuSolver(la::SparseMatrix::from_triplets(n, n, std::move(t))).solve(rhs);
    if (system.stokes) {
        ZeroMeanProjector proj = zero_mean_projector(system.dofs, system.element);
        proj.apply_to_tail(x, nu);
    }
    return x;
}

} // namespace schwarz
