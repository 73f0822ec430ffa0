#include "schwarz/schwarz_preconditioner.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "schwarz/la/errors.hpp"
#include "schwarz/la/parallel.hpp"

namespace schwarz {

namespace {

// Quadratic Lagrange values on {-1, 0, 1}.
std::array<double, 3> q2_shapes(double x) {
    return {0.5 * x * (x - 1.0), 1.0 - x * x, 0.5 * x * (x + 1.0)};
}

int clamp_cell(double coord, double cell_size, int cells) {
    int c = static_cast<int>(std::floor(coord / cell_size));
    return std::max(0, std::min(c, cells - 1));
}

} // namespace

CoarseSpace build_coarse_space(const DofMap& dofs, const SubdomainLayout& layout, bool mixed) {
    CoarseSpace cs;
    const int nsx = layout.subdomains_x, nsy = layout.subdomains_y;
    const double H = layout.subdomain_size;

    // Interior nodes of the biquadratic coarse grid.
    const int cgx = 2 * nsx + 1, cgy = 2 * nsy + 1;
    std::vector<int> coarse_node_dof(static_cast<std::size_t>(cgx) * cgy, -1);
    int next = 0;
    for (int cy = 1; cy < cgy - 1; ++cy)
        for (int cx = 1; cx < cgx - 1; ++cx) {
            coarse_node_dof[static_cast<std::size_t>(cy * cgx + cx)] = 2 * next;
            ++next;
        }
    cs.displacement_dofs = 2 * next;

    std::vector<la::Triplet> tu;
    for (int iy = 0; iy < dofs.grid_y; ++iy) {
        for (int ix = 0; ix < dofs.grid_x; ++ix) {
            const int node = dofs.node_id(ix, iy);
            const int fine_base = dofs.node_dof[static_cast<std::size_t>(node)];
            if (fine_base < 0) continue;
            const double x = dofs.node_x[static_cast<std::size_t>(node)];
            const double y = dofs.node_y[static_cast<std::size_t>(node)];
            const int sx = clamp_cell(x, H, nsx);
            const int sy = clamp_cell(y, H, nsy);
            const double xi = 2.0 * (x - sx * H) / H - 1.0;
            const double eta = 2.0 * (y - sy * H) / H - 1.0;
            const auto nx_ = q2_shapes(xi);
            const auto ny_ = q2_shapes(eta);
            for (int ay = 0; ay < 3; ++ay)
                for (int ax = 0; ax < 3; ++ax) {
                    const double v = nx_[static_cast<std::size_t>(ax)] * ny_[static_cast<std::size_t>(ay)];
                    if (std::abs(v) < 1e-14) continue;
                    const int cdof =
                        coarse_node_dof[static_cast<std::size_t>((2 * sy + ay) * cgx + (2 * sx + ax))];
                    if (cdof < 0) continue;
                    tu.push_back({cdof, fine_base, v});
                    tu.push_back({cdof + 1, fine_base + 1, v});
                }
        }
    }
    cs.interp_u = la::SparseMatrix::from_triplets(cs.displacement_dofs, dofs.displacement_dofs,
                                                  std::move(tu));

    if (mixed) {
        const CartesianMesh& mesh = dofs.mesh;
        std::vector<la::Triplet> tp;
        if (dofs.kind == Discretization::fem_q2p1) {
            cs.pressure_dofs = 3 * layout.count();
            const double ratio = mesh.hx / H;
            for (int e = 0; e < mesh.element_count(); ++e) {
                const int ex = mesh.element_x(e), ey = mesh.element_y(e);
                const int s = layout.owner(ex, ey);
                const double xc = (ex + 0.5) * mesh.hx, yc = (ey + 0.5) * mesh.hy;
                const double Xc = (layout.subdomain_x(s) + 0.5) * H;
                const double Yc = (layout.subdomain_y(s) + 0.5) * H;
                const int pe = dofs.pressure_dof(e, 0);
                tp.push_back({3 * s + 0, pe + 0, 1.0});
                tp.push_back({3 * s + 1, pe + 0, 2.0 * (xc - Xc) / H});
                tp.push_back({3 * s + 1, pe + 1, ratio});
                tp.push_back({3 * s + 2, pe + 0, 2.0 * (yc - Yc) / H});
                tp.push_back({3 * s + 2, pe + 2, ratio});
            }
        } else {
            cs.pressure_dofs = layout.count();
            for (int e = 0; e < mesh.element_count(); ++e) {
                const int s = layout.owner(mesh.element_x(e), mesh.element_y(e));
                for (int m = 0; m < dofs.pressure_per_element; ++m)
                    tp.push_back({s, dofs.pressure_dof(e, m), 1.0});
            }
        }
        cs.interp_p = la::SparseMatrix::from_triplets(cs.pressure_dofs, dofs.pressure_dofs,
                                                      std::move(tp));
    }
    return cs;
}

namespace {

std::vector<int> pressure_dofs_for(const DofMap& dofs, const CartesianMesh& mesh,
                                   const ElementRect& rect, LocalPressure version) {
    std::vector<int> out;
    for (int ey = rect.y0; ey < rect.y1; ++ey) {
        for (int ex = rect.x0; ex < rect.x1; ++ex) {
            if (version != LocalPressure::full_zero_mean) {
                // Drop elements touching the extension boundary, except where
                // that boundary coincides with the domain boundary.
                const bool trimmed = (ex == rect.x0 && rect.x0 > 0) ||
                                     (ex == rect.x1 - 1 && rect.x1 < mesh.nx) ||
                                     (ey == rect.y0 && rect.y0 > 0) ||
                                     (ey == rect.y1 - 1 && rect.y1 < mesh.ny);
                if (trimmed) continue;
            }
            const int e = mesh.element_id(ex, ey);
            for (int m = 0; m < dofs.pressure_per_element; ++m) out.push_back(dofs.pressure_dof(e, m));
        }
    }
    return out;
}

} // namespace

SchwarzPreconditioner SchwarzPreconditioner::build(const SpdOperator& op, const OverlapLayout& overlap,
                                                   const SchwarzOptions& options) {
    if (options.levels != 1 && options.levels != 2)
        throw std::invalid_argument("SchwarzPreconditioner: levels must be 1 or 2");
    if (options.variant == SchwarzVariant::hybrid && options.levels != 2)
        throw std::invalid_argument("SchwarzPreconditioner: the hybrid variant needs a coarse level");

    SchwarzPreconditioner prec;
    prec.formulation_ = Formulation::spd;
    prec.options_ = options;
    prec.spd_ = &op;
    prec.dim_ = op.size();

    const int nsub = op.layout.count();
    prec.restrictions_.resize(static_cast<std::size_t>(nsub));
    prec.spd_locals_.resize(static_cast<std::size_t>(nsub));

    la::parallel_for(nsub, options.threads, [&](int i) {
        Restriction r;
        r.displacement = interior_displacement_dofs(op.dofs, overlap.extended[static_cast<std::size_t>(i)]);
        la::SparseMatrix local = la::extract_submatrix(op.matrix, r.displacement, r.displacement);
        try {
            prec.spd_locals_[static_cast<std::size_t>(i)] = std::make_shared<la::SpdSolver>(local);
        } catch (const la::SingularMatrixError& e) {
            throw la::SingularMatrixError(
                "subdomain " + std::to_string(i) + ": " + e.what(), e.pivot_index);
        }
        prec.restrictions_[static_cast<std::size_t>(i)] = std::move(r);
    });

    if (options.levels == 2) {
        prec.coarse_ = build_coarse_space(op.dofs, op.layout, /*mixed=*/false);
        const int nc = prec.coarse_.displacement_dofs;
        la::DenseMatrix A0(nc, nc);
        la::Vector e(static_cast<std::size_t>(prec.dim_));
        for (int j = 0; j < nc; ++j) {
            la::Vector ec(static_cast<std::size_t>(nc), 0.0);
            ec[static_cast<std::size_t>(j)] = 1.0;
            const la::Vector v = prec.coarse_.interp_u.apply_transpose(ec);
            const la::Vector w = op.matrix.apply(v);
            const la::Vector col = prec.coarse_.interp_u.apply(w);
            for (int i2 = 0; i2 < nc; ++i2) A0(i2, j) = col[static_cast<std::size_t>(i2)];
        }
        prec.coarse_factor_ = std::make_unique<la::DenseFactorization>(
            la::DenseFactorization::compute(A0, /*symmetric=*/true));
    }
    return prec;
}

SchwarzPreconditioner SchwarzPreconditioner::build(const SaddleSystem& system,
                                                   const OverlapLayout& overlap,
                                                   const SchwarzOptions& options) {
    if (options.levels != 1 && options.levels != 2)
        throw std::invalid_argument("SchwarzPreconditioner: levels must be 1 or 2");
    if (options.variant == SchwarzVariant::hybrid && options.levels != 2)
        throw std::invalid_argument("SchwarzPreconditioner: the hybrid variant needs a coarse level");

    SchwarzPreconditioner prec;
    prec.formulation_ = Formulation::mixed;
    prec.options_ = options;
    prec.saddle_ = &system;
    prec.dim_ = system.total_dofs();
    prec.projector_ = zero_mean_projector(system.dofs, system.element);
    prec.project_output_ = system.stokes;

    const DofMap& dofs = system.dofs;
    const CartesianMesh& mesh = dofs.mesh;
    const int nsub = system.layout.count();
    const bool constrained = options.pressure != LocalPressure::trimmed_free;

    prec.restrictions_.resize(static_cast<std::size_t>(nsub));
    prec.lu_locals_.resize(static_cast<std::size_t>(nsub));

    la::parallel_for(nsub, options.threads, [&](int i) {
        const ElementRect& rect = overlap.extended[static_cast<std::size_t>(i)];
        Restriction r;
        r.displacement = interior_displacement_dofs(dofs, rect);
        r.pressure = pressure_dofs_for(dofs, mesh, rect, options.pressure);
        r.mean_constrained = constrained;

        const int nd = static_cast<int>(r.displacement.size());
        const int np = static_cast<int>(r.pressure.size());
        const int n = nd + np + (constrained ? 1 : 0);

        const la::SparseMatrix Add = la::extract_submatrix(system.A, r.displacement, r.displacement);
        const la::SparseMatrix Bpd = la::extract_submatrix(system.B, r.pressure, r.displacement);
        const la::SparseMatrix Cpp = la::extract_submatrix(system.C, r.pressure, r.pressure);

        std::vector<la::Triplet> t;
        t.reserve(static_cast<std::size_t>(Add.nnz() + 2 * Bpd.nnz() + Cpp.nnz()) + 2 * np);
        for (int row = 0; row < nd; ++row)
            for (long long k = Add.row_ptr()[row]; k < Add.row_ptr()[row + 1]; ++k)
                t.push_back({row, Add.col_idx()[static_cast<std::size_t>(k)],
                             Add.values()[static_cast<std::size_t>(k)]});
        for (int row = 0; row < np; ++row)
            for (long long k = Bpd.row_ptr()[row]; k < Bpd.row_ptr()[row + 1]; ++k) {
                const int col = Bpd.col_idx()[static_cast<std::size_t>(k)];
                const double v = Bpd.values()[static_cast<std::size_t>(k)];
                t.push_back({nd + row, col, v});
                t.push_back({col, nd + row, v});
            }
        for (int row = 0; row < np; ++row)
            for (long long k = Cpp.row_ptr()[row]; k < Cpp.row_ptr()[row + 1]; ++k)
                t.push_back({nd + row, nd + Cpp.col_idx()[static_cast<std::size_t>(k)],
                             -Cpp.values()[static_cast<std::size_t>(k)]});
        if (constrained) {
            for (int m = 0; m < np; ++m) {
                const double w = prec.projector_.mean_weight(r.pressure[static_cast<std::size_t>(m)]);
                t.push_back({nd + m, n - 1, w});
                t.push_back({n - 1, nd + m, w});
            }
        }
        try {
            prec.lu_locals_[static_cast<std::size_t>(i)] =
                std::make_shared<la::LuSolver>(la::SparseMatrix::from_triplets(n, n, std::move(t)));
        } catch (const la::SingularMatrixError& e) {
            throw la::SingularMatrixError(
                "subdomain " + std::to_string(i) + ": " + e.what(), e.pivot_index);
        }
        prec.restrictions_[static_cast<std::size_t>(i)] = std::move(r);
    });

    if (options.levels == 2) {
        prec.coarse_ = build_coarse_space(dofs, system.layout, /*mixed=*/true);
        const int ncu = prec.coarse_.displacement_dofs;
        const int ncp = prec.coarse_.pressure_dofs;
        const int nc = ncu + ncp;
        la::DenseMatrix K0(nc, nc);
        for (int j = 0; j < nc; ++j) {
            la::Vector vu(static_cast<std::size_t>(dofs.displacement_dofs), 0.0);
            la::Vector vp(static_cast<std::size_t>(dofs.pressure_dofs), 0.0);
            if (j < ncu) {
                la::Vector ec(static_cast<std::size_t>(ncu), 0.0);
                ec[static_cast<std::size_t>(j)] = 1.0;
                vu = prec.coarse_.interp_u.apply_transpose(ec);
            } else {
                la::Vector ec(static_cast<std::size_t>(ncp), 0.0);
                ec[static_cast<std::size_t>(j - ncu)] = 1.0;
                vp = prec.coarse_.interp_p.apply_transpose(ec);
            }
            // [A B^T; B -C] (vu, vp), then restrict.
            la::Vector yu = system.A.apply(vu);
            const la::Vector btp = system.B.apply_transpose(vp);
            for (std::size_t i2 = 0; i2 < yu.size(); ++i2) yu[i2] += btp[i2];
            la::Vector yp = system.B.apply(vu);
            if (system.C.nnz() > 0) {
                const la::Vector cp = system.C.apply(vp);
                for (std::size_t i2 = 0; i2 < yp.size(); ++i2) yp[i2] -= cp[i2];
            }
            const la::Vector cu = prec.coarse_.interp_u.apply(yu);
            const la::Vector cp = prec.coarse_.interp_p.apply(yp);
            for (int i2 = 0; i2 < ncu; ++i2) K0(i2, j) = cu[static_cast<std::size_t>(i2)];
            for (int i2 = 0; i2 < ncp; ++i2) K0(ncu + i2, j) = cp[static_cast<std::size_t>(i2)];
        }
        if (system.stokes) {
            // Constant coarse pressures are null; pin one dof carrying the
            // constant mode (the cell-0 constant) and re-project the
            // correction to zero mean afterwards.
            prec.coarse_pin_ = ncu;
            for (int i2 = 0; i2 < nc; ++i2) {
                K0(prec.coarse_pin_, i2) = 0.0;
                K0(i2, prec.coarse_pin_) = 0.0;
            }
            K0(prec.coarse_pin_, prec.coarse_pin_) = 1.0;
        }
        prec.coarse_factor_ = std::make_unique<la::DenseFactorization>(
            la::DenseFactorization::compute(K0, /*symmetric=*/false));
    }
    return prec;
}

void SchwarzPreconditioner::solve_local(int i, const la::Vector& global_r, la::Vector& local_z) const {
    const Restriction& r = restrictions_[static_cast<std::size_t>(i)];
    const int nd = static_cast<int>(r.displacement.size());
    const int np = static_cast<int>(r.pressure.size());
    const int n = r.size();
    la::Vector rhs(static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k < nd; ++k)
        rhs[static_cast<std::size_t>(k)] = global_r[static_cast<std::size_t>(r.displacement[static_cast<std::size_t>(k)])];
    if (formulation_ == Formulation::mixed) {
        const int nu = saddle_->dofs.displacement_dofs;
        for (int k = 0; k < np; ++k)
            rhs[static_cast<std::size_t>(nd + k)] =
                global_r[static_cast<std::size_t>(nu + r.pressure[static_cast<std::size_t>(k)])];
        local_z = lu_locals_[static_cast<std::size_t>(i)]->solve(rhs);
    } else {
        local_z = spd_locals_[static_cast<std::size_t>(i)]->solve(rhs);
    }
}

void SchwarzPreconditioner::scatter_local(int i, const la::Vector& local_z, la::Vector& global_z) const {
    const Restriction& r = restrictions_[static_cast<std::size_t>(i)];
    const int nd = static_cast<int>(r.displacement.size());
    for (int k = 0; k < nd; ++k)
        global_z[static_cast<std::size_t>(r.displacement[static_cast<std::size_t>(k)])] +=
            local_z[static_cast<std::size_t>(k)];
    if (formulation_ == Formulation::mixed) {
        const int nu = saddle_->dofs.displacement_dofs;
        for (std::size_t k = 0; k < r.pressure.size(); ++k)
            global_z[static_cast<std::size_t>(nu + r.pressure[k])] += local_z[static_cast<std::size_t>(nd) + k];
        // the trailing multiplier entry, if any, is dropped
    }
}

la::Vector SchwarzPreconditioner::apply_subdomain(int i, const la::Vector& r) const {
    la::Vector local;
    solve_local(i, r, local);
    la::Vector z(static_cast<std::size_t>(dim_), 0.0);
    scatter_local(i, local, z);
    return z;
}

la::Vector SchwarzPreconditioner::apply_coarse(const la::Vector& r) const {
    if (!coarse_factor_) throw std::invalid_argument("apply_coarse: preconditioner has no coarse level");
    if (formulation_ == Formulation::spd) {
        la::Vector rc = coarse_.interp_u.apply(r);
        coarse_factor_->solve_inplace(rc);
        return coarse_.interp_u.apply_transpose(rc);
    }
    const int nu = saddle_->dofs.displacement_dofs;
    const int ncu = coarse_.displacement_dofs;
    const int ncp = coarse_.pressure_dofs;
    const la::Vector ru(r.begin(), r.begin() + nu);
    const la::Vector rp(r.begin() + nu, r.end());
    const la::Vector cu = coarse_.interp_u.apply(ru);
    const la::Vector cp = coarse_.interp_p.apply(rp);
    la::Vector rc(static_cast<std::size_t>(ncu + ncp));
    std::copy(cu.begin(), cu.end(), rc.begin());
    std::copy(cp.begin(), cp.end(), rc.begin() + ncu);
    if (coarse_pin_ >= 0) rc[static_cast<std::size_t>(coarse_pin_)] = 0.0;
    coarse_factor_->solve_inplace(rc);
    const la::Vector zu =
        coarse_.interp_u.apply_transpose(la::Vector(rc.begin(), rc.begin() + ncu));
    la::Vector zp = coarse_.interp_p.apply_transpose(la::Vector(rc.begin() + ncu, rc.end()));
    if (coarse_pin_ >= 0) projector_.apply(zp);
    la::Vector z(static_cast<std::size_t>(dim_));
    std::copy(zu.begin(), zu.end(), z.begin());
    std::copy(zp.begin(), zp.end(), z.begin() + nu);
    return z;
}

la::Vector SchwarzPreconditioner::apply_operator(const la::Vector& x) const {
    return formulation_ == Formulation::spd ? spd_->apply(x) : saddle_->apply(x);
}

void SchwarzPreconditioner::finalize(la::Vector& z) const {
    if (project_output_) projector_.apply_to_tail(z, saddle_->dofs.displacement_dofs);
}

la::Vector SchwarzPreconditioner::apply(const la::Vector& r) const {
    return apply(options_.variant, r);
}

la::Vector SchwarzPreconditioner::apply(SchwarzVariant variant, const la::Vector& r) const {
    if (static_cast<int>(r.size()) != dim_) throw la::DimensionError("SchwarzPreconditioner: size mismatch");
    switch (variant) {
        case SchwarzVariant::additive: return apply_additive(r);
        case SchwarzVariant::hybrid: return apply_hybrid(r);
        case SchwarzVariant::multiplicative: return apply_multiplicative(r);
    }
    throw std::logic_error("unreachable");
}

la::Vector SchwarzPreconditioner::apply_additive(const la::Vector& r) const {
    const int nsub = subdomain_count();
    std::vector<la::Vector> locals(static_cast<std::size_t>(nsub));
    la::parallel_for(nsub, options_.threads,
                     [&](int i) { solve_local(i, r, locals[static_cast<std::size_t>(i)]); });
    la::Vector z(static_cast<std::size_t>(dim_), 0.0);
    if (coarse_factor_) z = apply_coarse(r);
    for (int i = 0; i < nsub; ++i) scatter_local(i, locals[static_cast<std::size_t>(i)], z);
    finalize(z);
    return z;
}

la::Vector SchwarzPreconditioner::apply_hybrid(const la::Vector& r) const {
    // coarse solve, local solves on the coarse-corrected residual, coarse
    // re-correction of the summed local update
    const la::Vector u0 = apply_coarse(r);
    la::Vector rr = apply_operator(u0);
    for (std::size_t k = 0; k < rr.size(); ++k) rr[k] = r[k] - rr[k];

    const int nsub = subdomain_count();
    std::vector<la::Vector> locals(static_cast<std::size_t>(nsub));
    la::parallel_for(nsub, options_.threads,
                     [&](int i) { solve_local(i, rr, locals[static_cast<std::size_t>(i)]); });
    la::Vector w(static_cast<std::size_t>(dim_), 0.0);
    for (int i = 0; i < nsub; ++i) scatter_local(i, locals[static_cast<std::size_t>(i)], w);

    const la::Vector correction = apply_coarse(apply_operator(w));
    la::Vector z = w;
    for (std::size_t k = 0; k < z.size(); ++k) z[k] += u0[k] - correction[k];
    finalize(z);
    return z;
}

la::Vector SchwarzPreconditioner::apply_multiplicative(const la::Vector& r) const {
    // coarse space first, then subdomains in index order, each on the
    // current residual
    la::Vector z(static_cast<std::size_t>(dim_), 0.0);
    la::Vector residual = r;
    auto advance = [&](const la::Vector& update) {
        for (std::size_t k = 0; k < z.size(); ++k) z[k] += update[k];
        const la::Vector kz = apply_operator(z);
        for (std::size_t k = 0; k < residual.size(); ++k) residual[k] = r[k] - kz[k];
    };
    if (coarse_factor_) advance(apply_coarse(residual));
    for (int i = 0; i < subdomain_count(); ++i) advance(apply_subdomain(i, residual));
    finalize(z);
    return z;
}

la::DenseMatrix operator_matrix(const SchwarzPreconditioner& prec, int dense_guard) {
    if (prec.dim() > dense_guard)
        throw la::DimensionError("operator_matrix: dimension exceeds the dense guard");
    return la::materialize(
        [&](const la::Vector& x) { return prec.apply(prec.apply_operator(x)); }, prec.dim());
}

std::vector<double> preconditioned_spectrum(const SpdOperator& op, const SchwarzPreconditioner& prec,
                                            SchwarzVariant variant) {
    if (variant == SchwarzVariant::multiplicative)
        throw std::invalid_argument("preconditioned_spectrum: needs a symmetric variant (oas/ohs)");
    const int n = op.size();
    const la::DenseMatrix B =
        la::materialize([&](const la::Vector& v) { return prec.apply(variant, v); }, n);
    const la::DenseMatrix A = la::DenseMatrix::from_sparse(op.matrix);
    Eigen::Map<const Eigen::MatrixXd> Bm(B.data(), n, n);
    Eigen::Map<const Eigen::MatrixXd> Am(A.data(), n, n);
    const Eigen::LLT<Eigen::MatrixXd> llt(Am);
    const Eigen::MatrixXd L = llt.matrixL();
    Eigen::MatrixXd S = L.transpose() * (Bm * L);
    S = 0.5 * (S + S.transpose()).eval();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::EigenvaluesOnly);
    std::vector<double> ev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    return ev;
}

double a_norm(const SpdOperator& op, const la::DenseMatrix& M) {
    const int n = op.size();
    if (M.rows() != n || M.cols() != n) throw la::DimensionError("a_norm: size mismatch");
    const la::DenseMatrix A = la::DenseMatrix::from_sparse(op.matrix);
    Eigen::Map<const Eigen::MatrixXd> Mm(M.data(), n, n);
    Eigen::Map<const Eigen::MatrixXd> Am(A.data(), n, n);
    const Eigen::LLT<Eigen::MatrixXd> llt(Am);
    const Eigen::MatrixXd L = llt.matrixL();
    // || M ||_A = largest singular value of L^T M L^{-T}; its transpose
    // L^{-1} M^T L has the same singular values, obtained from the largest
    // eigenvalue of the Gram matrix.
    const Eigen::MatrixXd Y = L.triangularView<Eigen::Lower>().solve(Mm.transpose() * L);
    Eigen::MatrixXd G = Y.transpose() * Y;
    G = 0.5 * (G + G.transpose()).eval();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues()(n - 1)));
}

} // namespace schwarz
