#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "schwarz/assembly.hpp"
#include "schwarz/la/dense.hpp"
#include "schwarz/la/sparse_solvers.hpp"
#include "schwarz/spd_reform.hpp"

namespace schwarz {

enum class SchwarzVariant { additive, hybrid, multiplicative };  // oas / ohs / oms

/// Local pressure space of the saddle point preconditioner:
///  v1: every pressure dof of the extended subdomain, zero-mean constrained;
///  v2: dofs of elements touching the extension boundary removed, zero-mean;
///  v3: same trimming, no mean constraint.
enum class LocalPressure { full_zero_mean, trimmed_zero_mean, trimmed_free };

struct SchwarzOptions {
    SchwarzVariant variant = SchwarzVariant::additive;
    int levels = 2;
    LocalPressure pressure = LocalPressure::trimmed_zero_mean;
    int threads = 1;
};

/// Boolean selection lists defining R_i; the transpose is zero-extension.
struct Restriction {
    std::vector<int> displacement;  ///< global displacement dof ids, ascending
    std::vector<int> pressure;      ///< global pressure dof ids (mixed mode)
    bool mean_constrained = false;  ///< local block carries a zero-mean multiplier row
    int size() const {
        return static_cast<int>(displacement.size() + pressure.size()) + (mean_constrained ? 1 : 0);
    }
};

/// Interpolation from the coarse space on the subdomain mesh into the fine
/// space: biquadratic displacement, plus (mixed mode) discontinuous linear
/// (FEM) or constant (SEM) coarse pressures included into the fine basis.
struct CoarseSpace {
    la::SparseMatrix interp_u;  ///< coarse displacement dofs x fine displacement dofs
    la::SparseMatrix interp_p;  ///< coarse pressure dofs x fine pressure dofs
    int displacement_dofs = 0;
    int pressure_dofs = 0;
};

CoarseSpace build_coarse_space(const DofMap& dofs, const SubdomainLayout& layout, bool mixed);

/// One- or two-level overlapping Schwarz preconditioner with exact
/// (direct) subdomain and coarse solves, applicable in additive, hybrid or
/// multiplicative form to either the positive definite reformulation or
/// the saddle point system. Immutable after build; apply() is const and
/// runs local solves concurrently with a fixed reduction order.
class SchwarzPreconditioner {
public:
    enum class Formulation { spd, mixed };

    /// The operator must outlive the preconditioner.
    static SchwarzPreconditioner build(const SpdOperator& op, const OverlapLayout& overlap,
                                       const SchwarzOptions& options);
    static SchwarzPreconditioner build(const SaddleSystem& system, const OverlapLayout& overlap,
                                       const SchwarzOptions& options);

    la::Vector apply(const la::Vector& r) const;
    la::Vector apply(SchwarzVariant variant, const la::Vector& r) const;

    Formulation formulation() const { return formulation_; }
    const SchwarzOptions& options() const { return options_; }
    bool has_coarse() const { return coarse_factor_ != nullptr; }
    int dim() const { return dim_; }
    int subdomain_count() const { return static_cast<int>(restrictions_.size()); }
    const Restriction& restriction(int i) const { return restrictions_[static_cast<std::size_t>(i)]; }
    const CoarseSpace& coarse_space() const { return coarse_; }

    /// z = R_i^T K_i^{-1} R_i r on global vectors.
    la::Vector apply_subdomain(int i, const la::Vector& r) const;
    la::Vector apply_coarse(const la::Vector& r) const;
    /// The operator this preconditioner was built for.
    la::Vector apply_operator(const la::Vector& x) const;

private:
    struct LocalSolver;

    la::Vector apply_additive(const la::Vector& r) const;
    la::Vector apply_hybrid(const la::Vector& r) const;
    la::Vector apply_multiplicative(const la::Vector& r) const;
    void solve_local(int i, const la::Vector& global_r, la::Vector& local_z) const;
    void scatter_local(int i, const la::Vector& local_z, la::Vector& global_z) const;
    void finalize(la::Vector& z) const;

    Formulation formulation_ = Formulation::spd;
    SchwarzOptions options_;
    int dim_ = 0;
    const SpdOperator* spd_ = nullptr;
    const SaddleSystem* saddle_ = nullptr;

    std::vector<Restriction> restrictions_;
    std::vector<std::shared_ptr<la::SpdSolver>> spd_locals_;
    std::vector<std::shared_ptr<la::LuSolver>> lu_locals_;

    CoarseSpace coarse_;
    std::unique_ptr<la::DenseFactorization> coarse_factor_;
    int coarse_pin_ = -1;  ///< pinned coarse pressure dof in the Stokes limit

    ZeroMeanProjector projector_;
    bool project_output_ = false;
};

/// Dense matrix of the preconditioned operator (columns are
/// preconditioner . operator images of unit vectors).
la::DenseMatrix operator_matrix(const SchwarzPreconditioner& prec, int dense_guard = 20000);

/// Exact spectrum of the preconditioned operator for a symmetric-positive
/// variant (additive or hybrid): eigenvalues of the congruent pencil
/// L^T B L with the Cholesky factor of the system matrix, ascending.
std::vector<double> preconditioned_spectrum(const SpdOperator& op, const SchwarzPreconditioner& prec,
                                            SchwarzVariant variant);

/// Operator norm of a dense error propagator in the energy inner product
/// of the reformulated system.
double a_norm(const SpdOperator& op, const la::DenseMatrix& M);

} // namespace schwarz
