#pragma once

#include <limits>
#include <string>

#include "schwarz/assembly.hpp"
#include "schwarz/la/dense.hpp"
#include "schwarz/spd_reform.hpp"

namespace schwarz {

/// What a single solve produced: counts, history, extreme-eigenvalue
/// estimates of the preconditioned operator and the error against a
/// direct solve (filled by the harness when affordable).
struct SolveReport {
    int iterations = 0;
    bool converged = false;
    std::vector<double> residual_history;  ///< starts at ||r_0||
    /// ||M^{-1} r_k|| along the pcg iteration (the quantity gmres's left
    /// preconditioning monitors), for like-for-like comparisons
    std::vector<double> preconditioned_residual_history;
    double err = std::numeric_limits<double>::quiet_NaN();
    double lambda_min = std::numeric_limits<double>::quiet_NaN();
    double lambda_max = std::numeric_limits<double>::quiet_NaN();
    double cond = std::numeric_limits<double>::quiet_NaN();
    std::string cond_source = "none";  ///< "lanczos", "dense" or "none"
    double wall_ms = 0.0;
};

/// Preconditioned conjugate gradients with zero initial guess, stopping at
/// a relative residual-norm reduction of `tol`. Extreme eigenvalues of the
/// preconditioned operator are estimated from the tridiagonal built out of
/// the iteration coefficients. The preconditioner must be symmetric
/// positive definite (additive or hybrid Schwarz, not multiplicative);
/// an indefinite one raises an error suggesting GMRES.
std::pair<la::Vector, SolveReport> pcg(const la::ApplyFn& op, const la::ApplyFn& prec,
                                       const la::Vector& b, double tol = 1e-6, int max_iter = 5000);

/// Full (unrestarted) GMRES with left preconditioning and zero initial
/// guess, stopping at a 'tol' reduction of the preconditioned residual
/// norm. Modified Gram-Schmidt with one reorthogonalization pass.
/// 50 iterations without any residual reduction raise a stagnation error.
std::pair<la::Vector, SolveReport> gmres(const la::ApplyFn& op, const la::ApplyFn& prec,
                                         const la::Vector& b, double tol = 1e-6, int max_iter = 2000);

/// Exact reference solutions for the error columns.
la::Vector direct_solve_reference(const SpdOperator& op, const la::Vector& b);
la::Vector direct_solve_reference(const SaddleSystem& system, const la::Vector& full_rhs);

} // namespace schwarz
