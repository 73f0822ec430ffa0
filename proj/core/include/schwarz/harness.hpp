#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "schwarz/krylov.hpp"
#include "schwarz/schwarz_preconditioner.hpp"

namespace schwarz {

enum class Formulation { spd, saddle };
enum class CoefficientPreset { constant, jump, checkerboard, grid };
enum class SolverChoice { automatic, pcg, gmres };

/// One experiment: discretization, formulation, preconditioner,
/// decomposition and material data. Mirrors the flat key=value config
/// format and the CLI flags one to one.
struct RunConfig {
    Discretization disc = Discretization::fem_q2p1;
    int degree = 3;  ///< SEM polynomial degree
    Formulation form = Formulation::spd;
    SchwarzVariant prec = SchwarzVariant::hybrid;
    int levels = 2;
    LocalPressure pversion = LocalPressure::trimmed_zero_mean;
    int nsub_x = 2, nsub_y = 2;
    int hh = 4;       ///< elements per subdomain side (H/h)
    int overlap = 1;  ///< overlap layers k (delta = k h)
    CoefficientPreset coeff = CoefficientPreset::constant;
    double nu = 0.3;
    double E = 6000.0;
    double jump_nu = 0.4999;  ///< central-block Poisson ratio of the jump preset
    std::vector<double> nu_grid;  ///< row-major, top row first (grid preset)
    std::vector<double> E_grid;
    double tol = 1e-6;
    std::uint64_t seed = 1234;
    int threads = 1;
    int max_iter = 5000;
    SolverChoice solver = SolverChoice::automatic;
    int dense_cond_guard = 2500;    ///< below: condition number from the dense spectrum
    long long direct_dof_guard = 700000;  ///< below: error against a direct solve (SPD path)
    long long direct_saddle_guard = 60000;

    /// pcg for symmetric positive preconditioned systems, gmres otherwise.
    SolverChoice resolved_solver() const;
    void validate() const;
};

/// Flat key = value text, '#' comments. Unknown keys are rejected.
RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::string& path);
/// Applies one key=value assignment (shared by the file parser and CLI).
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

/// Assembled state of one case, exposed so suites can reuse systems
/// across cases that share everything but the preconditioner.
struct CaseSystem {
    CartesianMesh mesh;
    SubdomainLayout layout;
    SaddleSystem saddle;
    std::shared_ptr<SpdOperator> spd;  ///< set for the spd formulation
    la::Vector reference;              ///< direct solution (empty if skipped)
};

/// mesh -> assembly -> (reformulation) -> preconditioner -> solve.
/// Deterministic for a fixed config and seed.
SolveReport run_case(const RunConfig& cfg);
SolveReport run_case(const RunConfig& cfg, CaseSystem* shared);

/// Builds the per-case system without solving (used for reuse/caching).
void prepare_system(const RunConfig& cfg, CaseSystem& out);

CoefficientField coefficients_for(const RunConfig& cfg, const SubdomainLayout& layout);

} // namespace schwarz
