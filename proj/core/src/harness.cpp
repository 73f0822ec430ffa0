#include "schwarz/harness.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace schwarz {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_grid(const std::string& value) {
    // rows separated by ';', entries by spaces or commas
    std::vector<double> out;
    std::string cleaned = value;
    for (char& c : cleaned)
        if (c == ';' || c == ',') c = ' ';
    std::istringstream is(cleaned);
    double v;
    while (is >> v) out.push_back(v);
    return out;
}

} // namespace

SolverChoice RunConfig::resolved_solver() const {
    if (solver != SolverChoice::automatic) return solver;
    if (form == Formulation::spd && prec != SchwarzVariant::multiplicative) return SolverChoice::pcg;
    return SolverChoice::gmres;
}

void RunConfig::validate() const {
    if (nsub_x < 1 || nsub_y < 1 || hh < 1) throw std::invalid_argument("config: counts must be >= 1");
    if (overlap < 1) throw std::invalid_argument("config: overlap must be >= 1");
    if (disc == Discretization::sem && degree < 2)
        throw std::invalid_argument("config: sem requires degree >= 2");
    if (form == Formulation::spd) {
        if (coeff == CoefficientPreset::constant && nu == 0.5)
            throw std::invalid_argument("config: the spd formulation rejects nu = 1/2 (Stokes limit); use form = saddle");
    }
    if (levels != 1 && levels != 2) throw std::invalid_argument("config: levels must be 1 or 2");
    if (prec == SchwarzVariant::hybrid && levels != 2)
        throw std::invalid_argument("config: hybrid preconditioner requires levels = 2");
    if (form == Formulation::spd && resolved_solver() == SolverChoice::pcg &&
        prec == SchwarzVariant::multiplicative)
        throw std::invalid_argument("config: multiplicative Schwarz is unsymmetric; use gmres");
    if (tol <= 0.0 || tol >= 1.0) throw std::invalid_argument("config: tol must lie in (0, 1)");
    if (coeff == CoefficientPreset::checkerboard && (nsub_x != 4 || nsub_y != 4))
        throw std::invalid_argument("config: checkerboard preset needs nsub = 4x4");
}

void apply_config_entry(RunConfig& cfg, const std::string& raw_key, const std::string& raw_value) {
    const std::string key = trim(raw_key);
    const std::string value = trim(raw_value);
    auto bad = [&](const std::string& what) {
        throw std::invalid_argument("config: bad value '" + value + "' for " + key + " (" + what + ")");
    };
    if (key == "disc") {
        if (value == "fem") cfg.disc = Discretization::fem_q2p1;
        else if (value == "sem") cfg.disc = Discretization::sem;
        else bad("fem|sem");
    } else if (key == "degree") {
        cfg.degree = std::stoi(value);
    } else if (key == "form") {
        if (value == "spd") cfg.form = Formulation::spd;
        else if (value == "saddle") cfg.form = Formulation::saddle;
        else bad("spd|saddle");
    } else if (key == "prec") {
        if (value == "oas") cfg.prec = SchwarzVariant::additive;
        else if (value == "ohs") cfg.prec = SchwarzVariant::hybrid;
        else if (value == "oms") cfg.prec = SchwarzVariant::multiplicative;
        else bad("oas|ohs|oms");
    } else if (key == "levels") {
        cfg.levels = std::stoi(value);
    } else if (key == "pversion") {
        if (value == "v1") cfg.pversion = LocalPressure::full_zero_mean;
        else if (value == "v2") cfg.pversion = LocalPressure::trimmed_zero_mean;
        else if (value == "v3") cfg.pversion = LocalPressure::trimmed_free;
        else bad("v1|v2|v3");
    } else if (key == "nsub") {
        const auto x = value.find('x');
        if (x == std::string::npos) bad("NxM");
        cfg.nsub_x = std::stoi(value.substr(0, x));
        cfg.nsub_y = std::stoi(value.substr(x + 1));
    } else if (key == "hh") {
        cfg.hh = std::stoi(value);
    } else if (key == "overlap") {
        cfg.overlap = std::stoi(value);
    } else if (key == "coeff") {
        if (value == "constant") cfg.coeff = CoefficientPreset::constant;
        else if (value == "jump") cfg.coeff = CoefficientPreset::jump;
        else if (value == "checkerboard") cfg.coeff = CoefficientPreset::checkerboard;
        else if (value == "grid") cfg.coeff = CoefficientPreset::grid;
        else bad("constant|jump|checkerboard|grid");
    } else if (key == "nu") {
        cfg.nu = std::stod(value);
    } else if (key == "E") {
        cfg.E = std::stod(value);
    } else if (key == "jump_nu") {
        cfg.jump_nu = std::stod(value);
    } else if (key == "nu_grid") {
        cfg.nu_grid = parse_grid(value);
    } else if (key == "E_grid") {
        cfg.E_grid = parse_grid(value);
    } else if (key == "tol") {
        cfg.tol = std::stod(value);
    } else if (key == "seed") {
        cfg.seed = std::stoull(value);
    } else if (key == "threads") {
        cfg.threads = std::stoi(value);
    } else if (key == "maxit") {
        cfg.max_iter = std::stoi(value);
    } else if (key == "solver") {
        if (value == "auto") cfg.solver = SolverChoice::automatic;
        else if (value == "pcg") cfg.solver = SolverChoice::pcg;
        else if (value == "gmres") cfg.solver = SolverChoice::gmres;
        else bad("auto|pcg|gmres");
    } else if (key == "dense_guard") {
        cfg.dense_cond_guard = std::stoi(value);
    } else if (key == "direct_guard") {
        cfg.direct_dof_guard = std::stoll(value);
    } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

RunConfig parse_config(std::istream& in) {
    RunConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key = value, got '" + line + "'");
        apply_config_entry(cfg, line.substr(0, eq), line.substr(eq + 1));
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    return parse_config(in);
}

CoefficientField coefficients_for(const RunConfig& cfg, const SubdomainLayout& layout) {
    switch (cfg.coeff) {
        case CoefficientPreset::constant:
            return CoefficientField::constant(layout, cfg.E, cfg.nu);
        case CoefficientPreset::jump:
            return CoefficientField::central_jump(layout, cfg.E, cfg.jump_nu, 0.3);
        case CoefficientPreset::checkerboard:
            return CoefficientField::checkerboard(layout);
        case CoefficientPreset::grid: {
            std::vector<double> E = cfg.E_grid;
            if (E.empty()) E.assign(static_cast<std::size_t>(layout.count()), cfg.E);
            return CoefficientField::from_grid(layout, E, cfg.nu_grid);
        }
    }
    throw std::logic_error("unreachable");
}

void prepare_system(const RunConfig& cfg, CaseSystem& out) {
    const ReferenceBasis basis = ReferenceBasis::make(cfg.disc, cfg.degree);
    auto [mesh, layout] = build_mesh(cfg.nsub_x, cfg.nsub_y, cfg.hh);
    out.mesh = mesh;
    out.layout = layout;
    const CoefficientField coeffs = coefficients_for(cfg, layout);
    RhsSpec rhs;
    rhs.kind = RhsSpec::Kind::seeded_random;
    rhs.seed = cfg.seed;
    out.saddle = assemble_saddle(mesh, layout, basis, coeffs, rhs);
    out.spd.reset();
    out.reference.clear();
    if (cfg.form == Formulation::spd)
        out.spd = std::make_shared<SpdOperator>(eliminate_pressure(out.saddle));
}

namespace {

void dense_cond_spd(const SpdOperator& op, const SchwarzPreconditioner& prec, SolveReport& report) {
    const std::vector<double> ev = preconditioned_spectrum(op, prec, prec.options().variant);
    report.lambda_min = ev.front();
    report.lambda_max = ev.back();
    report.cond = report.lambda_max / report.lambda_min;
    report.cond_source = "dense";
}

} // namespace

SolveReport run_case(const RunConfig& cfg) { return run_case(cfg, nullptr); }

SolveReport run_case(const RunConfig& cfg, CaseSystem* shared) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    CaseSystem local_state;
    CaseSystem& state = shared ? *shared : local_state;
    const bool have_system = shared && state.saddle.total_dofs() > 0 &&
                             (cfg.form == Formulation::saddle || state.spd != nullptr);
    if (!have_system) prepare_system(cfg, state);

    const OverlapLayout overlap = extend_overlap(state.mesh, state.layout, cfg.overlap);
    SchwarzOptions opt;
    opt.variant = cfg.prec;
    opt.levels = cfg.levels;
    opt.pressure = cfg.pversion;
    opt.threads = cfg.threads;

    SolveReport report;
    la::Vector solution;

    if (cfg.form == Formulation::spd) {
        const SpdOperator& op = *state.spd;
        const SchwarzPreconditioner prec = SchwarzPreconditioner::build(op, overlap, opt);
        const la::ApplyFn apply_op = [&](const la::Vector& v) { return op.apply(v); };
        const la::ApplyFn apply_prec = [&](const la::Vector& v) { return prec.apply(v); };
        if (cfg.resolved_solver() == SolverChoice::pcg) {
            std::tie(solution, report) = pcg(apply_op, apply_prec, op.F, cfg.tol, cfg.max_iter);
        } else {
            std::tie(solution, report) = gmres(apply_op, apply_prec, op.F, cfg.tol, cfg.max_iter);
        }
        if (op.size() <= cfg.dense_cond_guard && cfg.prec != SchwarzVariant::multiplicative)
            dense_cond_spd(op, prec, report);
        if (state.reference.size() != solution.size()) state.reference.clear();
        if (state.reference.empty() && op.size() <= cfg.direct_dof_guard)
            state.reference = direct_solve_reference(op, op.F);
        if (!state.reference.empty()) {
            la::Vector diff = solution;
            la::axpy(-1.0, state.reference, diff);
            report.err = la::norm2(diff);
        }
    } else {
        const SaddleSystem& sys = state.saddle;
        const SchwarzPreconditioner prec = SchwarzPreconditioner::build(sys, overlap, opt);
        const la::Vector rhs = sys.full_rhs();
        const la::ApplyFn apply_op = [&](const la::Vector& v) { return sys.apply(v); };
        const la::ApplyFn apply_prec = [&](const la::Vector& v) { return prec.apply(v); };
        if (cfg.resolved_solver() == SolverChoice::pcg)
            throw std::invalid_argument("run_case: the saddle formulation is indefinite; use gmres");
        std::tie(solution, report) = gmres(apply_op, apply_prec, rhs, cfg.tol, cfg.max_iter);
        if (state.reference.size() != solution.size()) state.reference.clear();
        if (state.reference.empty() && sys.total_dofs() <= cfg.direct_saddle_guard)
            state.reference = direct_solve_reference(sys, rhs);
        if (!state.reference.empty()) {
            la::Vector iterate = solution;
            if (sys.stokes) {
                ZeroMeanProjector proj = zero_mean_projector(sys.dofs, sys.element);
                proj.apply_to_tail(iterate, sys.dofs.displacement_dofs);
            }
            la::Vector diff = iterate;
            la::axpy(-1.0, state.reference, diff);
            report.err = la::norm2(diff);
        }
    }

    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace schwarz
