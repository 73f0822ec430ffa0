// Experiment driver for the overlapping Schwarz solver laboratory.
//
//   schwarzlab run   --disc fem --form spd --prec ohs --nsub 3x3 --hh 4 ...
//   schwarzlab run   --config case.cfg --out results/
//   schwarzlab suite --suite table1 --out results/
//   schwarzlab list

#include <CLI11.hpp>

#include <iostream>

#include "schwarz/artifacts.hpp"
#include "schwarz/harness.hpp"
#include "schwarz/suites.hpp"

namespace {

struct CliOverrides {
    std::vector<std::pair<std::string, std::string>> entries;
};

// Every config key doubles as a CLI flag with the same name.
void add_config_flags(CLI::App* app, CliOverrides& over) {
    static const std::vector<std::pair<std::string, std::string>> keys = {
        {"disc", "fem|sem"},
        {"degree", "SEM polynomial degree"},
        {"form", "spd|saddle"},
        {"prec", "oas|ohs|oms"},
        {"levels", "1|2"},
        {"pversion", "v1|v2|v3 (saddle local pressure space)"},
        {"nsub", "subdomain grid, e.g. 3x3"},
        {"hh", "elements per subdomain side (H/h)"},
        {"overlap", "overlap layers k (delta = k h)"},
        {"nu", "Poisson ratio"},
        {"E", "Young modulus"},
        {"coeff", "constant|jump|checkerboard|grid"},
        {"jump_nu", "central-block nu of the jump preset"},
        {"nu_grid", "per-subdomain nu rows, ';' separated, top row first"},
        {"E_grid", "per-subdomain E rows"},
        {"tol", "relative residual reduction"},
        {"seed", "right-hand side seed"},
        {"threads", "worker threads for subdomain solves"},
        {"maxit", "iteration cap"},
        {"solver", "auto|pcg|gmres"},
        {"dense_guard", "max dofs for dense spectra"},
        {"direct_guard", "max dofs for the direct reference solve"},
    };
    for (const auto& [key, help] : keys) {
        app->add_option_function<std::string>(
            "--" + key,
            [&over, k = key](const std::string& v) { over.entries.push_back({k, v}); }, help);
    }
}

void print_report(const std::string& label, const schwarz::SolveReport& r) {
    std::cout << label << ": iterations=" << r.iterations << (r.converged ? "" : " (NOT converged)")
              << " err=" << r.err;
    if (r.cond_source != "none")
        std::cout << " cond=" << r.cond << " (" << r.cond_source << ", lambda " << r.lambda_min
                  << " .. " << r.lambda_max << ")";
    std::cout << " wall=" << r.wall_ms << "ms" << std::endl;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Overlapping Schwarz preconditioner laboratory for mixed elasticity and Stokes"};
    app.require_subcommand(1);

    std::string config_path, out_dir, suite_name;
    bool dump_matrices = false, no_timing = false;
    int suite_threads = 1;

    CLI::App* run = app.add_subcommand("run", "run a single configured case");
    CliOverrides over;
    run->add_option("--config", config_path, "key = value config file");
    add_config_flags(run, over);
    run->add_option("--out", out_dir, "artifact output directory");
    run->add_flag("--dump-matrices", dump_matrices, "export assembled operators (Matrix Market)");
    run->add_flag("--no-timing", no_timing, "zero wall-clock columns for reproducible output");

    CLI::App* suite = app.add_subcommand("suite", "run a built-in experiment table");
    suite->add_option("--suite", suite_name, "suite name (see 'list')")->required();
    suite->add_option("--out", out_dir, "artifact output directory");
    suite->add_option("--threads", suite_threads, "worker threads for subdomain solves");
    suite->add_flag("--no-timing", no_timing, "zero wall-clock columns for reproducible output");

    CLI::App* list = app.add_subcommand("list", "list the built-in suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const std::string& name : schwarz::built_in_suite_names()) std::cout << name << '\n';
            return 0;
        }
        if (run->parsed()) {
            schwarz::RunConfig cfg;
            if (!config_path.empty()) cfg = schwarz::parse_config_file(config_path);
            for (const auto& [key, value] : over.entries)
                schwarz::apply_config_entry(cfg, key, value);
            cfg.validate();

            schwarz::CaseSystem system;
            const schwarz::SolveReport report = schwarz::run_case(cfg, &system);
            print_report("run", report);
            if (!out_dir.empty()) {
                schwarz::ArtifactOptions opts;
                opts.include_timing = !no_timing;
                opts.dump_matrices = dump_matrices;
                schwarz::emit_case_artifacts("run", report, system, out_dir, opts);
            }
            return report.converged ? 0 : 3;
        }
        // suite
        const schwarz::TableSuite table = schwarz::built_in_suite(suite_name);
        const schwarz::SuiteResult result = schwarz::run_suite(table, suite_threads, &std::cout);
        for (const schwarz::SuiteCheck& c : result.checks)
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name
                      << (c.detail.empty() ? "" : "  [" + c.detail + "]") << std::endl;
        for (const auto& [name, value] : result.summaries)
            std::cout << "summary  " << name << " = " << value << std::endl;
        if (!out_dir.empty()) {
            schwarz::ArtifactOptions opts;
            opts.include_timing = !no_timing;
            schwarz::emit_suite_artifacts(result, out_dir, opts);
        }
        return result.all_pass() ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}
