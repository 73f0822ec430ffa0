#include "schwarz/artifacts.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace schwarz {

namespace {

std::string num(double v) {
    if (std::isnan(v)) return "";
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

std::string sanitize(const std::string& label) {
    std::string out = label;
    for (char& c : out)
        if (c == ' ' || c == '/' || c == '=') c = '_';
    return out;
}

std::ofstream open_file(const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
    return os;
}

} // namespace

void write_csv(const SuiteResult& result, std::ostream& os, const ArtifactOptions& options) {
    os << "sweep,iters,err,cond,lambda_max,lambda_min,cond_source,wall_ms\n";
    for (std::size_t i = 0; i < result.cases.size(); ++i) {
        const SolveReport& r = result.reports[i];
        os << result.cases[i].sweep << ',';
        if (result.errors[i].empty()) {
            os << r.iterations << ',' << num(r.err) << ',' << num(r.cond) << ','
               << num(r.lambda_max) << ',' << num(r.lambda_min) << ',' << r.cond_source << ','
               << num(options.include_timing ? r.wall_ms : 0.0);
        } else {
            os << "-1,,,,,error,0";
        }
        os << '\n';
    }
    for (const auto& [name, value] : result.summaries)
        os << name << ",,," << num(value) << ",,,summary,0\n";
}

void write_residual_history(const SolveReport& report, std::ostream& os) {
    os.precision(16);
    for (std::size_t k = 0; k < report.residual_history.size(); ++k)
        os << k << ' ' << report.residual_history[k] << '\n';
}

void emit_suite_artifacts(const SuiteResult& result, const std::string& dir,
                          const ArtifactOptions& options) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    {
        auto os = open_file(fs::path(dir) / (result.name + ".csv"));
        write_csv(result, os, options);
    }
    for (std::size_t i = 0; i < result.cases.size(); ++i) {
        if (!result.errors[i].empty()) continue;
        auto os = open_file(fs::path(dir) /
                            (result.name + "_" + sanitize(result.cases[i].sweep) + "_residual.txt"));
        write_residual_history(result.reports[i], os);
    }
    auto os = open_file(fs::path(dir) / (result.name + "_checks.txt"));
    for (const SuiteCheck& c : result.checks)
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]")
           << '\n';
    for (std::size_t i = 0; i < result.cases.size(); ++i)
        if (!result.errors[i].empty())
            os << "FAIL  case " << result.cases[i].sweep << "  [" << result.errors[i] << "]\n";
}

void emit_case_artifacts(const std::string& label, const SolveReport& report,
                         const CaseSystem& system, const std::string& dir,
                         const ArtifactOptions& options) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    {
        auto os = open_file(fs::path(dir) / "run.csv");
        SuiteResult single;
        single.name = "run";
        single.cases.push_back({label, RunConfig{}});
        single.reports.push_back(report);
        single.errors.push_back("");
        write_csv(single, os, options);
    }
    {
        auto os = open_file(fs::path(dir) / "residual.txt");
        write_residual_history(report, os);
    }
    if (options.dump_matrices) {
        {
            auto os = open_file(fs::path(dir) / "A.mtx");
            system.saddle.A.write_matrix_market(os);
        }
        {
            auto os = open_file(fs::path(dir) / "B.mtx");
            system.saddle.B.write_matrix_market(os);
        }
        {
            auto os = open_file(fs::path(dir) / "C.mtx");
            system.saddle.C.write_matrix_market(os);
        }
        if (system.spd) {
            auto os = open_file(fs::path(dir) / "Abar.mtx");
            system.spd->matrix.write_matrix_market(os);
        }
    }
}

} // namespace schwarz
