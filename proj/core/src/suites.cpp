#include "schwarz/suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace schwarz {

bool SuiteResult::all_pass() const {
    if (!std::all_of(errors.begin(), errors.end(), [](const std::string& e) { return e.empty(); }))
        return false;
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.pass; });
}

const SolveReport* SuiteResult::find(const std::string& sweep) const {
    for (std::size_t i = 0; i < cases.size(); ++i)
        if (cases[i].sweep == sweep && errors[i].empty()) return &reports[i];
    return nullptr;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("loglog_slope: need at least two points");
    const std::size_t n = x.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

namespace {

std::string nsub_label(int n) { return std::to_string(n) + "x" + std::to_string(n); }

RunConfig fem_spd(SchwarzVariant prec, int levels, int n, int hh, int overlap, double nu) {
    RunConfig c;
    c.disc = Discretization::fem_q2p1;
    c.form = Formulation::spd;
    c.prec = prec;
    c.levels = levels;
    c.nsub_x = c.nsub_y = n;
    c.hh = hh;
    c.overlap = overlap;
    c.nu = nu;
    return c;
}

RunConfig stokes_saddle(SchwarzVariant prec, int levels, LocalPressure v, int n, int hh, int overlap) {
    RunConfig c;
    c.disc = Discretization::fem_q2p1;
    c.form = Formulation::saddle;
    c.prec = prec;
    c.levels = levels;
    c.pversion = v;
    c.nsub_x = c.nsub_y = n;
    c.hh = hh;
    c.overlap = overlap;
    c.nu = 0.5;
    return c;
}

bool within(double value, double target, double rel) {
    return std::isfinite(value) && std::abs(value - target) <= rel * std::abs(target);
}

SuiteCheck make_check(const std::string& name, bool pass, const std::string& detail) {
    return SuiteCheck{name, pass, detail};
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

// full default precision so nu = 0.49999 and 0.499999 stay distinct
std::string fmt_nu(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// ---- table definitions ---------------------------------------------------

TableSuite make_table1(Discretization disc, int degree, int hh, const std::string& name,
                       bool annotated) {
    TableSuite t;
    t.name = name;
    t.sweep_name = "N";
    for (int overlap : {1, 2})
        for (int n = 2; n <= 8; ++n) {
            RunConfig c = fem_spd(SchwarzVariant::hybrid, 2, n, hh, overlap, 0.4999);
            c.disc = disc;
            c.degree = degree;
            t.cases.push_back({nsub_label(n) + " delta=" + std::to_string(overlap) + "h", c});
        }
    if (!annotated) return t;
    t.annotations = [](const SuiteResult& r) {
        std::vector<SuiteCheck> out;
        const std::vector<int> its_target = {36, 59, 75, 75, 74, 74, 76};
        for (int n = 2; n <= 8; ++n) {
            const SolveReport* rep = r.find(nsub_label(n) + " delta=1h");
            const int target = its_target[static_cast<std::size_t>(n - 2)];
            out.push_back(make_check(
                "iters " + nsub_label(n) + " within 30% of " + std::to_string(target),
                rep && std::abs(rep->iterations - target) <= 0.30 * target,
                rep ? "got " + std::to_string(rep->iterations) : "case failed"));
        }
        const SolveReport* r22 = r.find("2x2 delta=1h");
        out.push_back(make_check("cond 2x2 within 15% of 153.5",
                                 r22 && within(r22->cond, 153.5, 0.15),
                                 r22 ? "got " + fmt(r22->cond) : "case failed"));
        const SolveReport* r88 = r.find("8x8 delta=1h");
        out.push_back(make_check("cond 8x8 within 15% of 111.9",
                                 r88 && within(r88->cond, 111.9, 0.15),
                                 r88 ? "got " + fmt(r88->cond) : "case failed"));
        const SolveReport* r88w = r.find("8x8 delta=2h");
        out.push_back(make_check("iters 8x8 delta=2h within 30% of 41",
                                 r88w && std::abs(r88w->iterations - 41) <= 0.30 * 41,
                                 r88w ? "got " + std::to_string(r88w->iterations) : "case failed"));
        out.push_back(make_check("cond 8x8 delta=2h within 15% of 32.48",
                                 r88w && within(r88w->cond, 32.48, 0.15),
                                 r88w ? "got " + fmt(r88w->cond) : "case failed"));
        bool lmax_ok = true;
        std::string lmax_detail;
        for (std::size_t i = 0; i < r.cases.size(); ++i) {
            if (!r.errors[i].empty() || std::abs(r.reports[i].lambda_max - 4.0) > 0.005) {
                lmax_ok = false;
                lmax_detail += r.cases[i].sweep + "=" + fmt(r.reports[i].lambda_max) + " ";
            }
        }
        out.push_back(make_check("lambda_max = 4.000 +/- 0.005 in every row", lmax_ok, lmax_detail));
        int lo = 1 << 30, hi = 0;
        for (int n = 4; n <= 8; ++n)
            if (const SolveReport* rep = r.find(nsub_label(n) + " delta=1h")) {
                lo = std::min(lo, rep->iterations);
                hi = std::max(hi, rep->iterations);
            }
        out.push_back(make_check("iteration plateau for N >= 4x4 (spread <= 10%)",
                                 hi > 0 && hi <= 1.10 * lo,
                                 "range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"));
        return out;
    };
    return t;
}

TableSuite make_table2() {
    TableSuite t;
    t.name = "table2";
    t.sweep_name = "N";
    struct Col {
        const char* label;
        SchwarzVariant prec;
        int levels;
    };
    const std::vector<Col> cols = {{"oms1", SchwarzVariant::multiplicative, 1},
                                   {"oms2", SchwarzVariant::multiplicative, 2},
                                   {"oas2", SchwarzVariant::additive, 2}};
    for (const Col& col : cols)
        for (int overlap : {1, 2})
            for (int n = 2; n <= 6; ++n) {
                RunConfig c = fem_spd(col.prec, col.levels, n, 5, overlap, 0.4999);
                c.solver = SolverChoice::gmres;
                t.cases.push_back({std::string(col.label) + " " + nsub_label(n) + " delta=" +
                                       std::to_string(overlap) + "h",
                                   c});
            }
    t.annotations = [](const SuiteResult& r) {
        std::vector<SuiteCheck> out;
        bool bounded = true;
        std::string detail;
        for (int n = 2; n <= 6; ++n) {
            const SolveReport* rep = r.find("oms2 " + nsub_label(n) + " delta=1h");
            if (!rep || rep->iterations > 25) bounded = false;
            if (rep) detail += std::to_string(rep->iterations) + " ";
        }
        out.push_back(make_check("gmres-oms(2) iterations <= 25 up to 6x6", bounded, detail));
        bool increasing = true;
        int prev = 0;
        detail.clear();
        for (int n = 2; n <= 6; ++n) {
            const SolveReport* rep = r.find("oms1 " + nsub_label(n) + " delta=1h");
            if (!rep || rep->iterations <= prev) increasing = false;
            if (rep) {
                prev = rep->iterations;
                detail += std::to_string(rep->iterations) + " ";
            }
        }
        out.push_back(make_check("gmres-oms(1) iterations strictly increase with N", increasing, detail));
        const SolveReport* oas = r.find("oas2 6x6 delta=1h");
        const SolveReport* oms = r.find("oms2 6x6 delta=1h");
        const double ratio = (oas && oms) ? double(oas->iterations) / oms->iterations : 0.0;
        out.push_back(make_check("oas(2)/oms(2) iteration ratio at 6x6 >= 1.7", ratio >= 1.7,
                                 "ratio " + fmt(ratio)));
        return out;
    };
    return t;
}

TableSuite make_table3() {
    TableSuite t;
    t.name = "table3";
    t.sweep_name = "H/delta";
    const std::vector<int> layers = {24, 20, 16, 12, 8, 6, 4, 3, 2, 1};
    for (double nu : {0.3, 0.4999})
        for (int k : layers) {
            RunConfig c = fem_spd(SchwarzVariant::hybrid, 2, 2, 128, k, nu);
            std::ostringstream label;
            label << "nu=" << nu << " H/d=";
            label.precision(2);
            label << std::fixed << 128.0 / k;
            t.cases.push_back({label.str(), c});
        }
    auto slope_for = [](const SuiteResult& r, double nu) {
        std::vector<double> x, y;
        for (std::size_t i = 0; i < r.cases.size(); ++i) {
            if (!r.errors[i].empty()) continue;
            if (r.cases[i].cfg.nu != nu) continue;
            const double hd = 128.0 / r.cases[i].cfg.overlap;
            if (hd < 16.0) continue;
            x.push_back(hd);
            y.push_back(r.reports[i].cond);
        }
        return (x.size() >= 2) ? loglog_slope(x, y) : std::nan("");
    };
    t.summaries = [slope_for](const SuiteResult& r) {
        return std::vector<std::pair<std::string, double>>{
            {"slope_log_cond_vs_log_Hdelta nu=0.30", slope_for(r, 0.3)},
            {"slope_log_cond_vs_log_Hdelta nu=0.4999", slope_for(r, 0.4999)}};
    };
    t.annotations = [slope_for](const SuiteResult& r) {
        std::vector<SuiteCheck> out;
        const double s_inc = slope_for(r, 0.4999);
        const double s_comp = slope_for(r, 0.3);
        out.push_back(make_check("cond growth slope in [2.3, 3.3] for nu=0.4999",
                                 std::isfinite(s_inc) && s_inc >= 2.3 && s_inc <= 3.3,
                                 "slope " + fmt(s_inc)));
        out.push_back(make_check("cond growth slope in [0.7, 1.4] for nu=0.3",
                                 std::isfinite(s_comp) && s_comp >= 0.7 && s_comp <= 1.4,
                                 "slope " + fmt(s_comp)));
        return out;
    };
    return t;
}

TableSuite make_table4(Discretization disc, int degree, const std::string& name, bool annotated) {
    TableSuite t;
    t.name = name;
    t.sweep_name = "H/h";
    for (SchwarzVariant prec : {SchwarzVariant::additive, SchwarzVariant::hybrid})
        for (double nu : {0.3, 0.4999})
            for (int hh : {4, 8, 16, 32, 64}) {
                RunConfig c = fem_spd(prec, 2, 2, hh, hh / 4, nu);
                c.disc = disc;
                c.degree = degree;
                std::ostringstream label;
                label << (prec == SchwarzVariant::additive ? "oas2" : "ohs2") << " nu=" << nu
                      << " H/h=" << hh;
                t.cases.push_back({label.str(), c});
            }
    if (!annotated) return t;
    t.annotations = [](const SuiteResult& r) {
        std::vector<SuiteCheck> out;
        struct Group {
            const char* prefix;
            double nu;
            double target;
        };
        for (const Group& g : std::vector<Group>{{"oas2", 0.3, 5.17},
                                                 {"oas2", 0.4999, 38.43},
                                                 {"ohs2", 0.3, 4.31},
                                                 {"ohs2", 0.4999, 30.73}}) {
            std::vector<double> conds;
            for (int hh : {4, 8, 16, 32, 64}) {
                std::ostringstream label;
                label << g.prefix << " nu=" << g.nu << " H/h=" << hh;
                if (const SolveReport* rep = r.find(label.str())) conds.push_back(rep->cond);
            }
            const std::string id = std::string(g.prefix) + " nu=" + fmt(g.nu);
            if (conds.size() != 5) {
                out.push_back(make_check("cond sweep complete for " + id, false, "missing cases"));
                continue;
            }
            const double lo = *std::min_element(conds.begin(), conds.end());
            const double hi = *std::max_element(conds.begin(), conds.end());
            const double mean = (conds[0] + conds[1] + conds[2] + conds[3] + conds[4]) / 5.0;
            out.push_back(make_check("cond varies <= 5% over H/h for " + id, hi <= 1.05 * lo,
                                     "range [" + fmt(lo) + ", " + fmt(hi) + "]"));
            out.push_back(make_check("cond within 15% of " + fmt(g.target) + " for " + id,
                                     within(mean, g.target, 0.15), "mean " + fmt(mean)));
        }
        return out;
    };
    return t;
}

TableSuite make_table5() {
    TableSuite t;
    t.name = "table5";
    t.sweep_name = "N";
    for (int levels : {1, 2})
        for (LocalPressure v : {LocalPressure::full_zero_mean, LocalPressure::trimmed_zero_mean,
                                LocalPressure::trimmed_free})
            for (int n = 2; n <= 6; ++n) {
                const int vnum = v == LocalPressure::full_zero_mean
                                     ? 1
                                     : (v == LocalPressure::trimmed_zero_mean ? 2 : 3);
                t.cases.push_back({"oas" + std::to_string(levels) + "-v" + std::to_string(vnum) +
                                       " " + nsub_label(n),
                                   stokes_saddle(SchwarzVariant::additive, levels, v, n, 5, 1)});
            }
    t.annotations = [](const SuiteResult& r) {
        std::vector<SuiteCheck> out;
        const SolveReport* v1 = r.find("oas1-v1 6x6");
        const SolveReport* v2 = r.find("oas1-v2 6x6");
        const double ratio = (v1 && v2) ? double(v1->iterations) / v2->iterations : 0.0;
        out.push_back(make_check("one-level v1 iterations >= 3x v2 at 6x6", ratio >= 3.0,
                                 v1 && v2 ? std::to_string(v1->iterations) + " vs " +
                                                std::to_string(v2->iterations)
                                          : "case failed"));
        bool flat = true;
        std::string detail;
        for (int n = 2; n <= 6; ++n) {
            const SolveReport* rep = r.find("oas2-v2 " + nsub_label(n));
            if (!rep || rep->iterations > 20) flat = false;
            if (rep) detail += std::to_string(rep->iterations) + " ";
        }
        out.push_back(make_check("two-level v2 iterations <= 20 across N", flat, detail));
        const SolveReport* v2b = r.find("oas2-v2 6x6");
        out.push_back(make_check("two-level v2 iterations at 6x6 within 30% of 18",
                                 v2b && std::abs(v2b->iterations - 18) <= 0.30 * 18,
                                 v2b ? "got " + std::to_string(v2b->iterations) : "case failed"));
        return out;
    };
    return t;
}

TableSuite make_table6() {
    TableSuite t;
    t.name = "table6";
    t.sweep_name = "N";
    for (LocalPressure v : {LocalPressure::full_zero_mean, LocalPressure::trimmed_zero_mean,
                            LocalPressure::trimmed_free})
        for (int n = 2; n <= 6; ++n) {
            const int vnum = v == LocalPressure::full_zero_mean
                                 ? 1
                                 : (v == LocalPressure::trimmed_zero_mean ? 2 : 3);
            t.cases.push_back({"oms1-v" + std::to_string(vnum) + " " + nsub_label(n),
                               stokes_saddle(SchwarzVariant::multiplicative, 1, v, n, 5, 1)});
        }
    for (int n = 2; n <= 6; ++n)
        t.cases.push_back({"oms2-v2 " + nsub_label(n),
                           stokes_saddle(SchwarzVariant::multiplicative, 2,
                                         LocalPressure::trimmed_zero_mean, n, 5, 1)});
    for (int n = 2; n <= 6; ++n)
        t.cases.push_back({"ohs2-v2 " + nsub_label(n),
                           stokes_saddle(SchwarzVariant::hybrid, 2,
                                         LocalPressure::trimmed_zero_mean, n, 5, 1)});
    t.annotations = [](const SuiteResult& r) {
        std::vector<SuiteCheck> out;
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= 6; ++n) {
            const SolveReport* rep = r.find("oms2-v2 " + nsub_label(n));
            if (!rep || rep->iterations > 10) ok = false;
            if (rep) detail += std::to_string(rep->iterations) + " ";
        }
        out.push_back(make_check("gmres-oms(2)-v2 iterations <= 10 across N", ok, detail));
        const SolveReport* last = r.find("oms2-v2 6x6");
        out.push_back(make_check("gmres-oms(2)-v2 iterations at 6x6 within 30% of 7",
                                 last && std::abs(last->iterations - 7) <= 0.30 * 7,
                                 last ? "got " + std::to_string(last->iterations) : "case failed"));
        return out;
    };
    return t;
}

std::vector<SuiteCase> robustness_columns(Discretization disc, int degree, int n, int hh,
                                          const std::vector<double>& nus, bool with_stokes,
                                          CoefficientPreset preset) {
    std::vector<SuiteCase> cases;
    auto push = [&](const std::string& col, Formulation form, SchwarzVariant prec, double nu,
                    const std::string& nu_label) {
        RunConfig c;
        c.disc = disc;
        c.degree = degree;
        c.form = form;
        c.prec = prec;
        c.levels = 2;
        c.pversion = LocalPressure::trimmed_zero_mean;
        c.nsub_x = c.nsub_y = n;
        c.hh = hh;
        c.overlap = 1;
        c.coeff = preset;
        if (preset == CoefficientPreset::jump)
            c.jump_nu = nu;
        else
            c.nu = nu;
        if (form == Formulation::spd && prec == SchwarzVariant::multiplicative)
            c.solver = SolverChoice::gmres;
        if (form == Formulation::saddle) c.solver = SolverChoice::gmres;
        cases.push_back({col + " " + nu_label, c});
    };
    for (double nu : nus) {
        const std::string label = "nu=" + fmt_nu(nu);
        push("saddle-ohs2", Formulation::saddle, SchwarzVariant::hybrid, nu, label);
        push("saddle-oms2", Formulation::saddle, SchwarzVariant::multiplicative, nu, label);
        push("spd-ohs2", Formulation::spd, SchwarzVariant::hybrid, nu, label);
        push("spd-oms2", Formulation::spd, SchwarzVariant::multiplicative, nu, label);
    }
    if (with_stokes) {
        push("saddle-ohs2", Formulation::saddle, SchwarzVariant::hybrid, 0.5, "nu=0.5");
        push("saddle-oms2", Formulation::saddle, SchwarzVariant::multiplicative, 0.5, "nu=0.5");
    }
    return cases;
}

TableSuite make_table7(Discretization disc, int degree, const std::string& name, bool annotated) {
    TableSuite t;
    t.name = name;
    t.sweep_name = "nu";
    t.cases = robustness_columns(disc, degree, 3, 4, {0.4, 0.49, 0.499, 0.4999, 0.49999, 0.499999},
                                 /*with_stokes=*/true, CoefficientPreset::constant);
    if (!annotated) return t;
    t.annotations = [](const SuiteResult& r) {
        std::vector<SuiteCheck> out;
        bool oms_ok = true;
        std::string detail;
        for (const std::string& label :
             {std::string("nu=0.4"), std::string("nu=0.49"), std::string("nu=0.499"),
              std::string("nu=0.4999"), std::string("nu=0.5"), std::string("nu=0.49999"),
              std::string("nu=0.499999")}) {
            const SolveReport* rep = r.find("saddle-oms2 " + label);
            if (!rep || rep->iterations > 10) oms_ok = false;
            if (rep) detail += std::to_string(rep->iterations) + " ";
        }
        out.push_back(make_check("saddle gmres-oms(2) iterations <= 10 for every nu", oms_ok, detail));
        const SolveReport* c5 = r.find("spd-ohs2 nu=0.49999");
        const SolveReport* c6 = r.find("spd-ohs2 nu=0.499999");
        const double plateau = (c5 && c6) ? c6->cond / c5->cond : 1e9;
        out.push_back(make_check("pcg-ohs(2) cond plateau (ratio <= 1.1)", plateau <= 1.1,
                                 "ratio " + fmt(plateau)));
        const bool vals = c5 && c6 && within(c5->cond, 38.44, 0.15) && within(c6->cond, 39.61, 0.15);
        out.push_back(make_check("pcg-ohs(2) cond near 38-40 (15%)", vals,
                                 c5 && c6 ? fmt(c5->cond) + ", " + fmt(c6->cond) : "case failed"));
        return out;
    };
    return t;
}

TableSuite make_table8(Discretization disc, int degree, const std::string& name, bool annotated) {
    TableSuite t;
    t.name = name;
    t.sweep_name = "nu";
    t.cases = robustness_columns(disc, degree, 4, 4, {0.3, 0.4, 0.49, 0.499, 0.4999, 0.49999},
                                 /*with_stokes=*/false, CoefficientPreset::jump);
    for (const SuiteCase& c :
         robustness_columns(disc, degree, 4, 4, {0.0}, false, CoefficientPreset::checkerboard)) {
        SuiteCase copy = c;
        copy.sweep = c.sweep.substr(0, c.sweep.find(' ')) + " checkerboard";
        t.cases.push_back(copy);
    }
    if (!annotated) return t;
    t.annotations = [](const SuiteResult& r) {
        std::vector<SuiteCheck> out;
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < r.cases.size(); ++i) {
            if (r.cases[i].sweep.rfind("spd-ohs2", 0) != 0) continue;
            if (!r.errors[i].empty() || !(r.reports[i].cond <= 12.0)) ok = false;
            if (r.errors[i].empty()) detail += fmt(r.reports[i].cond) + " ";
        }
        out.push_back(make_check("pcg-ohs(2) cond <= 12 for jump and checkerboard", ok, detail));
        const SolveReport* j = r.find("spd-ohs2 nu=0.4999");
        out.push_back(make_check("central jump cond within 20% of 7.8",
                                 j && within(j->cond, 7.8, 0.20),
                                 j ? fmt(j->cond) : "case failed"));
        const SolveReport* cb = r.find("spd-ohs2 checkerboard");
        out.push_back(make_check("checkerboard cond within 20% of 8.86",
                                 cb && within(cb->cond, 8.86, 0.20),
                                 cb ? fmt(cb->cond) : "case failed"));
        return out;
    };
    return t;
}

TableSuite make_table9() {
    TableSuite t;
    t.name = "table9";
    t.sweep_name = "n";
    for (int deg = 3; deg <= 8; ++deg) {
        RunConfig c = fem_spd(SchwarzVariant::hybrid, 2, 3, 4, 1, 0.4999);
        c.disc = Discretization::sem;
        c.degree = deg;
        t.cases.push_back({"ohs2 n=" + std::to_string(deg), c});

        RunConfig m = fem_spd(SchwarzVariant::multiplicative, 2, 3, 4, 1, 0.4999);
        m.disc = Discretization::sem;
        m.degree = deg;
        m.solver = SolverChoice::gmres;
        t.cases.push_back({"oms2 n=" + std::to_string(deg), m});
    }
    t.annotations = [](const SuiteResult& r) {
        std::vector<SuiteCheck> out;
        std::vector<double> conds;
        for (int deg = 3; deg <= 8; ++deg)
            if (const SolveReport* rep = r.find("ohs2 n=" + std::to_string(deg)))
                conds.push_back(rep->cond);
        if (conds.size() != 6) {
            out.push_back(make_check("degree sweep complete", false, "missing cases"));
            return out;
        }
        const double lo = *std::min_element(conds.begin(), conds.end());
        const double hi = *std::max_element(conds.begin(), conds.end());
        out.push_back(make_check("cond spread over n in {3..8} <= 5%", hi <= 1.05 * lo,
                                 "range [" + fmt(lo) + ", " + fmt(hi) + "]"));
        bool near = true;
        for (double c : conds) near = near && within(c, 29.99, 0.15);
        out.push_back(make_check("cond within 15% of 29.99 for every n", near,
                                 "[" + fmt(lo) + ", " + fmt(hi) + "]"));
        return out;
    };
    return t;
}

} // namespace

std::vector<std::string> built_in_suite_names() {
    return {"table1", "table2", "table3", "table4", "table5", "table6", "table7",
            "table8", "table9", "table1sem", "table4sem", "table7sem", "table8sem"};
}

TableSuite built_in_suite(const std::string& name) {
    if (name == "table1") return make_table1(Discretization::fem_q2p1, 2, 9, "table1", true);
    if (name == "table2") return make_table2();
    if (name == "table3") return make_table3();
    if (name == "table4") return make_table4(Discretization::fem_q2p1, 2, "table4", true);
    if (name == "table5") return make_table5();
    if (name == "table6") return make_table6();
    if (name == "table7") return make_table7(Discretization::fem_q2p1, 2, "table7", true);
    if (name == "table8") return make_table8(Discretization::fem_q2p1, 2, "table8", true);
    if (name == "table9") return make_table9();
    if (name == "table1sem") return make_table1(Discretization::sem, 3, 5, "table1sem", false);
    if (name == "table4sem") return make_table4(Discretization::sem, 2, "table4sem", false);
    if (name == "table7sem") return make_table7(Discretization::sem, 2, "table7sem", false);
    if (name == "table8sem") return make_table8(Discretization::sem, 2, "table8sem", false);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

namespace {

std::string system_key(const RunConfig& c) {
    std::ostringstream os;
    os << (c.disc == Discretization::fem_q2p1 ? "fem" : "sem") << '|' << c.degree << '|'
       << (c.form == Formulation::spd ? "spd" : "saddle") << '|' << c.nsub_x << 'x' << c.nsub_y
       << '|' << c.hh << '|' << static_cast<int>(c.coeff) << '|' << c.nu << '|' << c.E << '|'
       << c.jump_nu << '|' << c.seed;
    for (double v : c.nu_grid) os << ',' << v;
    for (double v : c.E_grid) os << ';' << v;
    return os.str();
}

} // namespace

SuiteResult run_suite(const TableSuite& suite, int threads, std::ostream* progress) {
    SuiteResult result;
    result.name = suite.name;
    result.cases = suite.cases;
    result.reports.resize(suite.cases.size());
    result.errors.resize(suite.cases.size());

    std::map<std::string, std::shared_ptr<CaseSystem>> systems;
    for (std::size_t i = 0; i < suite.cases.size(); ++i) {
        RunConfig cfg = suite.cases[i].cfg;
        cfg.threads = threads;
        try {
            auto& state = systems[system_key(cfg)];
            if (!state) state = std::make_shared<CaseSystem>();
            result.reports[i] = run_case(cfg, state.get());
        } catch (const std::exception& e) {
            result.errors[i] = e.what();
        }
        if (progress) {
            *progress << "  [" << suite.name << "] " << suite.cases[i].sweep << ": ";
            if (result.errors[i].empty()) {
                const SolveReport& rep = result.reports[i];
                *progress << "it=" << rep.iterations;
                if (std::isfinite(rep.cond)) *progress << " cond=" << fmt(rep.cond);
                *progress << " (" << fmt(rep.wall_ms / 1000.0) << "s)";
            } else {
                *progress << "ERROR: " << result.errors[i];
            }
            *progress << std::endl;
        }
    }
    if (suite.summaries) result.summaries = suite.summaries(result);
    if (suite.annotations) result.checks = suite.annotations(result);
    return result;
}

} // namespace schwarz
