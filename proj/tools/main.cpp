// Command-line front end: convergence sweeps, formula comparison, pointwise
// tabulation, and verification of the analysis bounds.
//
// Exit codes: 0 success, 1 computation error, 2 usage error. Every error
// path prints a single line starting with "error:" to stderr.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sincderiv/csv.hpp"
#include "sincderiv/inequalities.hpp"
#include "sincderiv/sweep.hpp"

namespace {

using namespace sincderiv;

struct SweepOptions {
    std::string function;
    std::string formula;
    int m = 2;
    int n_min = 5;
    int n_max = 100;
    int n_step = 5;
    std::string out;
    int l = 0;
    int n = 30;
    std::string points;
    int grid_size = 2001;
};

std::vector<int> make_n_list(const SweepOptions& opt) {
    if (opt.n_min < 1 || opt.n_step < 1 || opt.n_min > opt.n_max) {
        throw UsageError("invalid n range: need 1 <= n-min <= n-max and n-step >= 1");
    }
    std::vector<int> n_list;
    for (int n = opt.n_min; n <= opt.n_max; n += opt.n_step) n_list.push_back(n);
    return n_list;
}

FunctionId function_of(const SweepOptions& opt) {
    const auto id = parse_function_id(opt.function);
    if (!id) throw UsageError("--function: unknown value '" + opt.function + "'");
    return *id;
}

Formula formula_of(const SweepOptions& opt) {
    const auto f = parse_formula(opt.formula);
    if (!f) throw UsageError("--formula: unknown value '" + opt.formula + "'");
    return *f;
}

void print_profile_warning(const DecayProfile& profile, const MapId& map) {
    if (const auto warning = theorem_range_warning(profile, map)) {
        std::cerr << "warning: " << *warning << "\n";
    }
}

int run_converge(const SweepOptions& opt) {
    const FunctionId fid = function_of(opt);
    const Formula formula = formula_of(opt);
    const std::vector<int> n_list = make_n_list(opt);
    const TestFunction& fn = corpus_function(fid);
    print_profile_warning(formula_profile(fn, formula), formula_map(fn, formula));

    const ErrorReport report = run_sweep(fid, formula, opt.m, n_list);
    write_csv(report, opt.out);
    std::cout << "wrote " << opt.out << " (" << report.rows.size() << " rows)\n";
    return 0;
}

void write_merged_csv(const ErrorReport& se, const ErrorReport& imp,
                      const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path);
    out << "# function: " << to_string(se.function) << "\n";
    out << "# m: " << se.m << "\n";
    out << "# grid: " << se.grid << "\n";
    out << "# profile_se: alpha=" << format_real(se.profile.alpha)
        << " beta=" << format_real(se.profile.beta) << " d=" << format_real(se.profile.d)
        << "\n";
    out << "# profile_imp: alpha=" << format_real(imp.profile.alpha)
        << " beta=" << format_real(imp.profile.beta) << " d=" << format_real(imp.profile.d)
        << "\n";
    out << "# timestamp: " << utc_timestamp() << "\n";

    out << "n";
    for (const char* suffix : {"_se", "_imp"}) {
        out << ",h" << suffix << ",M" << suffix << ",N" << suffix;
        for (int l = 0; l <= se.m; ++l) out << ",err_l" << l << suffix;
    }
    out << "\n";

    for (size_t i = 0; i < se.rows.size(); ++i) {
        const SweepRow& rs = se.rows[i];
        const SweepRow& ri = imp.rows[i];
        out << rs.n;
        for (const SweepRow* row : {&rs, &ri}) {
            out << "," << format_real(row->h) << "," << row->M << "," << row->N;
            for (const double err : row->max_abs_error) out << "," << format_real(err);
        }
        out << "\n";
    }
    out.flush();
    if (!out) throw Error("write failed for " + path);
}

void print_slopes(const ErrorReport& report, int n_lo, int n_hi) {
    const double theoretical =
        -std::sqrt(std::numbers::pi * report.profile.d *
                   std::min(report.profile.alpha, report.profile.beta));
    std::printf("formula=%s alpha=%g beta=%g d=%g theoretical_slope=%.4f\n",
                std::string(to_string(report.formula)).c_str(), report.profile.alpha,
                report.profile.beta, report.profile.d, theoretical);
    for (int l = 0; l <= report.m; ++l) {
        try {
            std::printf("  l=%d fitted_slope=%.4f\n", l, fit_rate(report, l, n_lo, n_hi));
        } catch (const Error&) {
            std::printf("  l=%d fitted_slope=n/a (too few above-floor rows)\n", l);
        }
    }
}

int run_compare(const SweepOptions& opt) {
    const FunctionId fid = function_of(opt);
    const std::vector<int> n_list = make_n_list(opt);
    const TestFunction& fn = corpus_function(fid);
    print_profile_warning(fn.profile_se, fn.se_map);
    print_profile_warning(fn.profile_imp, fn.imp_map);

    const ErrorReport se = run_sweep(fid, Formula::stenger, opt.m, n_list);
    const ErrorReport imp = run_sweep(fid, Formula::improved, opt.m, n_list);
    write_merged_csv(se, imp, opt.out);

    const int n_lo = 10, n_hi = 60;
    std::printf("function=%s m=%d fit_window=[%d,%d]\n",
                std::string(to_string(fid)).c_str(), opt.m, n_lo, n_hi);
    print_slopes(se, n_lo, n_hi);
    print_slopes(imp, n_lo, n_hi);
    std::cout << "wrote " << opt.out << " (" << se.rows.size() << " rows)\n";
    return 0;
}

std::vector<double> parse_points(const std::string& csv) {
    std::vector<double> points;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw UsageError("--points: cannot parse '" + item + "'");
        }
        if (pos != item.size()) throw UsageError("--points: cannot parse '" + item + "'");
        points.push_back(v);
    }
    if (points.empty()) throw UsageError("--points: empty list");
    return points;
}

int run_tabulate(const SweepOptions& opt) {
    const FunctionId fid = function_of(opt);
    const Formula formula = formula_of(opt);
    if (opt.l < 0 || opt.l > opt.m) throw UsageError("--l must satisfy 0 <= l <= m");
    if (opt.n < 1) throw UsageError("--n must be >= 1");
    const std::vector<double> points = parse_points(opt.points);

    const TestFunction& fn = corpus_function(fid);
    for (const double t : points) {
        if (!fn.interval.contains_interior(t)) {
            throw DomainError("point t = " + format_real(t) + " outside the interval of " +
                              std::string(to_string(fid)));
        }
    }

    const DecayProfile profile = formula_profile(fn, formula);
    const MapSpec map(formula_map(fn, formula), opt.m);
    const SincParams params = select_params(profile, opt.n, opt.m);
    const Approximant approx = build_approximant(fn.eval, map, params);

    std::ofstream out(opt.out);
    if (!out) throw Error("cannot open " + opt.out);
    out << "# function: " << to_string(fid) << "\n";
    out << "# formula: " << to_string(formula) << "\n";
    out << "# m: " << opt.m << "\n# l: " << opt.l << "\n# n: " << opt.n << "\n";
    out << "# timestamp: " << utc_timestamp() << "\n";
    out << "t,approx,oracle,abs_error\n";
    for (const double t : points) {
        const double approx_value = evaluate_derivative(approx, t, opt.l);
        const double oracle_value = oracle_derivative(fid, opt.l, t);
        out << format_real(t) << "," << format_real(approx_value) << ","
            << format_real(oracle_value) << ","
            << format_real(std::abs(approx_value - oracle_value)) << "\n";
    }
    out.flush();
    if (!out) throw Error("write failed for " + opt.out);
    std::cout << "wrote " << opt.out << " (" << points.size() << " rows)\n";
    return 0;
}

int run_verify_bounds(const SweepOptions& opt) {
    std::vector<std::string> failing;
    for (const InequalityId id : kAllInequalities) {
        const std::vector<double> grid = inequality_default_grid(id, opt.grid_size);
        const double violation = verify_inequality(id, grid);
        const bool pass = violation <= kInequalityTolerance;
        std::printf("%-9s max_violation=%s %s\n", std::string(to_string(id)).c_str(),
                    format_real(violation).c_str(), pass ? "PASS" : "FAIL");
        if (!pass) failing.emplace_back(to_string(id));
    }
    if (!failing.empty()) {
        std::string joined;
        for (const std::string& name : failing) joined += (joined.empty() ? "" : ", ") + name;
        throw Error("inequality bounds exceeded: " + joined);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sinc-basis numerical differentiation over infinite and "
                 "semi-infinite intervals"};
    app.require_subcommand(1);

    SweepOptions opt;

    const auto add_sweep_range = [&](CLI::App* cmd) {
        cmd->add_option("--m", opt.m, "derivative order of the formula")
            ->check(CLI::Range(0, 4));
        cmd->add_option("--n-min", opt.n_min, "smallest resolution n");
        cmd->add_option("--n-max", opt.n_max, "largest resolution n");
        cmd->add_option("--n-step", opt.n_step, "resolution step");
        cmd->add_option("--out", opt.out, "output CSV path")->required();
    };
    const auto add_function = [&](CLI::App* cmd) {
        cmd->add_option("--function", opt.function, "example1 | example2")
            ->required()
            ->check(CLI::IsMember({"example1", "example2"}));
    };
    const auto add_formula = [&](CLI::App* cmd) {
        cmd->add_option("--formula", opt.formula, "stenger | improved")
            ->required()
            ->check(CLI::IsMember({"stenger", "improved"}));
    };

    CLI::App* converge = app.add_subcommand(
        "converge", "sweep n and write per-order max absolute errors");
    add_function(converge);
    add_formula(converge);
    add_sweep_range(converge);

    CLI::App* compare = app.add_subcommand(
        "compare", "run both formulas, write a merged CSV, print fitted slopes");
    add_function(compare);
    add_sweep_range(compare);

    CLI::App* tabulate =
        app.add_subcommand("tabulate", "tabulate approximant vs oracle at given points");
    add_function(tabulate);
    add_formula(tabulate);
    tabulate->add_option("--m", opt.m, "derivative order of the formula")
        ->check(CLI::Range(0, 4));
    tabulate->add_option("--l", opt.l, "derivative order to tabulate")->required();
    tabulate->add_option("--n", opt.n, "resolution")->required();
    tabulate->add_option("--points", opt.points, "comma-separated evaluation points")
        ->required();
    tabulate->add_option("--out", opt.out, "output CSV path")->required();

    CLI::App* verify =
        app.add_subcommand("verify-bounds", "check the analysis bounds on dense grids");
    verify->add_option("--grid-size", opt.grid_size, "points per bound (default 2001)")
        ->check(CLI::Range(10, 100000000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << app.help();
        return 2;
    }

    try {
        if (converge->parsed()) return run_converge(opt);
        if (compare->parsed()) return run_compare(opt);
        if (tabulate->parsed()) return run_tabulate(opt);
        if (verify->parsed()) return run_verify_bounds(opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
