#include "sincderiv/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>

namespace sincderiv {

std::string_view to_string(Formula formula) {
    return formula == Formula::stenger ? "stenger" : "improved";
}

std::optional<Formula> parse_formula(std::string_view name) {
    if (name == "stenger") return Formula::stenger;
    if (name == "improved") return Formula::improved;
    return std::nullopt;
}

MapId formula_map(const TestFunction& fn, Formula formula) {
    return formula == Formula::stenger ? fn.se_map : fn.imp_map;
}

DecayProfile formula_profile(const TestFunction& fn, Formula formula) {
    return formula == Formula::stenger ? fn.profile_se : fn.profile_imp;
}

ErrorReport run_sweep(FunctionId id, Formula formula, int m, std::span<const int> n_list) {
    if (m > 4) throw UsageError("run_sweep: m must be <= 4 (oracle limit)");
    return run_sweep_with(id, formula, m, n_list, corpus_function(id).eval,
                          [id](int l, double t) { return oracle_derivative(id, l, t); });
}

ErrorReport run_sweep_with(FunctionId id, Formula formula, int m,
                           std::span<const int> n_list,
                           const std::function<double(double)>& sampler,
                           const std::function<double(int, double)>& oracle) {
    if (n_list.empty()) throw UsageError("run_sweep: empty n list");
    if (!std::is_sorted(n_list.begin(), n_list.end())) {
        throw UsageError("run_sweep: n list must be ascending");
    }
    if (m < 0 || m > kMaxJetOrder) throw UsageError("run_sweep: m outside [0, max order]");

    const TestFunction& fn = corpus_function(id);
    const DecayProfile profile = formula_profile(fn, formula);
    const MapSpec map(formula_map(fn, formula), m);
    const std::vector<double> grid = evaluation_grid(id);

    ErrorReport report;
    report.function = id;
    report.formula = formula;
    report.m = m;
    report.profile = profile;
    report.grid = grid_id(id);
    report.timestamp = utc_timestamp();
    report.rows.reserve(n_list.size());

    for (const int n : n_list) {
        const SincParams params = select_params(profile, n, m);
        int cur_l = 0;
        double cur_t = 0.0;
        try {
            const Approximant approx = build_approximant(sampler, map, params);
            SweepRow row{n, params.h, params.M, params.N,
                         std::vector<double>(m + 1, 0.0)};
            for (const double t : grid) {
                cur_t = t;
                const std::vector<double> values = evaluate_all_orders(approx, t);
                for (int l = 0; l <= m; ++l) {
                    cur_l = l;
                    const double err = std::abs(values[l] - oracle(l, t));
                    if (!std::isfinite(err)) {
                        throw Error("non-finite error value");
                    }
                    row.max_abs_error[l] = std::max(row.max_abs_error[l], err);
                }
            }
            report.rows.push_back(std::move(row));
        } catch (const Error& e) {
            throw Error("sweep aborted at n = " + std::to_string(n) + ", t = " +
                        std::to_string(cur_t) + ", l = " + std::to_string(cur_l) + ": " +
                        e.what());
        }
    }
    return report;
}

double fit_rate(const ErrorReport& report, int order, int n_lo, int n_hi) {
    std::vector<double> xs, ys;
    for (const SweepRow& row : report.rows) {
        if (row.n < n_lo || row.n > n_hi) continue;
        if (order < 0 || order >= static_cast<int>(row.max_abs_error.size())) {
            throw UsageError("fit_rate: order outside the report's range");
        }
        const double err = row.max_abs_error[order];
        if (err > kRoundoffFloor) {
            xs.push_back(std::sqrt(static_cast<double>(row.n)));
            ys.push_back(std::log(err));
        }
    }
    if (xs.size() < 3) {
        throw UsageError("fit_rate: fewer than 3 above-floor rows in window [" +
                         std::to_string(n_lo) + ", " + std::to_string(n_hi) + "]");
    }
    const double count = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (sxy - sx * sy / count) / (sxx - sx * sx / count);
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace sincderiv
