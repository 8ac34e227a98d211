#pragma once

#include <span>
#include <string>
#include <vector>

#include "sincderiv/corpus.hpp"

namespace sincderiv {

enum class Formula { stenger, improved };

std::string_view to_string(Formula formula);
std::optional<Formula> parse_formula(std::string_view name);

/// Absolute errors below this magnitude are double-precision evaluation
/// noise. Rate fits and cross-formula comparisons ignore rows under it.
inline constexpr double kRoundoffFloor = 1e-12;

MapId formula_map(const TestFunction& fn, Formula formula);
DecayProfile formula_profile(const TestFunction& fn, Formula formula);

struct SweepRow {
    int n;
    double h;
    int M;
    int N;
    std::vector<double> max_abs_error; // index l = 0..m
};

struct ErrorReport {
    FunctionId function;
    Formula formula;
    int m;
    DecayProfile profile;
    std::string grid;
    std::vector<SweepRow> rows; // ascending in n
    std::string timestamp;
};

/// For each n: select parameters from the formula's profile, build the
/// approximant, and record max_t |approx^(l)(t) - f^(l)(t)| over the
/// function's evaluation grid for every l = 0..m. Absolute errors, never
/// relative. Grid points where both sides underflow to zero contribute 0.
ErrorReport run_sweep(FunctionId id, Formula formula, int m, std::span<const int> n_list);

/// Harness hook: same sweep with the sampled function and the derivative
/// oracle substituted (oracle signature: (l, t) -> f^(l)(t)). run_sweep is
/// this with the corpus function's eval and jet oracle.
ErrorReport run_sweep_with(FunctionId id, Formula formula, int m,
                           std::span<const int> n_list,
                           const std::function<double(double)>& sampler,
                           const std::function<double(int, double)>& oracle);

/// Least-squares slope of ln(max_abs_error[order]) against sqrt(n) over rows
/// with n_lo <= n <= n_hi and error above kRoundoffFloor. Requires at least
/// three such rows.
double fit_rate(const ErrorReport& report, int order, int n_lo, int n_hi);

/// Current time as an ISO-8601 UTC string; the single non-deterministic CSV
/// metadata line.
std::string utc_timestamp();

} // namespace sincderiv
