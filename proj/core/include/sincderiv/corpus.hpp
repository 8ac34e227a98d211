#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sincderiv/sincdiff.hpp"

namespace sincderiv {

enum class FunctionId { example1, example2 };

std::string_view to_string(FunctionId id);
std::optional<FunctionId> parse_function_id(std::string_view name);

/// A benchmark target: the function in overflow-safe scalar form, the same
/// expression as a jet builder (the derivative oracle), and the decay
/// profiles under the classical (SE) and improved (IMP) maps.
struct TestFunction {
    FunctionId id;
    Interval interval;
    std::function<double(double)> eval;
    std::function<Jet(double, int)> eval_jet;
    DecayProfile profile_se;
    DecayProfile profile_imp;
    MapId se_map;
    MapId imp_map;
};

/// The two benchmark functions:
///   example1: f(t) = sqrt(t/(1+t)) e^{-t} (1-e^{-t})^2   on (0, inf),
///             SE2 with (alpha, beta, d) = (1/2, 1, 1.57),
///             IMP2 with (1/2, 1, 3.14);
///   example2: f(t) = 1 / ((4+t^2)(1+e^{pi t/2}))         on (-inf, inf),
///             SE4 with (2, pi/4, 1.57), IMP4 with (2, pi/2, 2.07).
const std::vector<TestFunction>& corpus();
const TestFunction& corpus_function(FunctionId id);

/// Dyadic evaluation grid: t = 2^i, i = -50..50 for example1 (101 points);
/// t = -2^i, 0, 2^i for example2 (203 points). Ascending, bit-exact.
std::vector<double> evaluation_grid(FunctionId id);
std::string grid_id(FunctionId id);

/// f^(order)(t) through the jet form of the closed expression; independent of
/// the maps and the sinc machinery. Requires order <= 4 and t inside the
/// function's interval.
double oracle_derivative(FunctionId id, int order, double t);

} // namespace sincderiv
