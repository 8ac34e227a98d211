#include "sincderiv/corpus.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace sincderiv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

// f(t) = sqrt(t/(1+t)) e^{-t} (1-e^{-t})^2. The (1-e^{-t}) factor goes
// through expm1 so the t -> 0 tail keeps full relative accuracy.
double example1_eval(double t) {
    const double w = -std::expm1(-t);
    return std::sqrt(t / (1.0 + t)) * std::exp(-t) * w * w;
}

Jet example1_jet(double t, int order) {
    const Jet T = Jet::variable(t, order);
    const Jet w = -expm1(-T);
    return sqrt(T / (T + 1.0)) * exp(-T) * (w * w);
}

// f(t) = 1 / ((4+t^2)(1+e^{pi t/2})). For t > 0 the fraction is multiplied
// through by e^{-pi t/2} so large t underflows to 0 instead of producing
// inf/inf.
double example2_eval(double t) {
    const double q = 4.0 + t * t;
    if (t > 0.0) {
        const double e = std::exp(-0.5 * kPi * t);
        return e / (q * (e + 1.0));
    }
    return 1.0 / (q * (1.0 + std::exp(0.5 * kPi * t)));
}

Jet example2_jet(double t, int order) {
    const Jet T = Jet::variable(t, order);
    const Jet q = T * T + 4.0;
    if (t > 0.0) {
        const Jet e = exp(T * (-0.5 * kPi));
        return e / (q * (e + 1.0));
    }
    return 1.0 / (q * (exp(T * (0.5 * kPi)) + 1.0));
}

} // namespace

std::string_view to_string(FunctionId id) {
    return id == FunctionId::example1 ? "example1" : "example2";
}

std::optional<FunctionId> parse_function_id(std::string_view name) {
    if (name == "example1") return FunctionId::example1;
    if (name == "example2") return FunctionId::example2;
    return std::nullopt;
}

const std::vector<TestFunction>& corpus() {
    static const std::vector<TestFunction> fns = {
        TestFunction{
            FunctionId::example1,
            Interval{0.0, kInf},
            example1_eval,
            example1_jet,
            DecayProfile{0.5, 1.0, 1.57},
            DecayProfile{0.5, 1.0, 3.14},
            MapId::se2(),
            MapId::imp2(),
        },
        TestFunction{
            FunctionId::example2,
            Interval{-kInf, kInf},
            example2_eval,
            example2_jet,
            DecayProfile{2.0, 0.25 * kPi, 1.57},
            DecayProfile{2.0, 0.5 * kPi, 2.07},
            MapId::se4(),
            MapId::imp4(),
        },
    };
    return fns;
}

const TestFunction& corpus_function(FunctionId id) {
    return corpus()[id == FunctionId::example1 ? 0 : 1];
}

std::vector<double> evaluation_grid(FunctionId id) {
    std::vector<double> grid;
    if (id == FunctionId::example1) {
        grid.reserve(101);
        for (int i = -50; i <= 50; ++i) grid.push_back(std::ldexp(1.0, i));
    } else {
        grid.reserve(203);
        for (int i = 50; i >= -50; --i) grid.push_back(-std::ldexp(1.0, i));
        grid.push_back(0.0);
        for (int i = -50; i <= 50; ++i) grid.push_back(std::ldexp(1.0, i));
    }
    return grid;
}

std::string grid_id(FunctionId id) {
    return id == FunctionId::example1 ? "dyadic_pos_101" : "dyadic_sym_203";
}

double oracle_derivative(FunctionId id, int order, double t) {
    if (order < 0 || order > 4) {
        throw UsageError("oracle_derivative: order must lie in [0, 4]");
    }
    const TestFunction& fn = corpus_function(id);
    if (!fn.interval.contains_interior(t)) {
        throw DomainError("oracle_derivative: t = " + std::to_string(t) +
                          " outside the interval of " + std::string(to_string(id)));
    }
    return fn.eval_jet(t, order).derivative(order);
}

} // namespace sincderiv
