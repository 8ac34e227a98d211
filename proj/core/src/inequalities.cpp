#include "sincderiv/inequalities.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sincderiv/corpus.hpp"
#include "sincderiv/maps.hpp"

namespace sincderiv {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double phi2(double x) { return map_forward(MapId::imp2(), x); }

bool in_domain(InequalityId id, double v) {
    switch (id) {
        case InequalityId::log_ratio:
        case InequalityId::sub_ineq: return std::isfinite(v);
        case InequalityId::dd_plus: return std::isfinite(v) && v >= 0.0;
        case InequalityId::dd_minus: return std::isfinite(v) && v < 0.0;
        case InequalityId::fg2_decay: return std::isfinite(v) && v > 0.0;
    }
    return false;
}

double violation_at(InequalityId id, double v) {
    switch (id) {
        case InequalityId::log_ratio: {
            const double w = phi2(v);
            return w / (1.0 + w) - 1.0 / (1.0 + std::exp(-v));
        }
        case InequalityId::sub_ineq: {
            const double p = p_jet(v, 0).value();
            const double lhs = 1.0 / (-std::expm1(-p) * std::sqrt(4.0 + v * v));
            return lhs - 1.0 / (2.0 * -std::expm1(-0.5));
        }
        case InequalityId::dd_plus:
            return std::exp(1.0 / phi2(v)) - std::exp(1.0 / kLn2);
        case InequalityId::dd_minus:
            return 1.0 / (1.0 - phi2(v)) - 1.0 / (1.0 - kLn2);
        case InequalityId::fg2_decay: {
            // Two independent routes for f/g: the corpus evaluation divided
            // by the catalog weight, against the closed-form decay bound
            // with K = 1, alpha = 1/2, beta = 1.
            const double f = corpus_function(FunctionId::example1).eval(v);
            const double g = weight_jet(MapId::imp2(), 2, v, 0).value();
            const double rhs = std::sqrt(v / (1.0 + v)) * std::exp(-v);
            return f / g - rhs;
        }
    }
    throw UsageError("verify_inequality: unknown inequality id");
}

std::vector<double> logspace(double lo, double hi, int count) {
    std::vector<double> pts;
    pts.reserve(count);
    const double le = std::log10(lo), he = std::log10(hi);
    for (int i = 0; i < count; ++i) {
        const double e = count == 1 ? le : le + (he - le) * i / (count - 1);
        pts.push_back(std::pow(10.0, e));
    }
    return pts;
}

} // namespace

std::string_view to_string(InequalityId id) {
    switch (id) {
        case InequalityId::log_ratio: return "log_ratio";
        case InequalityId::sub_ineq: return "sub_ineq";
        case InequalityId::dd_plus: return "dd_plus";
        case InequalityId::dd_minus: return "dd_minus";
        case InequalityId::fg2_decay: return "fg2_decay";
    }
    return "?";
}

std::optional<InequalityId> parse_inequality_id(std::string_view name) {
    for (const InequalityId id : kAllInequalities) {
        if (name == to_string(id)) return id;
    }
    return std::nullopt;
}

double verify_inequality(InequalityId id, std::span<const double> grid) {
    if (grid.empty()) throw UsageError("verify_inequality: empty grid");
    double max_violation = -std::numeric_limits<double>::infinity();
    for (const double v : grid) {
        if (!in_domain(id, v)) {
            throw DomainError("verify_inequality: grid point " + std::to_string(v) +
                              " outside the domain of " + std::string(to_string(id)));
        }
        max_violation = std::max(max_violation, violation_at(id, v));
    }
    return max_violation;
}

std::vector<double> inequality_default_grid(InequalityId id, int size) {
    if (size < 10) throw UsageError("inequality_default_grid: size must be >= 10");
    std::vector<double> grid;
    grid.reserve(size);
    switch (id) {
        case InequalityId::log_ratio:
        case InequalityId::sub_ineq: {
            const int n_neg = size / 2;
            const int n_pos = size - n_neg - 1;
            for (const double v : logspace(1e-8, 1e8, n_neg)) grid.push_back(-v);
            grid.push_back(0.0);
            for (const double v : logspace(1e-8, 1e8, n_pos)) grid.push_back(v);
            break;
        }
        case InequalityId::dd_plus:
            grid.push_back(0.0);
            for (const double v : logspace(1e-8, 1e8, size - 1)) grid.push_back(v);
            break;
        case InequalityId::dd_minus:
            for (const double v : logspace(1e-8, 1e8, size)) grid.push_back(-v);
            break;
        case InequalityId::fg2_decay:
            for (const double v : logspace(1e-12, 1e12, size)) grid.push_back(v);
            break;
    }
    return grid;
}

} // namespace sincderiv
