#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace sincderiv {

/// Closed-form bounds that underpin the convergence analysis, restricted to
/// the real axis so they can be checked numerically:
///   log_ratio: log(1+e^x)/(1+log(1+e^x)) <= 1/(1+e^{-x})          on R,
///   sub_ineq:  1/((1-e^{-p(t)}) sqrt(4+t^2)) <= 1/(2(1-e^{-1/2})) on R,
///   dd_plus:   e^{1/log(1+e^x)} <= e^{1/log 2}                    on x >= 0,
///   dd_minus:  1/(1-log(1+e^x)) <= 1/(1-log 2)                    on x < 0,
///   fg2_decay: f1(t)/g2(t) <= (t/(1+t))^{1/2} e^{-t}              on (0, inf),
/// where f1 is the first benchmark function and g2 its exponent-2 weight.
enum class InequalityId { log_ratio, sub_ineq, dd_plus, dd_minus, fg2_decay };

inline constexpr std::array<InequalityId, 5> kAllInequalities = {
    InequalityId::log_ratio, InequalityId::sub_ineq, InequalityId::dd_plus,
    InequalityId::dd_minus, InequalityId::fg2_decay};

/// Max over the grid of (LHS - RHS); a pass is <= kInequalityTolerance.
inline constexpr double kInequalityTolerance = 1e-12;

std::string_view to_string(InequalityId id);
std::optional<InequalityId> parse_inequality_id(std::string_view name);

/// Every grid point must lie in the inequality's stated real domain.
double verify_inequality(InequalityId id, std::span<const double> grid);

/// Log-spaced grid of `size` points covering the inequality's domain
/// (symmetric around 0 where the domain is all of R). Requires size >= 10.
std::vector<double> inequality_default_grid(InequalityId id, int size);

} // namespace sincderiv
