#pragma once

#include <array>
#include <span>
#include <vector>

#include "sincderiv/error.hpp"

#ifndef SINCDERIV_MAX_JET_ORDER
#define SINCDERIV_MAX_JET_ORDER 8
#endif

namespace sincderiv {

/// Hard cap on the truncation order of a Jet. Fixed and small so jets live
/// entirely on the stack.
inline constexpr int kMaxJetOrder = SINCDERIV_MAX_JET_ORDER;

namespace detail {
struct JetAccess;
}

/// Truncated Taylor expansion of a real function about an anchor point:
/// coeff(j) = F^(j)(anchor) / j! for j = 0..order().
///
/// Jets are immutable values and every operation on them is pure, so they are
/// safe for unrestricted concurrent use. Feeding Jet::variable(x, K) through
/// an expression built from the operators and elementary functions below
/// yields the expression's derivatives at x through order K.
class Jet {
public:
    /// Order-0 jet of the constant 0 anchored at 0.
    Jet() = default;

    /// Builds a jet from raw Taylor coefficients; order = coeffs.size() - 1.
    /// Rejects empty or non-finite input and orders above kMaxJetOrder.
    Jet(double anchor, std::span<const double> coeffs);

    /// Jet of the identity function at x0: coefficients (x0, 1, 0, ..., 0).
    static Jet variable(double x0, int order);

    /// Jet of a constant function anchored at `anchor`.
    static Jet constant(double value, int order, double anchor);

    double anchor() const noexcept { return anchor_; }
    int order() const noexcept { return order_; }

    /// Scaled coefficient c_j = F^(j)(anchor)/j!. Requires 0 <= j <= order().
    double coeff(int j) const;

    double value() const noexcept { return c_[0]; }

    /// Unscaled derivative F^(j)(anchor) = coeff(j) * j! (one multiplication).
    double derivative(int j) const;

private:
    double anchor_ = 0.0;
    int order_ = 0;
    std::array<double, kMaxJetOrder + 1> c_{};

    friend struct detail::JetAccess;
};

/// All derivatives (F(a), F'(a), ..., F^(K)(a)) of the jet.
std::vector<double> derivatives(const Jet& jet);

// Arithmetic. Jet-jet operations require identical anchor and order; scalars
// broadcast to a constant jet matching the partner. Multiplication is the
// Cauchy product truncated at the common order. Division requires the
// denominator's leading coefficient to satisfy |c0| >= 1e-300.
Jet operator-(const Jet& a);
Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator+(const Jet& a, double s);
Jet operator+(double s, const Jet& a);
Jet operator-(const Jet& a, double s);
Jet operator-(double s, const Jet& a);
Jet operator*(const Jet& a, double s);
Jet operator*(double s, const Jet& a);
Jet operator/(const Jet& a, double s);
Jet operator/(double s, const Jet& a);

// Elementary functions. The leading coefficient must lie strictly inside the
// function's real domain (log: c0 > 0; log1p: c0 > -1; sqrt: c0 > 0);
// violations raise SingularityError carrying the offending c0.
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet log1p(const Jet& a);
Jet expm1(const Jet& a);
Jet sqrt(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet sinh(const Jet& a);
Jet cosh(const Jet& a);
Jet asinh(const Jet& a);

/// sin(u)/u with the removable singularity filled in. For |c0| <= 0.25 the
/// jet is evaluated through the even power series sum_i (-1)^i u^(2i)/(2i+1)!
/// truncated at i = 10, whose remainder is far below machine epsilon on that
/// disk; otherwise as sin(u)/u by jet division.
Jet sinc(const Jet& a);

/// a^r for real exponent r. Requires a.value() > 0; no branch-cut handling.
Jet pow_real(const Jet& a, double r);

/// a^n for integer n >= 0 by repeated multiplication. n = 0 yields the
/// constant-1 jet at the same anchor and order.
Jet pow_int(const Jet& a, int n);

/// Taylor composition (outer o inner). outer must be anchored exactly at
/// inner.value() and both jets must share one order.
Jet compose(const Jet& outer, const Jet& inner);

} // namespace sincderiv
