#include "sincderiv/jet.hpp"

#include <cmath>
#include <string>

namespace sincderiv {
namespace detail {

struct JetAccess {
    static Jet make(double anchor, int order) {
        Jet j;
        j.anchor_ = anchor;
        j.order_ = order;
        return j;
    }
    static double* data(Jet& j) noexcept { return j.c_.data(); }
};

} // namespace detail

namespace {

constexpr double kDivFloor = 1e-300;
constexpr double kSincSeriesRadius = 0.25;
constexpr int kSincSeriesTop = 10; // highest i in sum (-1)^i u^(2i)/(2i+1)!

const std::array<double, kMaxJetOrder + 1>& factorials() {
    static const auto table = [] {
        std::array<double, kMaxJetOrder + 1> t{};
        t[0] = 1.0;
        for (int j = 1; j <= kMaxJetOrder; ++j) t[j] = t[j - 1] * j;
        return t;
    }();
    return table;
}

Jet make(double anchor, int order) { return detail::JetAccess::make(anchor, order); }

double* data(Jet& j) { return detail::JetAccess::data(j); }

void check_order(int order, const char* who) {
    if (order < 0 || order > kMaxJetOrder) {
        throw UsageError(std::string(who) + ": order " + std::to_string(order) +
                         " outside [0, " + std::to_string(kMaxJetOrder) + "]");
    }
}

void check_compatible(const Jet& a, const Jet& b, const char* who) {
    if (a.anchor() != b.anchor()) {
        throw UsageError(std::string(who) + ": anchor mismatch");
    }
    if (a.order() != b.order()) {
        throw UsageError(std::string(who) + ": order mismatch");
    }
}

Jet checked(Jet j, const char* who) {
    for (int i = 0; i <= j.order(); ++i) {
        if (!std::isfinite(j.coeff(i))) {
            throw SingularityError(std::string(who) + " produced a non-finite coefficient",
                                   j.coeff(i));
        }
    }
    return j;
}

// Propagates b = f(a) through b' * w = a', given b0 and the jet w. Covers
// log (w = a), log1p (w = 1 + a), and asinh (w = sqrt(1 + a^2)).
Jet quotient_rule(const Jet& a, const Jet& w, double b0, const char* who) {
    const int K = a.order();
    Jet r = make(a.anchor(), K);
    double* b = data(r);
    b[0] = b0;
    for (int k = 1; k <= K; ++k) {
        double acc = 0.0;
        for (int m = 1; m < k; ++m) acc += m * b[m] * w.coeff(k - m);
        b[k] = (a.coeff(k) - acc / k) / w.value();
    }
    return checked(r, who);
}

enum class Circular { sin_part, cos_part, sinh_part, cosh_part };

Jet circular(const Jet& a, Circular want) {
    const int K = a.order();
    const bool hyper = want == Circular::sinh_part || want == Circular::cosh_part;
    const double sign = hyper ? 1.0 : -1.0;
    std::array<double, kMaxJetOrder + 1> s{}, c{};
    s[0] = hyper ? std::sinh(a.value()) : std::sin(a.value());
    c[0] = hyper ? std::cosh(a.value()) : std::cos(a.value());
    for (int k = 1; k <= K; ++k) {
        double sa = 0.0, ca = 0.0;
        for (int j = 1; j <= k; ++j) {
            sa += j * a.coeff(j) * c[k - j];
            ca += j * a.coeff(j) * s[k - j];
        }
        s[k] = sa / k;
        c[k] = sign * ca / k;
    }
    const bool cos_like = want == Circular::cos_part || want == Circular::cosh_part;
    Jet r = make(a.anchor(), K);
    double* out = data(r);
    for (int k = 0; k <= K; ++k) out[k] = cos_like ? c[k] : s[k];
    return r;
}

} // namespace

Jet::Jet(double anchor, std::span<const double> coeffs) {
    if (coeffs.empty()) throw UsageError("Jet: empty coefficient list");
    check_order(static_cast<int>(coeffs.size()) - 1, "Jet");
    if (!std::isfinite(anchor)) throw UsageError("Jet: non-finite anchor");
    anchor_ = anchor;
    order_ = static_cast<int>(coeffs.size()) - 1;
    for (int j = 0; j <= order_; ++j) {
        if (!std::isfinite(coeffs[j])) {
            throw UsageError("Jet: non-finite coefficient at index " + std::to_string(j));
        }
        c_[j] = coeffs[j];
    }
}

Jet Jet::variable(double x0, int order) {
    check_order(order, "Jet::variable");
    if (!std::isfinite(x0)) throw UsageError("Jet::variable: non-finite point");
    Jet j = make(x0, order);
    data(j)[0] = x0;
    if (order >= 1) data(j)[1] = 1.0;
    return j;
}

Jet Jet::constant(double value, int order, double anchor) {
    check_order(order, "Jet::constant");
    if (!std::isfinite(value) || !std::isfinite(anchor)) {
        throw UsageError("Jet::constant: non-finite input");
    }
    Jet j = make(anchor, order);
    data(j)[0] = value;
    return j;
}

double Jet::coeff(int j) const {
    if (j < 0 || j > order_) {
        throw UsageError("Jet::coeff: index " + std::to_string(j) + " outside order " +
                         std::to_string(order_));
    }
    return c_[j];
}

double Jet::derivative(int j) const {
    if (j < 0 || j > order_) {
        throw UsageError("Jet::derivative: index outside order");
    }
    return c_[j] * factorials()[j];
}

std::vector<double> derivatives(const Jet& jet) {
    std::vector<double> d(jet.order() + 1);
    for (int j = 0; j <= jet.order(); ++j) d[j] = jet.derivative(j);
    return d;
}

Jet operator-(const Jet& a) {
    Jet r = make(a.anchor(), a.order());
    for (int k = 0; k <= a.order(); ++k) data(r)[k] = -a.coeff(k);
    return r;
}

Jet operator+(const Jet& a, const Jet& b) {
    check_compatible(a, b, "operator+");
    Jet r = make(a.anchor(), a.order());
    for (int k = 0; k <= a.order(); ++k) data(r)[k] = a.coeff(k) + b.coeff(k);
    return checked(r, "operator+");
}

Jet operator-(const Jet& a, const Jet& b) {
    check_compatible(a, b, "operator-");
    Jet r = make(a.anchor(), a.order());
    for (int k = 0; k <= a.order(); ++k) data(r)[k] = a.coeff(k) - b.coeff(k);
    return checked(r, "operator-");
}

Jet operator*(const Jet& a, const Jet& b) {
    check_compatible(a, b, "operator*");
    const int K = a.order();
    Jet r = make(a.anchor(), K);
    double* out = data(r);
    for (int k = 0; k <= K; ++k) {
        double acc = 0.0;
        for (int j = 0; j <= k; ++j) acc += a.coeff(j) * b.coeff(k - j);
        out[k] = acc;
    }
    return checked(r, "operator*");
}

Jet operator/(const Jet& a, const Jet& b) {
    check_compatible(a, b, "operator/");
    if (std::abs(b.value()) < kDivFloor) {
        throw SingularityError("jet division by (near-)zero leading coefficient", b.value());
    }
    const int K = a.order();
    Jet r = make(a.anchor(), K);
    double* q = data(r);
    for (int k = 0; k <= K; ++k) {
        double acc = a.coeff(k);
        for (int j = 1; j <= k; ++j) acc -= b.coeff(j) * q[k - j];
        q[k] = acc / b.value();
    }
    return checked(r, "operator/");
}

Jet operator+(const Jet& a, double s) { return a + Jet::constant(s, a.order(), a.anchor()); }
Jet operator+(double s, const Jet& a) { return Jet::constant(s, a.order(), a.anchor()) + a; }
Jet operator-(const Jet& a, double s) { return a - Jet::constant(s, a.order(), a.anchor()); }
Jet operator-(double s, const Jet& a) { return Jet::constant(s, a.order(), a.anchor()) - a; }
Jet operator*(const Jet& a, double s) { return a * Jet::constant(s, a.order(), a.anchor()); }
Jet operator*(double s, const Jet& a) { return Jet::constant(s, a.order(), a.anchor()) * a; }
Jet operator/(const Jet& a, double s) { return a / Jet::constant(s, a.order(), a.anchor()); }
Jet operator/(double s, const Jet& a) { return Jet::constant(s, a.order(), a.anchor()) / a; }

Jet exp(const Jet& a) {
    const int K = a.order();
    Jet r = make(a.anchor(), K);
    double* b = data(r);
    b[0] = std::exp(a.value());
    for (int k = 1; k <= K; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += j * a.coeff(j) * b[k - j];
        b[k] = acc / k;
    }
    return checked(r, "exp");
}

Jet log(const Jet& a) {
    if (!(a.value() > 0.0)) {
        throw SingularityError("log: leading coefficient must be positive", a.value());
    }
    return quotient_rule(a, a, std::log(a.value()), "log");
}

Jet log1p(const Jet& a) {
    if (!(a.value() > -1.0)) {
        throw SingularityError("log1p: leading coefficient must exceed -1", a.value());
    }
    // b' = a'/(1+a); only the leading coefficient of the divisor shifts.
    Jet w = a + 1.0;
    return quotient_rule(a, w, std::log1p(a.value()), "log1p");
}

Jet expm1(const Jet& a) {
    Jet r = exp(a);
    data(r)[0] = std::expm1(a.value());
    return checked(r, "expm1");
}

Jet sqrt(const Jet& a) {
    if (!(a.value() > 0.0)) {
        throw SingularityError("sqrt: leading coefficient must be positive", a.value());
    }
    const int K = a.order();
    Jet r = make(a.anchor(), K);
    double* b = data(r);
    b[0] = std::sqrt(a.value());
    for (int k = 1; k <= K; ++k) {
        double acc = a.coeff(k);
        for (int j = 1; j < k; ++j) acc -= b[j] * b[k - j];
        b[k] = acc / (2.0 * b[0]);
    }
    return checked(r, "sqrt");
}

Jet sin(const Jet& a) { return checked(circular(a, Circular::sin_part), "sin"); }
Jet cos(const Jet& a) { return checked(circular(a, Circular::cos_part), "cos"); }
Jet sinh(const Jet& a) { return checked(circular(a, Circular::sinh_part), "sinh"); }
Jet cosh(const Jet& a) { return checked(circular(a, Circular::cosh_part), "cosh"); }

Jet asinh(const Jet& a) {
    Jet w = sqrt(a * a + 1.0);
    return quotient_rule(a, w, std::asinh(a.value()), "asinh");
}

Jet sinc(const Jet& a) {
    if (std::abs(a.value()) > kSincSeriesRadius) {
        return checked(sin(a) / a, "sinc");
    }
    // Horner in u^2 over the even series; coefficients 1/(2i+1)! by running
    // product, alternating sign.
    std::array<double, kSincSeriesTop + 1> q{};
    double fact = 1.0; // (2i+1)!
    double sign = 1.0;
    for (int i = 0; i <= kSincSeriesTop; ++i) {
        if (i > 0) fact *= (2.0 * i) * (2.0 * i + 1.0);
        q[i] = sign / fact;
        sign = -sign;
    }
    Jet u2 = a * a;
    Jet acc = Jet::constant(q[kSincSeriesTop], a.order(), a.anchor());
    for (int i = kSincSeriesTop - 1; i >= 0; --i) acc = acc * u2 + q[i];
    return checked(acc, "sinc");
}

Jet pow_real(const Jet& a, double r) {
    if (!(a.value() > 0.0)) {
        throw SingularityError("pow_real: base leading coefficient must be positive",
                               a.value());
    }
    const int K = a.order();
    Jet out = make(a.anchor(), K);
    double* b = data(out);
    b[0] = std::pow(a.value(), r);
    for (int k = 1; k <= K; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += (j * (r + 1.0) - k) * a.coeff(j) * b[k - j];
        b[k] = acc / (k * a.value());
    }
    return checked(out, "pow_real");
}

Jet pow_int(const Jet& a, int n) {
    if (n < 0) throw UsageError("pow_int: negative exponent");
    Jet r = Jet::constant(1.0, a.order(), a.anchor());
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

Jet compose(const Jet& outer, const Jet& inner) {
    if (outer.order() != inner.order()) throw UsageError("compose: order mismatch");
    if (outer.anchor() != inner.value()) {
        throw UsageError("compose: outer anchor must equal inner leading coefficient");
    }
    Jet delta = inner - inner.value(); // zero constant term
    Jet acc = Jet::constant(outer.coeff(outer.order()), inner.order(), inner.anchor());
    for (int j = outer.order() - 1; j >= 0; --j) acc = acc * delta + outer.coeff(j);
    return checked(acc, "compose");
}

} // namespace sincderiv
