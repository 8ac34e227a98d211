#include "sincderiv/maps.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

// Catalog of variable transforms and their node weights:
//
//   SE1:  t = e^x                          (0, inf)    g(t) = (t/(1+t))^m
//   SE2:  t = arsinh(e^x)                  (0, inf)    g(t) = (1 - e^{-t})^m
//   SE3:  t = sinh x                       (-inf, inf) g = 1
//   SE4:  t = sinh(log(arsinh(e^x)))       (-inf, inf) g = 1
//   SE5:  t = (b-a)/2 tanh(x/2) + (b+a)/2  (a, b)      g(t) = (t-a)^m (b-t)^m
//   IMP2: t = log(1 + e^x)                 (0, inf)    g(t) = (1 - e^{-t})^m
//   IMP4: t = 2 sinh(log(log(1 + e^x)))    (-inf, inf) g = 1
//
// Inverse closed forms, derived from the definitions above:
//
//   SE1:  x = log t.
//   SE2:  sinh t = e^x                  => x = log(sinh t).
//   SE3:  x = arsinh t.
//   SE4:  t = sinh(log u) = (u - 1/u)/2 with u = arsinh(e^x); solving
//         u^2 - 2tu - 1 = 0 for the positive root gives u = t + sqrt(1+t^2),
//         and e^x = sinh u   => x = log(sinh(t + sqrt(1+t^2))).
//   SE5:  tanh(x/2) = (2t-a-b)/(b-a)    => x = log((t-a)/(b-t)).
//   IMP2: e^x = e^t - 1                 => x = log(expm1(t)).
//   IMP4: t = v - 1/v with v = log(1+e^x); solving v^2 - tv - 1 = 0 for the
//         positive root gives v = (t + sqrt(4+t^2))/2 = p(t), hence
//         x = imp2_inverse(p(t)).
//
// Stability arrangements (the evaluation grids reach |t| = 2^50):
//   log(sinh w)  = w - log 2 + log1p(-e^{-2w})  for w > 1 (sinh overflows),
//   log(expm1 t) = t + log1p(-e^{-t})           for t > 1,
//   arsinh(e^x)  = x + log(1 + sqrt(1+e^{-2x})) for x > 0 (e^x overflows),
//   log(1+e^x)   = x + log1p(e^{-x})            for x > 0,
//   t + sqrt(1+t^2) = 1/(sqrt(1+t^2) - t)       for t < 0 (cancellation),
//   (t + sqrt(4+t^2))/2 = 2/(sqrt(4+t^2) - t)   for t < 0,
//   SE5 forward through the logistic form       (see se5_forward).

namespace sincderiv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = std::numbers::ln2;

void check_finite_input(double x, const char* who) {
    if (!std::isfinite(x)) {
        throw UsageError(std::string(who) + ": non-finite input");
    }
}

void check_interior(const MapId& id, double t, const char* who) {
    if (!id.interval().contains_interior(t)) {
        throw DomainError(std::string(who) + ": t = " + std::to_string(t) +
                          " not strictly inside the interval of " + std::string(id.name()));
    }
}

// log(sinh(w)) for a jet with w0 > 0.
Jet log_sinh(const Jet& w) {
    if (w.value() <= 1.0) return log(sinh(w));
    return w - kLn2 + log1p(-exp(-2.0 * w));
}

// log(e^v - 1) for a jet with v0 > 0.
Jet log_expm1(const Jet& v) {
    if (v.value() <= 1.0) return log(expm1(v));
    return v + log1p(-exp(-v));
}

// arsinh(e^x) as a scalar, overflow-safe for large x.
double se2_forward(double x) {
    if (x <= 0.0) return std::asinh(std::exp(x));
    return x + std::log1p(std::sqrt(1.0 + std::exp(-2.0 * x)));
}

Jet se2_forward_jet(const Jet& x) {
    if (x.value() <= 0.0) return asinh(exp(x));
    return x + log1p(sqrt(1.0 + exp(-2.0 * x)));
}

// log(1+e^x) as a scalar, overflow-safe for large x.
double imp2_forward(double x) {
    if (x <= 0.0) return std::log1p(std::exp(x));
    return x + std::log1p(std::exp(-x));
}

Jet imp2_forward_jet(const Jet& x) {
    if (x.value() <= 0.0) return log1p(exp(x));
    return x + log1p(exp(-x));
}

Jet p_jet_of(const Jet& t) {
    if (t.value() >= 0.0) return (t + sqrt(t * t + 4.0)) * 0.5;
    return 2.0 / (sqrt(t * t + 4.0) - t);
}

// (b-a)/2 tanh(x/2) + (b+a)/2 rewritten through the logistic function as
// a + (b-a)/(1+e^{-x}) for x <= 0 and b - (b-a)/(1+e^{x}) for x > 0; the
// tanh form cancels near saturation, the logistic form never does.
double se5_forward(double a, double b, double x) {
    if (x <= 0.0) return a + (b - a) / (1.0 + std::exp(-x));
    return b - (b - a) / (1.0 + std::exp(x));
}

Jet se5_forward_jet(double a, double b, const Jet& x) {
    if (x.value() <= 0.0) return a + (b - a) / (1.0 + exp(-x));
    return b - (b - a) / (1.0 + exp(x));
}

} // namespace

std::string_view to_string(MapKind kind) {
    switch (kind) {
        case MapKind::SE1: return "SE1";
        case MapKind::SE2: return "SE2";
        case MapKind::SE3: return "SE3";
        case MapKind::SE4: return "SE4";
        case MapKind::SE5: return "SE5";
        case MapKind::IMP2: return "IMP2";
        case MapKind::IMP4: return "IMP4";
    }
    return "?";
}

bool Interval::contains_interior(double t) const noexcept {
    return std::isfinite(t) && lo < t && t < hi;
}

MapId MapId::se5(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw UsageError("MapId::se5: endpoints must be finite with a < b");
    }
    return MapId(MapKind::SE5, a, b);
}

Interval MapId::interval() const noexcept {
    switch (kind_) {
        case MapKind::SE1:
        case MapKind::SE2:
        case MapKind::IMP2: return {0.0, kInf};
        case MapKind::SE5: return {a_, b_};
        default: return {-kInf, kInf};
    }
}

MapSpec::MapSpec(MapId map_id, int exponent) : id(map_id), weight_exponent(exponent) {
    if (exponent < 0) throw UsageError("MapSpec: weight exponent must be >= 0");
}

double map_forward(const MapId& id, double x) {
    check_finite_input(x, "map_forward");
    switch (id.kind()) {
        case MapKind::SE1: return std::exp(x);
        case MapKind::SE2: return se2_forward(x);
        case MapKind::SE3: return std::sinh(x);
        case MapKind::SE4: {
            const double u = se2_forward(x);
            return 0.5 * (u - 1.0 / u);
        }
        case MapKind::SE5: return se5_forward(id.endpoint_a(), id.endpoint_b(), x);
        case MapKind::IMP2: return imp2_forward(x);
        case MapKind::IMP4: {
            const double v = imp2_forward(x);
            return v - 1.0 / v;
        }
    }
    throw UsageError("map_forward: unknown map");
}

Jet map_forward_jet(const MapId& id, double x, int order) {
    check_finite_input(x, "map_forward_jet");
    const Jet X = Jet::variable(x, order);
    switch (id.kind()) {
        case MapKind::SE1: return exp(X);
        case MapKind::SE2: return se2_forward_jet(X);
        case MapKind::SE3: return sinh(X);
        case MapKind::SE4: {
            const Jet u = se2_forward_jet(X);
            return (u - 1.0 / u) * 0.5;
        }
        case MapKind::SE5: return se5_forward_jet(id.endpoint_a(), id.endpoint_b(), X);
        case MapKind::IMP2: return imp2_forward_jet(X);
        case MapKind::IMP4: {
            const Jet v = imp2_forward_jet(X);
            return v - 1.0 / v;
        }
    }
    throw UsageError("map_forward_jet: unknown map");
}

Jet map_inverse_jet(const MapId& id, double t, int order) {
    check_interior(id, t, "map_inverse_jet");
    const Jet T = Jet::variable(t, order);
    switch (id.kind()) {
        case MapKind::SE1: return log(T);
        case MapKind::SE2: return log_sinh(T);
        case MapKind::SE3: return asinh(T);
        case MapKind::SE4: {
            const Jet w = t >= 0.0 ? T + sqrt(T * T + 1.0) : 1.0 / (sqrt(T * T + 1.0) - T);
            return log_sinh(w);
        }
        case MapKind::SE5: return log(T - id.endpoint_a()) - log(id.endpoint_b() - T);
        case MapKind::IMP2: return log_expm1(T);
        case MapKind::IMP4: return log_expm1(p_jet_of(T));
    }
    throw UsageError("map_inverse_jet: unknown map");
}

Jet weight_jet(const MapId& id, int weight_exponent, double t, int order) {
    if (weight_exponent < 0) throw UsageError("weight_jet: exponent must be >= 0");
    check_interior(id, t, "weight_jet");
    const Jet one = Jet::constant(1.0, order, t);
    if (weight_exponent == 0) return one;
    const Jet T = Jet::variable(t, order);
    switch (id.kind()) {
        case MapKind::SE1: return pow_int(T / (T + 1.0), weight_exponent);
        case MapKind::SE2:
        case MapKind::IMP2: return pow_int(-expm1(-T), weight_exponent);
        case MapKind::SE3:
        case MapKind::SE4:
        case MapKind::IMP4: return one;
        case MapKind::SE5:
            return pow_int(T - id.endpoint_a(), weight_exponent) *
                   pow_int(id.endpoint_b() - T, weight_exponent);
    }
    throw UsageError("weight_jet: unknown map");
}

Jet p_jet(double t, int order) {
    check_finite_input(t, "p_jet");
    return p_jet_of(Jet::variable(t, order));
}

} // namespace sincderiv
