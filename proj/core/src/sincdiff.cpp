#include "sincderiv/sincdiff.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace sincderiv {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_imp(const MapId& id) {
    return id.kind() == MapKind::IMP2 || id.kind() == MapKind::IMP4;
}

int ceil_to_int(double v) { return static_cast<int>(std::ceil(v)); }

// Kahan-compensated accumulator; addition order is fixed by the caller.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const noexcept { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

Jet basis_term_jet(const Jet& inverse_jet, const Jet& weight, int k, double h) {
    const Jet u = (inverse_jet - k * h) * (kPi / h);
    return weight * sinc(u);
}

void check_basis_args(int weight_order, double h, int max_order, const char* who) {
    if (weight_order < 0) throw UsageError(std::string(who) + ": weight order must be >= 0");
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw UsageError(std::string(who) + ": mesh size must be positive and finite");
    }
    if (max_order < 0 || max_order > kMaxJetOrder) {
        throw UsageError(std::string(who) + ": derivative order outside [0, " +
                         std::to_string(kMaxJetOrder) + "]");
    }
}

} // namespace

std::optional<std::string> theorem_range_warning(const DecayProfile& profile,
                                                 const MapId& id) {
    const double limit = is_imp(id) ? kPi : 0.5 * kPi;
    if (profile.d >= limit) {
        return "d = " + std::to_string(profile.d) + " is outside the theorem range (0, " +
               std::to_string(limit) + ") for " + std::string(id.name());
    }
    return std::nullopt;
}

SincParams select_params(const DecayProfile& profile, int n, int m) {
    if (!(profile.alpha > 0.0) || !(profile.beta > 0.0) || !(profile.d > 0.0)) {
        throw UsageError("select_params: alpha, beta, d must all be positive");
    }
    if (n < 1) throw UsageError("select_params: n must be >= 1");
    if (m < 0) throw UsageError("select_params: m must be >= 0");

    SincParams p;
    p.m = m;
    p.n = n;
    p.mu = std::min(profile.alpha, profile.beta);
    // mu equals one of alpha, beta exactly, so that ratio is pinned to n
    // rather than left to floating-point ceil.
    p.M = p.mu == profile.alpha ? n : ceil_to_int(p.mu * n / profile.alpha);
    p.N = p.mu == profile.beta ? n : ceil_to_int(p.mu * n / profile.beta);
    p.h = std::sqrt(kPi * profile.d / (p.mu * n));
    return p;
}

Approximant build_approximant(const std::function<double(double)>& f,
                              const MapSpec& map, const SincParams& params) {
    if (map.weight_exponent != params.m) {
        throw UsageError("build_approximant: map weight exponent " +
                         std::to_string(map.weight_exponent) + " != params.m " +
                         std::to_string(params.m));
    }
    if (!f) throw UsageError("build_approximant: empty sampler");

    Approximant approx(map, params);
    const int count = params.M + params.N + 1;
    approx.nodes_.reserve(count);
    approx.coeffs_.reserve(count);

    double prev_t = -std::numeric_limits<double>::infinity();
    for (int k = -params.M; k <= params.N; ++k) {
        const double x = k * params.h;
        const double t = map_forward(map.id, x);
        if (!map.interval().contains_interior(t)) {
            throw DomainError("build_approximant: node k = " + std::to_string(k) +
                              " maps outside the open interval (t = " + std::to_string(t) +
                              ")");
        }
        if (!(t > prev_t)) {
            throw DomainError("build_approximant: nodes not strictly increasing at k = " +
                              std::to_string(k));
        }
        prev_t = t;

        const double g = weight_jet(map.id, params.m, t, 0).value();
        if (g == 0.0) {
            throw SingularityError("build_approximant: weight underflowed to zero at node " +
                                       std::to_string(k),
                                   t);
        }
        const double sample = f(t);
        if (!std::isfinite(sample)) {
            throw SamplingError("build_approximant: non-finite sample f(t_k) at node k = " +
                                    std::to_string(k) + ", t = " + std::to_string(t),
                                k, t);
        }
        const double c = sample / g;
        if (!std::isfinite(c)) {
            throw SamplingError("build_approximant: non-finite coefficient at node k = " +
                                    std::to_string(k) + ", t = " + std::to_string(t),
                                k, t);
        }
        approx.nodes_.push_back({k, x, t});
        approx.coeffs_.push_back(c);
    }
    return approx;
}

std::vector<double> basis_term_derivs(const MapSpec& map, int weight_order, int k,
                                      double h, double t, int max_order) {
    check_basis_args(weight_order, h, max_order, "basis_term_derivs");
    const Jet inverse = map_inverse_jet(map.id, t, max_order);
    const Jet weight = weight_jet(map.id, weight_order, t, max_order);
    return derivatives(basis_term_jet(inverse, weight, k, h));
}

std::vector<double> evaluate_all_orders(const Approximant& approx, double t) {
    const SincParams& params = approx.params();
    if (!approx.interval().contains_interior(t)) {
        throw DomainError("evaluate: t = " + std::to_string(t) +
                          " not strictly inside the interval");
    }
    const Jet inverse = map_inverse_jet(approx.map().id, t, params.m);
    const Jet weight = weight_jet(approx.map().id, params.m, t, params.m);

    std::vector<CompensatedSum> sums(params.m + 1);
    const auto nodes = approx.nodes();
    const auto coeffs = approx.coefficients();
    for (size_t i = 0; i < nodes.size(); ++i) {
        const Jet term = basis_term_jet(inverse, weight, nodes[i].k, params.h);
        for (int l = 0; l <= params.m; ++l) sums[l].add(coeffs[i] * term.derivative(l));
    }

    std::vector<double> out(params.m + 1);
    for (int l = 0; l <= params.m; ++l) out[l] = sums[l].value();
    return out;
}

double evaluate_derivative(const Approximant& approx, double t, int order) {
    if (order < 0 || order > approx.params().m) {
        throw UsageError("evaluate_derivative: order " + std::to_string(order) +
                         " exceeds m = " + std::to_string(approx.params().m));
    }
    return evaluate_all_orders(approx, t)[order];
}

} // namespace sincderiv
