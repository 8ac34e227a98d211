#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sincderiv/maps.hpp"

namespace sincderiv {

/// Decay profile of a target function under a catalog map: algebraic rate
/// alpha at one end, exponential rate beta at the other, and the half-width d
/// of the strip on which the transformed function stays analytic.
struct DecayProfile {
    double alpha;
    double beta;
    double d;
};

/// Non-empty when d lies outside the range covered by the convergence
/// theorems for the map family (d >= pi/2 for SE maps, d >= pi for IMP
/// maps). Advisory only; parameter selection still proceeds.
std::optional<std::string> theorem_range_warning(const DecayProfile& profile,
                                                 const MapId& id);

/// Mesh and truncation parameters:
///   mu = min(alpha, beta),
///   M  = ceil(mu n / alpha),  N = ceil(mu n / beta),
///   h  = sqrt(pi d / (mu n)).
struct SincParams {
    int m;     // derivative order targeted by the formula (weight exponent)
    int n;     // resolution
    double mu;
    int M;
    int N;
    double h;
};

SincParams select_params(const DecayProfile& profile, int n, int m);

/// One expansion node: index k, transformed abscissa x = k h, and the
/// interval point t = map(x).
struct Node {
    int k;
    double x;
    double t;
};

/// A frozen expansion of f/g in the shifted-sinc basis under a catalog map.
/// Immutable after construction; evaluation is pure and may run concurrently
/// over many points.
class Approximant {
public:
    const MapSpec& map() const noexcept { return map_; }
    const SincParams& params() const noexcept { return params_; }
    std::span<const Node> nodes() const noexcept { return nodes_; }
    std::span<const double> coefficients() const noexcept { return coeffs_; }
    Interval interval() const noexcept { return map_.interval(); }

private:
    Approximant(const MapSpec& map, const SincParams& params)
        : map_(map), params_(params) {}

    MapSpec map_;
    SincParams params_;
    std::vector<Node> nodes_;
    std::vector<double> coeffs_;

    friend Approximant build_approximant(const std::function<double(double)>&,
                                         const MapSpec&, const SincParams&);
};

/// Samples f at the nodes t_k = map(k h), k = -M..N, and stores the basis
/// coefficients c_k = f(t_k)/g(t_k). The map's weight exponent must equal
/// params.m. Non-finite samples raise SamplingError naming the node; a node
/// weight that underflows to zero raises SingularityError.
Approximant build_approximant(const std::function<double(double)>& f,
                              const MapSpec& map, const SincParams& params);

/// Derivatives of order 0..max_order (with respect to t) of the basis term
/// g(t) * S(k,h)(map_inverse(t)), where S(k,h) is the sinc bump centered at
/// node k h. Computed by jet propagation: weight jet times sinc of the jet
/// of pi (map_inverse(t) - k h)/h.
std::vector<double> basis_term_derivs(const MapSpec& map, int weight_order, int k,
                                      double h, double t, int max_order);

/// Value of the order-th derivative of the approximant at t. Requires
/// 0 <= order <= params().m and t strictly inside the interval. The sum runs
/// over ascending k with Kahan-compensated accumulation, so results are
/// deterministic and independent of evaluation order across points.
double evaluate_derivative(const Approximant& approx, double t, int order);

/// All orders 0..params().m at once; entry l equals evaluate_derivative(l).
std::vector<double> evaluate_all_orders(const Approximant& approx, double t);

} // namespace sincderiv
