#pragma once

#include <string_view>

#include "sincderiv/jet.hpp"

namespace sincderiv {

enum class MapKind { SE1, SE2, SE3, SE4, SE5, IMP2, IMP4 };

std::string_view to_string(MapKind kind);

/// Open interval (lo, hi); infinite endpoints use +-infinity.
struct Interval {
    double lo;
    double hi;
    bool contains_interior(double t) const noexcept;
};

/// Identity of a catalog map. SE5 carries its finite endpoints a < b; every
/// other kind has a fixed interval: SE1, SE2, IMP2 -> (0, inf) and SE3, SE4,
/// IMP4 -> (-inf, inf).
class MapId {
public:
    static MapId se1() { return MapId(MapKind::SE1); }
    static MapId se2() { return MapId(MapKind::SE2); }
    static MapId se3() { return MapId(MapKind::SE3); }
    static MapId se4() { return MapId(MapKind::SE4); }
    static MapId se5(double a, double b);
    static MapId imp2() { return MapId(MapKind::IMP2); }
    static MapId imp4() { return MapId(MapKind::IMP4); }

    MapKind kind() const noexcept { return kind_; }
    double endpoint_a() const noexcept { return a_; }
    double endpoint_b() const noexcept { return b_; }
    Interval interval() const noexcept;
    std::string_view name() const noexcept { return to_string(kind_); }

private:
    explicit MapId(MapKind kind, double a = 0.0, double b = 0.0)
        : kind_(kind), a_(a), b_(b) {}

    MapKind kind_;
    double a_;
    double b_;
};

/// A catalog map paired with the weight exponent m of its node weight g.
struct MapSpec {
    MapSpec(MapId map_id, int exponent);

    MapId id;
    int weight_exponent;

    Interval interval() const noexcept { return id.interval(); }
};

/// t = map(x) for finite x, evaluated in overflow-safe form.
double map_forward(const MapId& id, double x);

/// The forward map applied to Jet::variable(x, order); used to obtain
/// forward derivatives independently of the inverse closed forms.
Jet map_forward_jet(const MapId& id, double x, int order);

/// Jet of the inverse map at t (strictly inside the interval), built from
/// the closed-form inverse expression in an endpoint-stable arrangement.
Jet map_inverse_jet(const MapId& id, double t, int order);

/// Jet of the node weight g at t. The weights with exponent m are
/// (t/(1+t))^m for SE1, (1-e^{-t})^m for SE2/IMP2, (t-a)^m (b-t)^m for SE5;
/// SE3, SE4, IMP4 carry the constant weight 1, as does any map with m = 0.
Jet weight_jet(const MapId& id, int weight_exponent, double t, int order);

/// Jet of p(t) = (t + sqrt(4 + t^2))/2, the bridge between the IMP4 and IMP2
/// inverses: imp4_inverse(t) = imp2_inverse(p(t)).
Jet p_jet(double t, int order);

} // namespace sincderiv
