#pragma once

#include "topo/mobius.hpp"
#include "topo/rational.hpp"

namespace topo {

/// A rational tangle, identified with its Conway fraction in Q u {inf}
/// (Bleiler's parametrization). 1/0 is the 1/0-untangle, 0 the 0-untangle.
struct RationalTangle {
    ExtendedSlope fraction;

    RationalTangle(ExtendedSlope f = ExtendedSlope(0)) : fraction(f) {}

    friend bool operator==(const RationalTangle& a, const RationalTangle& b) {
        return a.fraction == b.fraction;
    }
};

/// Arithmetic shadow of a framed band in the branch set: the unimodular map
/// carrying a replacement untangle's fraction into the ambient diagram's
/// tangle coordinate.
struct FramedSite {
    MobiusMap gluing;

    explicit FramedSite(MobiusMap g) : gluing(g) {}

    /// Site whose induced family map n -> untangle_surgery(site, n) is f.
    /// (The family map is gluing composed with n -> -1/n.)
    static FramedSite from_family_map(const MobiusMap& f) {
        // n -> -1/n is (0,-1,1,0); gluing = f * inverse of it.
        return FramedSite(f.compose(MobiusMap(0, -1, 1, 0).inverse()));
    }
};

/// k horizontal twists: fraction + k.
inline RationalTangle twist_horizontal(const RationalTangle& t, long long k) {
    if (t.fraction.is_infinite()) return t;
    return RationalTangle(t.fraction + ExtendedSlope(k));
}

/// k vertical twists: 1/(k + 1/t), projectively (0 is a fixed point).
inline RationalTangle twist_vertical(const RationalTangle& t, long long k) {
    // As a Moebius map: s -> s/(k*s + 1).
    return RationalTangle(MobiusMap(1, 0, k, 1).apply(t.fraction));
}

/// Replace the 1/0-untangle at the site by a -1/n-untangle. n = 0 replaces
/// it with itself (no surgery): -1/0 = inf.
inline RationalTangle untangle_surgery(const FramedSite& site, long long n) {
    return RationalTangle(site.gluing.apply(ExtendedSlope(-1, n)));
}

/// The family n -> untangle_surgery(site, n) as an explicit integral
/// Moebius map in n; always unimodular.
inline MobiusMap family_map(const FramedSite& site) {
    return site.gluing.compose(MobiusMap(0, -1, 1, 0));
}

/// First twist family: maps inf to -3/4 and -1/n to (11n+3)/(-15n-4).
inline const MobiusMap FAMILY_T1(11, 3, -15, -4);
inline const FramedSite SITE_T1 = FramedSite::from_family_map(FAMILY_T1);

/// Second twist family: -1/n goes to (7n+3)/(-12n-5).
inline const MobiusMap FAMILY_T2(7, 3, -12, -5);
inline const FramedSite SITE_T2 = FramedSite::from_family_map(FAMILY_T2);

}  // namespace topo
