#pragma once

#include <stdexcept>
#include <string>

#include "topo/rational.hpp"

namespace topo {

/// Integral Moebius transformation s -> (a*s + b)/(c*s + d), |ad - bc| = 1.
/// Acts projectively on Q u {inf}: p/q -> (a*p + b*q)/(c*p + d*q).
struct MobiusMap {
    long long a, b, c, d;

    MobiusMap(long long a_, long long b_, long long c_, long long d_)
        : a(a_), b(b_), c(c_), d(d_) {
        long long det = a * d - b * c;
        if (det != 1 && det != -1)
            throw std::invalid_argument("Moebius map must have determinant +-1");
    }

    static MobiusMap identity() { return MobiusMap(1, 0, 0, 1); }

    long long det() const { return a * d - b * c; }

    ExtendedSlope apply(const ExtendedSlope& s) const {
        return ExtendedSlope(a * s.num() + b * s.den(), c * s.num() + d * s.den());
    }

    MobiusMap compose(const MobiusMap& rhs) const {  // this after rhs
        return MobiusMap(a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
                         c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d);
    }

    MobiusMap inverse() const {
        long long e = det();  // +-1
        return MobiusMap(e * d, -e * b, -e * c, e * a);
    }

    friend bool operator==(const MobiusMap& l, const MobiusMap& r) {
        // Projective equality: (a,b,c,d) and (-a,-b,-c,-d) act identically.
        return (l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d) ||
               (l.a == -r.a && l.b == -r.b && l.c == -r.c && l.d == -r.d);
    }

    std::string str() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + "," + std::to_string(d) + ")";
    }
};

inline ExtendedSlope mobius_apply(const MobiusMap& m, const ExtendedSlope& s) {
    return m.apply(s);
}

}  // namespace topo
