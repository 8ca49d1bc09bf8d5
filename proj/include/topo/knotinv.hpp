#pragma once

#include <array>
#include <vector>

#include "topo/rational.hpp"

namespace topo {

/// (p, q, r)-pretzel knot with all strand counts odd, so it bounds the
/// obvious genus-one Seifert surface.
struct PretzelKnot {
    long long p, q, r;

    PretzelKnot(long long p_, long long q_, long long r_);
};

/// Seifert pairing of a genus-one surface: 2x2 integer matrix V with
/// det(V - V^T) = 1.
struct SeifertMatrixG1 {
    std::array<std::array<long long, 2>, 2> v;

    explicit SeifertMatrixG1(std::array<std::array<long long, 2>, 2> m);

    long long intersection_det() const;   // det(V - V^T), always 1
    long long symmetrized_det() const;    // det(V + V^T)
};

/// Symmetric normalized Alexander polynomial: coefficients for degrees
/// -d..d with c(-i) = c(i) and value 1 at t = 1.
struct SymmetricLaurent {
    std::vector<long long> coeffs;  // index i holds degree i - d, size 2d+1

    explicit SymmetricLaurent(std::vector<long long> c);

    long long half_span() const { return (static_cast<long long>(coeffs.size()) - 1) / 2; }
    long long at_one() const;
    long long at_minus_one() const;
    bool is_one() const { return coeffs.size() == 1 && coeffs[0] == 1; }

    friend bool operator==(const SymmetricLaurent& a, const SymmetricLaurent& b) {
        return a.coeffs == b.coeffs;
    }

    std::string str() const;
};

/// Seifert matrix of the standard genus-one surface of an odd pretzel:
/// V = [[(p+q)/2, (q+1)/2], [(q-1)/2, (q+r)/2]].
SeifertMatrixG1 seifert_matrix(const PretzelKnot& k);

/// Alexander polynomial det(V^T - t V), normalized symmetric with
/// Delta(1) = 1.
SymmetricLaurent alexander(const SeifertMatrixG1& v);

/// Knot determinant |Delta(-1)|.
long long determinant(const SymmetricLaurent& delta);

/// Genus certificate from the Alexander span against the genus-one
/// surface bound.
struct GenusCertificate {
    long long genus;   // 0 or 1
    bool certified;    // false exactly when Delta = 1 (possibly trivial knot)
};

GenusCertificate genus_certificate(const PretzelKnot& k);

/// Schubert's satellite bound: g(satellite) >= w * g(companion).
long long satellite_genus_bound(long long winding, long long companion_genus);

}  // namespace topo
