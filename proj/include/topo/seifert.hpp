#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "topo/rational.hpp"
#include "topo/snf.hpp"

namespace topo {

/// Multiset of exceptional-fiber indices {n1, n2, n3}, all >= 2.
struct SfsType {
    std::vector<long long> indices;  // sorted ascending

    explicit SfsType(std::vector<long long> idx);

    friend bool operator==(const SfsType& a, const SfsType& b) {
        return a.indices == b.indices;
    }
    friend bool operator!=(const SfsType& a, const SfsType& b) { return !(a == b); }

    std::string str() const;
};

/// Seifert fibered space over S^2 with unnormalized invariants
/// (b; (a1,b1), ..., (ak,bk)). Normalized form has 0 < beta < alpha and
/// alpha >= 2 for every retained pair, integer parts absorbed into b.
struct SeifertInvariants {
    long long b = 0;
    std::vector<std::pair<long long, long long>> fibers;  // (alpha, beta)

    SeifertInvariants() = default;
    SeifertInvariants(long long b_, std::vector<std::pair<long long, long long>> f);

    friend bool operator==(const SeifertInvariants& x, const SeifertInvariants& y) {
        return x.b == y.b && x.fibers == y.fibers;
    }

    std::string str() const;

    /// Parses "SFS(b; a1/b1, a2/b2, ...)", whitespace-insensitive.
    static SeifertInvariants parse(std::string_view s);
};

SeifertInvariants normalize(const SeifertInvariants& s);

/// e = -(b + sum beta_i/alpha_i); invariant under normalize.
ExtendedSlope euler_number(const SeifertInvariants& s);

/// First homology from the standard (k+1)x(k+1) presentation
/// (alpha_i x_i + beta_i h = 0, sum x_i - b h = 0), via Smith normal form.
AbelianGroup h1(const SeifertInvariants& s);

/// Homeomorphism test by normalized invariants, up to orientation reversal
/// (b, (a,b)) -> (-b-k, (a, a-b)). Rejects spaces with <= 2 exceptional
/// fibers (lens-space degenerations, out of classification scope).
bool same_sfs(const SeifertInvariants& s1, const SeifertInvariants& s2);

/// Index multiset of a 3-exceptional-fiber space; normalizes internally.
/// Throws when the normalized fiber count is not exactly 3.
SfsType type_of(const SeifertInvariants& s);

}  // namespace topo
