#pragma once

#include <string_view>
#include <vector>

#include "topo/rational.hpp"
#include "topo/seifert.hpp"

namespace topo {

/// Montesinos link M(e0; b1/a1, ..., bk/ak): integer part plus an ordered
/// list of finite nonzero tangle fractions. Classification operations
/// require >= 3 tangles with all alpha_i >= 2 after normalization.
struct MontesinosLink {
    long long integer_part = 0;                 // e0
    std::vector<ExtendedSlope> tangles;         // beta_i / alpha_i

    MontesinosLink() = default;
    MontesinosLink(long long e0, std::vector<ExtendedSlope> t);

    friend bool operator==(const MontesinosLink& a, const MontesinosLink& b) {
        return a.integer_part == b.integer_part && a.tangles == b.tangles;
    }

    std::string str() const;

    /// Parses "M(e0; b1/a1, b2/a2, ...)", whitespace-insensitive.
    static MontesinosLink parse(std::string_view s);
};

/// Canonical form: every fraction in (0,1), integer part adjusted so the
/// total e0 + sum(beta_i/alpha_i) is unchanged, fractions sorted.
/// Throws on a tangle that reduces to an integer (alpha <= 1).
MontesinosLink normalize(const MontesinosLink& m);

/// |a1...ak * (e0 + sum beta_i/alpha_i)| — the order of H1 of the double
/// branched cover (0 signals positive first Betti number).
long long determinant(const MontesinosLink& m);

/// The double branched cover as a Seifert fibered space over S^2 with
/// invariants (b = e0; (alpha_i, beta_i)). Requires >= 3 tangles.
SeifertInvariants double_branched_cover(const MontesinosLink& m);

/// Equality of normalized forms, optionally up to simultaneous mirror
/// (e0 -> -e0, beta_i -> -beta_i). Cyclic permutation and reflection of
/// the tangle list are absorbed by the canonical sort.
bool equivalent(const MontesinosLink& m1, const MontesinosLink& m2,
                bool allow_mirror = true);

}  // namespace topo
