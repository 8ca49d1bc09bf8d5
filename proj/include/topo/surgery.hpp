#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "topo/rational.hpp"
#include "topo/seifert.hpp"
#include "topo/snf.hpp"

namespace topo {

/// Framed link: one surgery slope per component plus the symmetric linking
/// matrix. Diagonal entries of the linking matrix are ignored; framing
/// lives in the slopes only.
struct SurgeryLink {
    std::vector<ExtendedSlope> slopes;          // p_i / q_i
    std::vector<std::vector<long long>> lk;     // symmetric k x k

    SurgeryLink(std::vector<ExtendedSlope> s, std::vector<std::vector<long long>> l);

    std::size_t components() const { return slopes.size(); }

    /// Parses "L{ lk=[[...],[...]], slopes=[p1/q1, ...] }".
    static SurgeryLink parse(std::string_view s);
};

/// H1 of the surgered manifold: cokernel of the k x k matrix with diagonal
/// p_i and off-diagonal q_i * lk(i,j).
AbelianGroup h1_of_surgery(const SurgeryLink& l);

/// Slope transform under n-twisting along a circle of linking number l:
/// r -> r + n*l^2 (infinity fixed).
ExtendedSlope rolfsen_twist_slope(const ExtendedSlope& r, long long n, long long l);

/// Slope seen by the factor knot under the period-2 quotient: p/q -> p/(2q).
/// Rejects infinity.
ExtendedSlope quotient_slope(const ExtendedSlope& r);

/// Moser's classification of m/k surgery on the (p,q) torus knot.
struct TorusSurgeryResult {
    enum class Kind { SeifertThreeFiber, Lens, Reducible };
    Kind kind;
    SeifertInvariants sfs;              // 3-fiber case; |h1| = |m|
    SfsType type{{2, 2, 2}};            // 3-fiber case: {|p|, |q|, |m - pqk|}
    long long lens_order = 0;           // lens case: |m|
    std::array<long long, 2> summands{};  // reducible case: {|p|, |q|}
};

TorusSurgeryResult torus_knot_surgery(long long p, long long q, const ExtendedSlope& r);

}  // namespace topo
