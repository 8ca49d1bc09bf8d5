#include "topo/surgery.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "topo/parse_util.hpp"

namespace topo {

SurgeryLink::SurgeryLink(std::vector<ExtendedSlope> s, std::vector<std::vector<long long>> l)
    : slopes(std::move(s)), lk(std::move(l)) {
    const std::size_t k = slopes.size();
    if (k == 0) throw std::invalid_argument("SurgeryLink: no components");
    if (lk.size() != k) throw std::invalid_argument("SurgeryLink: linking matrix size");
    for (std::size_t i = 0; i < k; ++i) {
        if (lk[i].size() != k)
            throw std::invalid_argument("SurgeryLink: linking matrix not square");
        for (std::size_t j = 0; j < k; ++j)
            if (i != j && lk[i][j] != lk[j][i])
                throw std::invalid_argument("SurgeryLink: linking matrix not symmetric");
    }
}

AbelianGroup h1_of_surgery(const SurgeryLink& l) {
    const std::size_t k = l.components();
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        m(i, i) = l.slopes[i].num();
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) m(i, j) = l.slopes[i].den() * l.lk[i][j];
    }
    return smith_normal_form(m).cokernel;
}

ExtendedSlope rolfsen_twist_slope(const ExtendedSlope& r, long long n, long long l) {
    if (r.is_infinite()) return r;
    return r + ExtendedSlope(n * l * l);
}

ExtendedSlope quotient_slope(const ExtendedSlope& r) {
    if (r.is_infinite())
        throw std::domain_error("quotient_slope: meridional slope has no quotient");
    return ExtendedSlope(r.num(), 2 * r.den());
}

namespace {

// Normalized Seifert data (b; (a1,b1),(a2,b2),(a3,b3)) over S^2 with
// |H1| = |m|: solve b*A + sum beta_i * A/alpha_i = +-m exhaustively,
// smallest (beta1, beta2, beta3) first.
SeifertInvariants moser_seifert_data(long long a1, long long a2, long long a3,
                                     long long m) {
    const long long big = a1 * a2 * a3;
    for (long long b1 = 1; b1 < a1; ++b1) {
        if (std::gcd(b1, a1) != 1) continue;
        for (long long b2 = 1; b2 < a2; ++b2) {
            if (std::gcd(b2, a2) != 1) continue;
            for (long long b3 = 1; b3 < a3; ++b3) {
                if (std::gcd(b3, a3) != 1) continue;
                long long partial = b1 * a2 * a3 + b2 * a1 * a3 + b3 * a1 * a2;
                for (long long sign : {1LL, -1LL}) {
                    long long rem = sign * m - partial;
                    if (rem % big == 0)
                        return SeifertInvariants(rem / big, {{a1, b1}, {a2, b2}, {a3, b3}});
                }
            }
        }
    }
    throw std::logic_error("moser_seifert_data: no normalized invariants found");
}

}  // namespace

TorusSurgeryResult torus_knot_surgery(long long p, long long q, const ExtendedSlope& r) {
    if (std::llabs(p) < 2 || std::llabs(q) < 2)
        throw std::invalid_argument("torus_knot_surgery: trivial torus knot");
    if (std::gcd(std::llabs(p), std::llabs(q)) != 1)
        throw std::invalid_argument("torus_knot_surgery: p, q must be coprime");
    if (r.is_infinite())
        throw std::invalid_argument("torus_knot_surgery: meridional slope gives S^3 back");

    const long long m = r.num(), k = r.den();
    const long long third = std::llabs(m - p * q * k);

    TorusSurgeryResult out;
    if (third == 0) {
        out.kind = TorusSurgeryResult::Kind::Reducible;
        out.summands = {std::llabs(p), std::llabs(q)};
    } else if (third == 1) {
        out.kind = TorusSurgeryResult::Kind::Lens;
        out.lens_order = std::llabs(m);
    } else {
        out.kind = TorusSurgeryResult::Kind::SeifertThreeFiber;
        out.type = SfsType({std::llabs(p), std::llabs(q), third});
        out.sfs = moser_seifert_data(std::llabs(p), std::llabs(q), third, m);
    }
    return out;
}

SurgeryLink SurgeryLink::parse(std::string_view sv) {
    detail::Cursor c(sv);
    c.expect("L");
    c.expect("{");
    c.expect("lk");
    c.expect("=");
    c.expect("[");
    std::vector<std::vector<long long>> lk;
    for (;;) {
        c.expect("[");
        std::vector<long long> row;
        if (!c.peek(']')) {
            for (;;) {
                row.push_back(c.integer());
                if (!c.peek(',')) break;
                c.expect(",");
            }
        }
        c.expect("]");
        lk.push_back(std::move(row));
        if (!c.peek(',')) break;
        c.expect(",");
    }
    c.expect("]");
    c.expect(",");
    c.expect("slopes");
    c.expect("=");
    c.expect("[");
    std::vector<ExtendedSlope> slopes;
    for (;;) {
        if (c.peek('i')) {
            c.expect("inf");
            slopes.push_back(ExtendedSlope::infinity());
        } else {
            long long num = c.integer();
            long long den = 1;
            if (c.peek('/')) {
                c.expect("/");
                den = c.integer();
            }
            slopes.emplace_back(num, den);
        }
        if (!c.peek(',')) break;
        c.expect(",");
    }
    c.expect("]");
    c.expect("}");
    c.end();
    return SurgeryLink(std::move(slopes), std::move(lk));
}

}  // namespace topo
