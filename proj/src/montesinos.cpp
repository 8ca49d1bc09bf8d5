#include "topo/montesinos.hpp"

#include <algorithm>
#include <stdexcept>

#include "topo/parse_util.hpp"

namespace topo {

MontesinosLink::MontesinosLink(long long e0, std::vector<ExtendedSlope> t)
    : integer_part(e0), tangles(std::move(t)) {
    for (const auto& f : tangles)
        if (f.is_infinite())
            throw std::invalid_argument("MontesinosLink: infinite tangle fraction");
}

std::string MontesinosLink::str() const {
    std::string s = "M(" + std::to_string(integer_part);
    if (!tangles.empty()) {
        s += "; ";
        for (std::size_t i = 0; i < tangles.size(); ++i) {
            if (i) s += ", ";
            s += tangles[i].str();
        }
    }
    return s + ")";
}

MontesinosLink MontesinosLink::parse(std::string_view sv) {
    detail::Cursor c(sv);
    c.expect("M");
    c.expect("(");
    long long e0 = c.integer();
    std::vector<ExtendedSlope> tangles;
    if (c.peek(';')) {
        c.expect(";");
        for (;;) {
            long long num = c.integer();
            long long den = 1;
            if (c.peek('/')) {
                c.expect("/");
                den = c.integer();
            }
            tangles.emplace_back(num, den);
            if (!c.peek(',')) break;
            c.expect(",");
        }
    }
    c.expect(")");
    c.end();
    return MontesinosLink(e0, std::move(tangles));
}

MontesinosLink normalize(const MontesinosLink& m) {
    long long e0 = m.integer_part;
    std::vector<ExtendedSlope> out;
    for (const auto& f : m.tangles) {
        if (f.den() <= 1)
            throw std::invalid_argument(
                "normalize: degenerate tangle " + f.str() + " (alpha <= 1)");
        long long q = f.floor();
        e0 += q;
        out.push_back(f - ExtendedSlope(q));  // now in (0, 1)
    }
    std::sort(out.begin(), out.end());
    MontesinosLink n;
    n.integer_part = e0;
    n.tangles = std::move(out);
    return n;
}

long long determinant(const MontesinosLink& m) {
    ExtendedSlope total(m.integer_part);
    long long prod = 1;
    for (const auto& f : m.tangles) {
        total = total + f;
        prod *= f.den();
    }
    long long d = prod * total.num() / total.den();  // den divides prod
    return d < 0 ? -d : d;
}

SeifertInvariants double_branched_cover(const MontesinosLink& m) {
    if (m.tangles.size() <= 2)
        throw std::domain_error(
            "double_branched_cover: <= 2 tangles degenerates to a lens space; "
            "out of classification scope");
    for (const auto& f : m.tangles)
        if (f.den() < 2)
            throw std::domain_error("double_branched_cover: tangle " + f.str() +
                                    " has alpha < 2");
    std::vector<std::pair<long long, long long>> fibers;
    for (const auto& f : m.tangles) fibers.emplace_back(f.den(), f.num());
    return SeifertInvariants(m.integer_part, std::move(fibers));
}

namespace {

MontesinosLink mirror(const MontesinosLink& m) {
    MontesinosLink out;
    out.integer_part = -m.integer_part;
    for (const auto& f : m.tangles) out.tangles.push_back(-f);
    return out;
}

}  // namespace

bool equivalent(const MontesinosLink& m1, const MontesinosLink& m2, bool allow_mirror) {
    if (m1.tangles.size() < 3 || m2.tangles.size() < 3)
        throw std::domain_error("equivalent: needs >= 3 tangles on both sides");
    // Fast path: determinant mismatch forces false.
    if (determinant(m1) != determinant(m2)) return false;
    MontesinosLink n1 = normalize(m1), n2 = normalize(m2);
    if (n1 == n2) return true;
    return allow_mirror && normalize(mirror(n1)) == n2;
}

}  // namespace topo
