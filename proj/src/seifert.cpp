#include "topo/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "topo/parse_util.hpp"

namespace topo {

SfsType::SfsType(std::vector<long long> idx) : indices(std::move(idx)) {
    for (long long n : indices)
        if (n < 2) throw std::invalid_argument("SfsType: indices must be >= 2");
    std::sort(indices.begin(), indices.end());
}

std::string SfsType::str() const {
    std::string s = "S2(";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(indices[i]);
    }
    return s + ")";
}

SeifertInvariants::SeifertInvariants(long long b_,
                                     std::vector<std::pair<long long, long long>> f)
    : b(b_), fibers(std::move(f)) {
    for (auto& [alpha, beta] : fibers) {
        if (alpha < 1) throw std::invalid_argument("Seifert fiber needs alpha >= 1");
        if (std::gcd(alpha, beta < 0 ? -beta : beta) != 1 && !(beta == 0 && alpha == 1))
            throw std::invalid_argument("Seifert fiber needs gcd(alpha, beta) = 1");
    }
}

std::string SeifertInvariants::str() const {
    std::string s = "SFS(" + std::to_string(b);
    if (!fibers.empty()) {
        s += "; ";
        for (std::size_t i = 0; i < fibers.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(fibers[i].first) + "/" + std::to_string(fibers[i].second);
        }
    }
    return s + ")";
}

SeifertInvariants normalize(const SeifertInvariants& s) {
    long long b = s.b;
    std::vector<std::pair<long long, long long>> out;
    for (auto [alpha, beta] : s.fibers) {
        // floor-divide beta by alpha, push the integer part into b
        long long q = beta / alpha;
        if (beta % alpha != 0 && beta < 0) --q;
        long long r = beta - q * alpha;  // in [0, alpha)
        b += q;
        if (alpha == 1 || r == 0) continue;  // absorbed entirely
        out.emplace_back(alpha, r);
    }
    std::sort(out.begin(), out.end());
    SeifertInvariants n;
    n.b = b;
    n.fibers = std::move(out);
    return n;
}

ExtendedSlope euler_number(const SeifertInvariants& s) {
    ExtendedSlope sum(s.b);
    for (auto [alpha, beta] : s.fibers) sum = sum + ExtendedSlope(beta, alpha);
    return -sum;
}

AbelianGroup h1(const SeifertInvariants& s) {
    const std::size_t k = s.fibers.size();
    IntMatrix m(k + 1, k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        m(i, i) = s.fibers[i].first;
        m(i, k) = s.fibers[i].second;
    }
    for (std::size_t j = 0; j < k; ++j) m(k, j) = 1;
    m(k, k) = -s.b;  // relator x1...xk h^{-b}
    return smith_normal_form(m).cokernel;
}

namespace {

SeifertInvariants orientation_flip(const SeifertInvariants& n) {
    SeifertInvariants f;
    f.b = -n.b - static_cast<long long>(n.fibers.size());
    for (auto [alpha, beta] : n.fibers) f.fibers.emplace_back(alpha, alpha - beta);
    std::sort(f.fibers.begin(), f.fibers.end());
    return f;
}

}  // namespace

bool same_sfs(const SeifertInvariants& s1, const SeifertInvariants& s2) {
    SeifertInvariants n1 = normalize(s1), n2 = normalize(s2);
    if (n1.fibers.size() < 3 || n2.fibers.size() < 3)
        throw std::domain_error(
            "same_sfs: <= 2 exceptional fibers (lens space) is out of "
            "classification scope");
    return n1 == n2 || orientation_flip(n1) == n2;
}

SfsType type_of(const SeifertInvariants& s) {
    SeifertInvariants n = normalize(s);
    if (n.fibers.size() != 3)
        throw std::domain_error("type_of: need exactly 3 exceptional fibers, got " +
                                std::to_string(n.fibers.size()));
    return SfsType({n.fibers[0].first, n.fibers[1].first, n.fibers[2].first});
}

SeifertInvariants SeifertInvariants::parse(std::string_view sv) {
    detail::Cursor c(sv);
    c.expect("SFS");
    c.expect("(");
    long long b = c.integer();
    std::vector<std::pair<long long, long long>> fibers;
    if (c.peek(';')) {
        c.expect(";");
        for (;;) {
            long long alpha = c.integer();
            c.expect("/");
            long long beta = c.integer();
            fibers.emplace_back(alpha, beta);
            if (!c.peek(',')) break;
            c.expect(",");
        }
    }
    c.expect(")");
    c.end();
    return SeifertInvariants(b, std::move(fibers));
}

}  // namespace topo
