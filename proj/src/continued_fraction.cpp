#include "topo/continued_fraction.hpp"

#include <stdexcept>

namespace topo {

ExtendedSlope cf_fold(const std::vector<long long>& seq) {
    if (seq.empty()) throw std::invalid_argument("cf_fold: empty sequence");
    ExtendedSlope v(seq.back());
    for (auto it = seq.rbegin() + 1; it != seq.rend(); ++it) {
        // a + 1/v, with 1/0 = inf and a + inf = inf handled projectively:
        // (a*num + den) / num when v = num/den reciprocated.
        ExtendedSlope rec = v.reciprocal();
        if (rec.is_infinite())
            v = ExtendedSlope::infinity();
        else
            v = ExtendedSlope(*it) + rec;
    }
    return v;
}

std::vector<long long> cf_expand(const ExtendedSlope& r) {
    if (r.is_infinite()) throw std::domain_error("cf_expand: infinite slope");
    std::vector<long long> out;
    long long p = r.num(), q = r.den();
    for (;;) {
        long long a = p / q;
        if (p % q != 0 && p < 0) --a;  // floor
        out.push_back(a);
        long long rem = p - a * q;  // in [0, q)
        if (rem == 0) break;
        p = q;
        q = rem;
    }
    return out;
}

}  // namespace topo
