#include "topo/rational.hpp"

#include "topo/parse_util.hpp"

namespace topo {

ExtendedSlope ExtendedSlope::parse(std::string_view s) {
    detail::Cursor c(s);
    if (c.peek('i')) {
        c.expect("inf");
        c.end();
        return infinity();
    }
    long long p = c.integer();
    if (c.peek('/')) {
        c.expect("/");
        long long q = c.integer();
        c.end();
        return ExtendedSlope(p, q);
    }
    c.end();
    return ExtendedSlope(p);
}

}  // namespace topo
