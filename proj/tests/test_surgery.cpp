#include <doctest.h>

#include <numeric>
#include <random>

#include "topo/surgery.hpp"

using namespace topo;

TEST_CASE("h1_of_surgery examples") {
    SUBCASE("5-surgery on the unknot") {
        SurgeryLink l({ExtendedSlope(5)}, {{0}});
        CHECK(h1_of_surgery(l).order() == 5);
    }
    SUBCASE("K u t1 with zero linking, slopes 1 and -1/n") {
        for (long long n = -50; n <= 50; ++n) {
            SurgeryLink l({ExtendedSlope(1), ExtendedSlope(-1, n)}, {{0, 0}, {0, 0}});
            CHECK(h1_of_surgery(l).trivial());
        }
    }
    SUBCASE("0,0 surgery on the Hopf link") {
        SurgeryLink l({ExtendedSlope(0), ExtendedSlope(0)}, {{0, 1}, {1, 0}});
        CHECK(h1_of_surgery(l).trivial());
    }
    SUBCASE("invariant under component permutation") {
        SurgeryLink a({ExtendedSlope(3, 2), ExtendedSlope(5)}, {{0, 2}, {2, 0}});
        SurgeryLink b({ExtendedSlope(5), ExtendedSlope(3, 2)}, {{0, 2}, {2, 0}});
        CHECK(h1_of_surgery(a) == h1_of_surgery(b));
    }
}

TEST_CASE("rolfsen_twist_slope") {
    CHECK(rolfsen_twist_slope(ExtendedSlope(1), 7, 0) == ExtendedSlope(1));
    CHECK(rolfsen_twist_slope(ExtendedSlope(0), 1, 1) == ExtendedSlope(1));
    CHECK(rolfsen_twist_slope(ExtendedSlope::infinity(), 3, 2).is_infinite());
    CHECK(rolfsen_twist_slope(ExtendedSlope(3, 2), 2, 3) == ExtendedSlope(39, 2));
}

TEST_CASE("rolfsen twist agrees with blowing down the twist circle") {
    // Knot with slope r linking a -1/n-framed unknot l times, versus the
    // single twisted knot: first homology orders must agree.
    std::mt19937 rng(555);
    std::uniform_int_distribution<long long> pd(-12, 12), qd(1, 12), nd(-4, 4), ld(0, 4);
    for (int trial = 0; trial < 500; ++trial) {
        long long p = pd(rng), q = qd(rng), n = nd(rng), l = ld(rng);
        if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
        ExtendedSlope r(p, q);
        SurgeryLink two({r, ExtendedSlope(-1, n)}, {{0, l}, {l, 0}});
        ExtendedSlope twisted = rolfsen_twist_slope(r, n, l);
        SurgeryLink one({twisted}, {{0}});
        CHECK(h1_of_surgery(two).order() == h1_of_surgery(one).order());
    }
}

TEST_CASE("quotient_slope") {
    CHECK(quotient_slope(ExtendedSlope(1)) == ExtendedSlope(1, 2));
    CHECK(quotient_slope(ExtendedSlope(0)) == ExtendedSlope(0));
    CHECK(quotient_slope(ExtendedSlope(3, 2)) == ExtendedSlope(3, 4));
    CHECK_THROWS_AS(quotient_slope(ExtendedSlope::infinity()), std::domain_error);
}

TEST_CASE("torus_knot_surgery") {
    SUBCASE("(T(2,3); 1) is S2(2,3,5)") {
        auto r = torus_knot_surgery(2, 3, ExtendedSlope(1));
        REQUIRE(r.kind == TorusSurgeryResult::Kind::SeifertThreeFiber);
        CHECK(r.type == SfsType({2, 3, 5}));
    }
    SUBCASE("(T(-2,3); 1) is S2(2,3,7)") {
        auto r = torus_knot_surgery(-2, 3, ExtendedSlope(1));
        REQUIRE(r.kind == TorusSurgeryResult::Kind::SeifertThreeFiber);
        CHECK(r.type == SfsType({2, 3, 7}));
    }
    SUBCASE("pq-surgery is reducible") {
        auto r = torus_knot_surgery(2, 3, ExtendedSlope(6));
        REQUIRE(r.kind == TorusSurgeryResult::Kind::Reducible);
        CHECK(r.summands == std::array<long long, 2>{2, 3});
    }
    SUBCASE("|m - pqk| = 1 gives a lens space") {
        auto r = torus_knot_surgery(2, 3, ExtendedSlope(5));
        REQUIRE(r.kind == TorusSurgeryResult::Kind::Lens);
        CHECK(r.lens_order == 5);
    }
    SUBCASE("trivial torus knots rejected") {
        CHECK_THROWS(torus_knot_surgery(1, 3, ExtendedSlope(1)));
        CHECK_THROWS(torus_knot_surgery(2, 4, ExtendedSlope(1)));
        CHECK_THROWS(torus_knot_surgery(2, 3, ExtendedSlope::infinity()));
    }
}

TEST_CASE("Seifert data of a torus-knot surgery has |h1| = |m|") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long long> md(-20, 20), kd(1, 5);
    const std::pair<long long, long long> knots[] = {{2, 3}, {-2, 3}, {2, 5}, {3, 5}, {3, -4}};
    for (auto [p, q] : knots) {
        for (int trial = 0; trial < 60; ++trial) {
            long long m = md(rng), k = kd(rng);
            if (std::gcd(m < 0 ? -m : m, k) != 1) continue;
            ExtendedSlope r(m, k);
            auto res = torus_knot_surgery(p, q, r);
            if (res.kind != TorusSurgeryResult::Kind::SeifertThreeFiber) continue;
            AbelianGroup g = h1(res.sfs);
            if (m == 0)
                CHECK(g.free_rank == 1);
            else
                CHECK(g.order() == (m < 0 ? -m : m));
            CHECK(type_of(res.sfs) == res.type);
        }
    }
}

TEST_CASE("parser") {
    SurgeryLink l = SurgeryLink::parse("L{ lk=[[0,1],[1,0]], slopes=[1/1, -1/2] }");
    CHECK(l.components() == 2);
    CHECK(l.slopes[1] == ExtendedSlope(-1, 2));
    CHECK(l.lk[0][1] == 1);
    SurgeryLink m = SurgeryLink::parse("L{lk=[[0]],slopes=[inf]}");
    CHECK(m.slopes[0].is_infinite());
    CHECK_THROWS(SurgeryLink::parse("L{ lk=[[0,1],[2,0]], slopes=[1, 1] }"));  // asymmetric
    CHECK_THROWS(SurgeryLink::parse("L{ lk=[[0]], slopes=[1, 2] }"));          // size mismatch
}
