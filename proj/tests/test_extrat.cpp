#include "anderson/extrat.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace anderson;

TEST_CASE("addition is exact and infinity absorbs") {
    CHECK(er_add(ExtRat(1, 3), ExtRat(1, 6)) == ExtRat(1, 2));
    CHECK(er_add(ExtRat(7), ExtRat::infinity()) == ExtRat::infinity());
    CHECK(er_add(ExtRat::infinity(), ExtRat::infinity()) == ExtRat::infinity());
    CHECK(er_add(ExtRat(-5), ExtRat(5)) == ExtRat(0));
}

TEST_CASE("min returns the tie flag") {
    auto [m1, t1] = er_min(ExtRat(1, 2), ExtRat(1, 3));
    CHECK(m1 == ExtRat(1, 3));
    CHECK_FALSE(t1);

    auto [m2, t2] = er_min(ExtRat(2), ExtRat(2));
    CHECK(m2 == ExtRat(2));
    CHECK(t2);

    auto [m3, t3] = er_min(ExtRat(7), ExtRat::infinity());
    CHECK(m3 == ExtRat(7));
    CHECK_FALSE(t3);

    auto [m4, t4] = er_min(ExtRat::infinity(), ExtRat::infinity());
    CHECK(m4 == ExtRat::infinity());
    CHECK(t4);
}

TEST_CASE("scaling") {
    CHECK(er_scale(ExtRat(1, 3), 4) == ExtRat(4, 3));
    CHECK(er_scale(ExtRat::infinity(), 16) == ExtRat::infinity());
    CHECK(er_scale(ExtRat(-5, 6), -1) == ExtRat(5, 6));
    CHECK(er_scale(ExtRat(5), 0) == ExtRat(0));
    CHECK_THROWS_AS(er_scale(ExtRat::infinity(), 0), std::domain_error);
}

TEST_CASE("total order puts every finite value below infinity") {
    CHECK(ExtRat(1000000) < ExtRat::infinity());
    CHECK(ExtRat(-3, 7) < ExtRat(1, 2));
    CHECK(ExtRat::infinity() <= ExtRat::infinity());
    CHECK(ExtRat(1, 2) == ExtRat(2, 4));
}

TEST_CASE("no overflow: repeated q^4 scaling stays exact") {
    ExtRat x(3, 7);
    for (int i = 0; i < 200; ++i) x = er_scale(x, 16);
    ExtRat y(3, 7);
    Rat p = 1;
    for (int i = 0; i < 200; ++i) p *= 16;
    CHECK(x == y.scale(p));
    CHECK(x.value() > 0);
}

TEST_CASE("algebraic properties on random triples") {
    oracle::Rng rng(0xE57A7u);
    for (int i = 0; i < 500; ++i) {
        auto draw = [&]() -> ExtRat {
            if (rng.ll(0, 9) == 0) return ExtRat::infinity();
            return ExtRat(rng.rat(1000, 60));
        };
        ExtRat a = draw(), b = draw(), c = draw();
        CHECK(er_add(a, b) == er_add(b, a));
        CHECK(er_add(er_add(a, b), c) == er_add(a, er_add(b, c)));
        CHECK(er_min(a, b).first == er_min(b, a).first);
        CHECK(er_min(er_min(a, b).first, c).first == er_min(a, er_min(b, c).first).first);

        auto [m, tie] = er_min(a, b);
        CHECK(m <= a);
        CHECK(m <= b);
        CHECK(tie == (a == b));
    }
}

TEST_CASE("textual round-trip") {
    oracle::Rng rng(0x0DDBA11u);
    for (int i = 0; i < 500; ++i) {
        ExtRat x = rng.ll(0, 9) == 0 ? ExtRat::infinity() : ExtRat(rng.rat(100000, 997));
        CHECK(parse_extrat(x.str()) == x);
    }
    CHECK(parse_extrat("inf") == ExtRat::infinity());
    CHECK(parse_extrat("-3/4") == ExtRat(-3, 4));
    CHECK(parse_extrat("42") == ExtRat(42));
    CHECK(ExtRat(2, 4).str() == "1/2");  // canonical form
    CHECK_THROWS(parse_extrat("1/0"));
    CHECK_THROWS(parse_extrat("-inf"));
    CHECK_THROWS(parse_extrat("x"));
    CHECK_THROWS(parse_extrat(""));
}
