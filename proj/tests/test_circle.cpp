#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgds/circle_set.hpp"

using namespace sgds;

TEST_CASE("turn normalization and arithmetic") {
    CHECK(Turn(3, 6) == Turn(1, 2));
    CHECK(Turn(-1, 4) == Turn(3, 4));
    CHECK(Turn(5, 4) == Turn(1, 4));
    CHECK(Turn(1, 3) + Turn(1, 3) == Turn(2, 3));
    CHECK(Turn(1, 4) - Turn(1, 2) == Turn(3, 4));
    CHECK(Turn(1, 6) < Turn(1, 3));
    CHECK_THROWS(Turn(1, 0));
    CHECK(Turn::parse("2/6") == Turn(1, 3));
    CHECK(Turn::parse("1") == Turn(0, 1));
    CHECK_THROWS(Turn::parse("0.5"));
    CHECK(Turn(1, 4).str() == "1/4");
}

TEST_CASE("union merges overlapping arcs") {
    CircleSet a = CircleSet::arc(Turn(0, 1), Turn(1, 4));
    CircleSet b = CircleSet::arc(Turn(1, 8), Turn(3, 8));
    CircleSet u = set_union(a, b);
    CHECK(u == CircleSet::arc(Turn(0, 1), Turn(3, 8)));
    REQUIRE(u.arcs().size() == 1);
    CHECK(u.points().empty());
}

TEST_CASE("intersect with full is the identity") {
    CircleSet s = CircleSet::finite({Turn(1, 3)}, {Arc{Turn(1, 2), Turn(2, 3)}});
    CHECK(set_intersect(CircleSet::full(), s) == s);
    CHECK(set_intersect(s, CircleSet::empty()) == CircleSet::empty());
}

TEST_CASE("containment of points") {
    CircleSet s = CircleSet::finite({Turn(1, 3), Turn(2, 3)}, {});
    CHECK_FALSE(s.contains(Turn(1, 2)));
    CHECK(s.contains(Turn(1, 3)));
    CHECK(CircleSet::arc(Turn(3, 4), Turn(1, 4)).contains(Turn(0, 1)));  // wraps
}

TEST_CASE("rotation") {
    CHECK(CircleSet::point(Turn(1, 3)).rotate(Turn(1, 3)) ==
          CircleSet::point(Turn(2, 3)));
    CHECK(CircleSet::full().rotate(Turn(1, 7)) == CircleSet::full());

    CircleSet wrap = CircleSet::arc(Turn(3, 4), Turn(1, 4));
    CircleSet rot = wrap.rotate(Turn(1, 2));
    CHECK(rot == CircleSet::arc(Turn(1, 4), Turn(3, 4)));
    // membership sampling at twelfths
    for (int k = 0; k < 12; ++k) {
        Turn t(k, 12);
        CHECK(rot.contains(t) == wrap.contains(t - Turn(1, 2)));
    }
}

TEST_CASE("rotate round trip") {
    CircleSet s = CircleSet::finite({Turn(0, 1)}, {Arc{Turn(2, 5), Turn(4, 5)}});
    for (const Turn& t : {Turn(1, 3), Turn(5, 7), Turn(11, 12)})
        CHECK(s.rotate(t).rotate(Turn(0, 1) - t) == s);
}

TEST_CASE("rotation invariance") {
    CHECK(CircleSet::finite({Turn(0, 1), Turn(1, 3), Turn(2, 3)}, {})
              .is_rotation_invariant(3));
    CHECK_FALSE(CircleSet::finite({Turn(0, 1), Turn(1, 3)}, {}).is_rotation_invariant(3));
    CHECK(CircleSet::full().is_rotation_invariant(5));
}

TEST_CASE("zeta saturation") {
    CircleSet s = CircleSet::point(Turn(1, 6)).zeta_saturate(3);
    CHECK(s == CircleSet::finite({Turn(1, 6), Turn(1, 2), Turn(5, 6)}, {}));
    CHECK(CircleSet::full().zeta_saturate(4) == CircleSet::full());
    CHECK(CircleSet::empty().zeta_saturate(4) == CircleSet::empty());
}

TEST_CASE("zeta_saturate is idempotent, monotone, and invariant") {
    std::vector<CircleSet> samples{
        CircleSet::point(Turn(1, 6)),
        CircleSet::arc(Turn(0, 1), Turn(1, 8)),
        CircleSet::finite({Turn(1, 2)}, {Arc{Turn(2, 3), Turn(3, 4)}}),
    };
    for (const auto& s : samples)
        for (int p : {2, 3, 4}) {
            CircleSet sat = s.zeta_saturate(p);
            CHECK(sat.zeta_saturate(p) == sat);
            CHECK(set_subset(s, sat));
            CHECK(sat.is_rotation_invariant(p));
        }
}

TEST_CASE("lattice laws") {
    std::vector<CircleSet> samples{
        CircleSet::empty(),
        CircleSet::full(),
        CircleSet::point(Turn(1, 3)),
        CircleSet::arc(Turn(0, 1), Turn(1, 4)),
        CircleSet::arc(Turn(3, 4), Turn(1, 8)),
        CircleSet::finite({Turn(1, 2)}, {Arc{Turn(1, 8), Turn(1, 4)}}),
    };
    for (const auto& a : samples)
        for (const auto& b : samples) {
            CHECK(set_union(a, b) == set_union(b, a));
            CHECK(set_intersect(a, b) == set_intersect(b, a));
            CHECK(set_union(a, a) == a);
            CHECK(set_intersect(a, a) == a);
            CHECK(set_subset(set_intersect(a, b), a));
            CHECK(set_subset(a, set_union(a, b)));
            for (const auto& c : samples) {
                CHECK(set_union(set_union(a, b), c) == set_union(a, set_union(b, c)));
                CHECK(set_intersect(set_intersect(a, b), c) ==
                      set_intersect(a, set_intersect(b, c)));
            }
        }
}

TEST_CASE("canonicalization") {
    // adjacent arcs merge
    CircleSet s = CircleSet::finite(
        {}, {Arc{Turn(0, 1), Turn(1, 4)}, Arc{Turn(1, 4), Turn(1, 2)}});
    CHECK(s == CircleSet::arc(Turn(0, 1), Turn(1, 2)));
    // a point on an arc is absorbed
    s = CircleSet::finite({Turn(1, 8)}, {Arc{Turn(0, 1), Turn(1, 4)}});
    CHECK(s == CircleSet::arc(Turn(0, 1), Turn(1, 4)));
    // arcs covering the whole circle normalize to Full
    s = CircleSet::finite({}, {Arc{Turn(0, 1), Turn(1, 2)}, Arc{Turn(1, 2), Turn(0, 1)}});
    CHECK(s.is_full());
    // duplicate points collapse
    s = CircleSet::finite({Turn(1, 3), Turn(2, 6)}, {});
    CHECK(s == CircleSet::point(Turn(1, 3)));
}

TEST_CASE("text round trips") {
    std::vector<CircleSet> samples{
        CircleSet::empty(),
        CircleSet::full(),
        CircleSet::finite({Turn(1, 3), Turn(2, 3)}, {}),
        CircleSet::arc(Turn(0, 1), Turn(1, 4)),
        CircleSet::finite({Turn(1, 2)}, {Arc{Turn(1, 8), Turn(1, 4)}}),
    };
    for (const auto& s : samples) CHECK(CircleSet::parse(s.str()) == s);
    CHECK(CircleSet::parse("points 1/3 2/3") ==
          CircleSet::finite({Turn(1, 3), Turn(2, 3)}, {}));
    CHECK(CircleSet::parse("arcs 0/1 1/4 , 1/2 3/4").arcs().size() == 2);
    CHECK_THROWS(CircleSet::parse("points"));
    CHECK_THROWS(CircleSet::parse("arcs 1/2"));
    CHECK_THROWS(CircleSet::parse("bogus"));
}
