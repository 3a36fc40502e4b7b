#include "cst/errors.hpp"
#include "cst/geometry.hpp"
#include "cst/rng.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cst;
using testing::pt;
using testing::q;

TEST_SUITE("geometry") {

TEST_CASE("rationals are canonical") {
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    CHECK(make_rat(3, -6).get_den() == 2);
    CHECK(to_string(make_rat(-3, 6)) == "-1/2");
    CHECK(to_string(make_rat(4, 2)) == "2");
    CHECK(frac(make_rat(-1, 4)) == make_rat(3, 4));
    CHECK(frac(make_rat(7, 4)) == make_rat(3, 4));
    CHECK(floor_rat(make_rat(-1, 3)) == -1);
    CHECK(rat_from_strings("10", "-4") == make_rat(-5, 2));
}

TEST_CASE("orientation signs") {
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
    CHECK(orientation(pt(0, 0), pt(1, 1), pt(3, 3)) == 0);
}

TEST_CASE("segment crossing classification") {
    SUBCASE("diagonals cross at the center") {
        const CrossKind k = segment_proper_crossing({pt(0, 0), pt(1, 1)}, {pt(0, 1), pt(1, 0)});
        REQUIRE(k.is_proper());
        CHECK(std::get<Point>(k.where) == pt(q(1, 2), q(1, 2)));
    }
    SUBCASE("parallel disjoint") {
        CHECK(segment_proper_crossing({pt(0, 0), pt(1, 0)}, {pt(0, 1), pt(1, 1)}).kind == CrossKind::Kind::None);
    }
    SUBCASE("shared endpoint") {
        const CrossKind k = segment_proper_crossing({pt(0, 0), pt(1, 0)}, {pt(1, 0), pt(2, 0)});
        CHECK(k.is_degenerate());
        CHECK(k.reason == DegenerateReason::SharedEndpoint);
    }
    SUBCASE("endpoint touching the interior") {
        const CrossKind k = segment_proper_crossing({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(1, 5)});
        CHECK(k.is_degenerate());
        CHECK(k.reason == DegenerateReason::Touch);
    }
    SUBCASE("collinear overlap") {
        const CrossKind k = segment_proper_crossing({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(3, 0)});
        CHECK(k.is_degenerate());
        CHECK(k.reason == DegenerateReason::Overlap);
    }
    SUBCASE("collinear apart") {
        CHECK(segment_proper_crossing({pt(0, 0), pt(1, 0)}, {pt(2, 0), pt(3, 0)}).kind == CrossKind::Kind::None);
    }
}

TEST_CASE("polyline crossings") {
    SUBCASE("square diagonals") {
        const auto ks = polyline_crossings({{pt(0, 0), pt(1, 1)}}, {{pt(1, 0), pt(0, 1)}});
        REQUIRE(ks.size() == 1);
        CHECK(ks[0].is_proper());
    }
    SUBCASE("common endpoint only") {
        const auto ks = polyline_crossings({{pt(0, 0), pt(1, 2), pt(2, 0)}}, {{pt(2, 0), pt(3, 1), pt(4, 0)}});
        REQUIRE(ks.size() == 1);
        CHECK(ks[0].reason == DegenerateReason::SharedEndpoint);
    }
    SUBCASE("crossing point matches the line-intersection oracle") {
        const Point a = pt(0, 0), b = pt(3, 0), c = pt(1, 1), d = pt(2, -1);
        // Cramer's rule on a + t (b - a) = c + s (d - c).
        const Rat den = (b.x - a.x) * (c.y - d.y) - (b.y - a.y) * (c.x - d.x);
        const Rat t = ((c.x - a.x) * (c.y - d.y) - (c.y - a.y) * (c.x - d.x)) / den;
        const Point expect{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        const auto ks = polyline_crossings({{a, b}}, {{c, d}});
        REQUIRE(ks.size() == 1);
        CHECK(ks[0].is_proper());
        CHECK(std::get<Point>(ks[0].where) == expect);
        CHECK(expect == pt(q(3, 2), q(0)));
    }
    SUBCASE("contact at an interior waypoint is a breakpoint") {
        const auto ks = polyline_crossings({{pt(0, 0), pt(1, 1), pt(2, 0)}}, {{pt(0, 2), pt(1, 1), pt(2, 2)}});
        REQUIRE(!ks.empty());
        CHECK(ks[0].reason == DegenerateReason::Breakpoint);
    }
    SUBCASE("two crossings") {
        const auto ks = polyline_crossings({{pt(0, 0), pt(1, 2), pt(2, 0)}}, {{pt(-1, 1), pt(3, 1)}});
        CHECK(ks.size() == 2);
    }
}

TEST_CASE("polar crossings") {
    SUBCASE("no angular overlap") {
        const PolarCurve c1{{{q(0), q(2)}, {q(1, 3), q(2)}}};
        const PolarCurve c2{{{q(1, 2), q(2)}, {q(5, 6), q(2)}}};
        CHECK(polar_crossings(c1, c2).empty());
    }
    SUBCASE("symmetric linear profiles") {
        const PolarCurve c1{{{q(0), q(1)}, {q(1, 2), q(3)}}};
        const PolarCurve c2{{{q(0), q(3)}, {q(1, 2), q(1)}}};
        const auto ks = polar_crossings(c1, c2);
        REQUIRE(ks.size() == 1);
        CHECK(ks[0].is_proper());
        CHECK(std::get<PolarPoint>(ks[0].where) == PolarPoint{q(1, 4), q(2)});
    }
    SUBCASE("a start on the other curve is a touch") {
        // r = 2 on [0, 1/2] against a two-piece profile starting at radius 2.
        const PolarCurve c1{{{q(0), q(2)}, {q(1, 2), q(2)}}};
        const PolarCurve c2{{{q(1, 4), q(2)}, {q(1, 2), q(1)}, {q(3, 4), q(2)}}};
        const auto ks = polar_crossings(c1, c2);
        REQUIRE(ks.size() == 1);
        CHECK(ks[0].is_degenerate());
        CHECK(ks[0].reason == DegenerateReason::Touch);
    }
    SUBCASE("two-piece profile crossing a constant one") {
        const PolarCurve c1{{{q(0), q(2)}, {q(1, 2), q(2)}}};
        const PolarCurve c2{{{q(1, 4), q(3)}, {q(1, 2), q(1)}, {q(3, 4), q(2)}}};
        // 3 - 8 (theta - 1/4) = 2.
        const Rat theta = q(1, 4) + q(1, 8);
        const auto ks = polar_crossings(c1, c2);
        REQUIRE(ks.size() == 1);
        CHECK(ks[0].is_proper());
        CHECK(std::get<PolarPoint>(ks[0].where) == PolarPoint{theta, q(2)});
    }
    SUBCASE("wrapped spans meet across zero") {
        const PolarCurve c1{{{q(3, 4), q(1)}, {q(5, 4), q(3)}}};
        const PolarCurve c2{{{q(3, 4), q(3)}, {q(5, 4), q(1)}}};
        const auto ks = polar_crossings(c1, c2);
        REQUIRE(ks.size() == 1);
        CHECK(std::get<PolarPoint>(ks[0].where).theta == 0);
    }
}

TEST_CASE("curve evaluation") {
    const PolarCurve pc{{{q(0), q(2)}, {q(1, 3), q(1)}}};
    CHECK(*curve_eval(pc, q(1, 6)) == q(3, 2));
    CHECK_FALSE(curve_eval(pc, q(1, 2)).has_value());
    const CartesianCurve cc{{pt(0, 0), pt(2, -1)}};
    CHECK(*curve_eval(cc, q(1)) == q(-1, 2));
    CHECK_FALSE(curve_eval(cc, q(3)).has_value());
    const CartesianCurve back{{pt(0, 0), pt(2, 1), pt(1, 2)}};
    CHECK_FALSE(is_x_monotone(back));
    CHECK_THROWS_AS(curve_eval(back, q(1)), Error);
    CHECK(in_open_span(PolarCurve{{{q(3, 4), q(1)}, {q(5, 4), q(1)}}}, q(1, 8)));
    CHECK_FALSE(in_open_span(pc, q(0)));
}

TEST_CASE("segments against circles") {
    const Point o = pt(0, 0);
    CHECK(segment_circle_relation({pt(0, 0), pt(3, 0)}, o, q(1)) == CircleRelation::Crosses);
    // Closest point of (2,0)-(0,2) to the origin is (1,1), at squared distance 2.
    const Point a = pt(2, 0), b = pt(0, 2);
    const Rat t = -(a.x * (b.x - a.x) + a.y * (b.y - a.y)) / squared_distance(a, b);
    CHECK(squared_distance(o, {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}) == 2);
    CHECK(segment_circle_relation({a, b}, o, q(1)) == CircleRelation::Disjoint);
    CHECK(segment_circle_relation({pt(1, 0), pt(1, 2)}, o, q(1)) == CircleRelation::Touches);
    CHECK(segment_circle_relation({pt(0, 0), pt(q(1, 2), q(0))}, o, q(1)) == CircleRelation::Disjoint);
}

TEST_CASE("points on circles are exact and ordered by code") {
    oracle::Float prev = -10;
    for (int k = 0; k < 64; ++k) {
        const Rat code = q(k, 16);
        const Point p = point_on_circle(q(3), code);
        CHECK(p.x * p.x + p.y * p.y == 9);
        const oracle::Float angle = atan2(oracle::to_float(p.y), oracle::to_float(p.x));
        const oracle::Float turns = (angle < 0 ? angle + 2 * boost::math::constants::pi<oracle::Float>() : angle);
        CHECK(turns > prev);
        prev = turns;
    }
    CHECK(point_on_circle(q(1), q(1)) == pt(0, 1));
}

TEST_CASE("predicates agree with the 50-digit sampler") {
    const oracle::SamplerReport r = oracle::run_sampler(2000, 1e-12, 7);
    CHECK(r.checked == 2000);
    CHECK(r.disagreements == 0);
}

TEST_CASE("random streams are reproducible and in range") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng c(1);
    for (int i = 0; i < 1000; ++i) {
        const int v = c.range(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
    const Rat g = c.grid(q(0), q(1), 8);
    CHECK(g > 0);
    CHECK(g < 1);
    CHECK(Rat(g * 8).get_den() == 1);
}

}
