#include "cst/drawing.hpp"
#include "cst/errors.hpp"
#include "cst/generators.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cst;
using testing::bumpy_k4;
using testing::long_way_k3;
using testing::polar_data;
using testing::pt;
using testing::q;

namespace {

ErrorKind build_error(DrawingData data) {
    try {
        Drawing::build(std::move(data));
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalInvariantViolated;
}

void set_curve(DrawingData& d, int u, int v, std::vector<Point> w) {
    for (Edge& e : d.edges)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) e.curve = CartesianCurve{std::move(w)};
}

}  // namespace

TEST_SUITE("drawing") {

TEST_CASE("unit square: only the diagonals cross") {
    const Drawing d = fixture_square();
    CHECK(d.edge_count() == 6);
    CHECK(d.crossing_count() == 1);
    CHECK(d.crosses(d.edge_id(0, 2), d.edge_id(1, 3)));
    CHECK(d.crosses(d.edge_id(1, 3), d.edge_id(0, 2)));
    for (int e = 0; e < 6; ++e)
        for (int f = 0; f < 6; ++f) CHECK(d.crosses(e, f) == oracle::straight_edges_cross(d, e, f));
    const ClassReport r = classify(d);
    CHECK(r.is_simple);
    CHECK_FALSE(r.is_monotone);  // two vertices share each x-coordinate
}

TEST_CASE("edges are indexed by sorted endpoints") {
    const Drawing d = fixture_square();
    CHECK(d.edge_id(0, 1) == 0);
    CHECK(d.edge_id(1, 0) == 0);
    CHECK(d.edge_id(2, 3) == 5);
    CHECK(d.common_vertex(d.edge_id(0, 1), d.edge_id(1, 2)) == 1);
    CHECK(d.common_vertex(d.edge_id(0, 1), d.edge_id(2, 3)) == -1);
}

TEST_CASE("simplicity violations") {
    SUBCASE("an edge crossing another twice") {
        DrawingData d = straight_line({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
        set_curve(d, 0, 1, {pt(0, 0), pt(q(1, 3), q(2)), pt(q(2, 3), q(2)), pt(1, 0)});
        CHECK(build_error(d) == ErrorKind::NotSimple);
    }
    SUBCASE("adjacent edges crossing") {
        DrawingData d = straight_line({pt(0, 0), pt(4, 0), pt(0, 4)});
        set_curve(d, 0, 2, {pt(0, 0), pt(2, -1), pt(2, 1), pt(0, 4)});
        CHECK(build_error(d) == ErrorKind::NotSimple);
    }
    SUBCASE("an edge through a vertex") {
        DrawingData d = straight_line({pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 5)});
        CHECK(build_error(d) == ErrorKind::NotSimple);
    }
    SUBCASE("touching edges") {
        DrawingData d = straight_line({pt(0, 0), pt(4, 0), pt(0, 4), pt(4, 4)});
        set_curve(d, 2, 3, {pt(0, 4), pt(2, 2), pt(4, 4)});
        set_curve(d, 0, 1, {pt(0, 0), pt(2, 2), pt(4, 0)});
        CHECK(build_error(d) == ErrorKind::NotSimple);
    }
}

TEST_CASE("malformed structure") {
    SUBCASE("coincident vertices") {
        CHECK(build_error(straight_line({pt(0, 0), pt(1, 1), pt(0, 0)})) == ErrorKind::ParseError);
    }
    SUBCASE("missing edge") {
        DrawingData d = straight_line({pt(0, 0), pt(1, 0), pt(0, 1)});
        d.edges.pop_back();
        CHECK(build_error(d) == ErrorKind::ParseError);
    }
    SUBCASE("curve not joining its endpoints") {
        DrawingData d = straight_line({pt(0, 0), pt(1, 0), pt(0, 1)});
        set_curve(d, 0, 1, {pt(0, 0), pt(2, 0)});
        CHECK(build_error(d) == ErrorKind::ParseError);
    }
    SUBCASE("polar span of a full turn") {
        CHECK(build_error(polar_data({q(0), q(1, 2), q(3, 4)},
                                     {{0, 1, {{q(1, 2), q(1)}, {q(1), q(2)}, {q(3, 2), q(1)}}},
                                      {1, 2, {{q(1, 2), q(1)}, {q(3, 4), q(1)}}},
                                      {0, 2, {{q(3, 4), q(1)}, {q(1), q(1)}}}})) == ErrorKind::ParseError);
    }
}

TEST_CASE("convex crossing counts match the brute-force count") {
    for (int n = 4; n <= 7; ++n) {
        const Drawing d = generate({GenClass::Convex, n, 0});
        const long long c4 = static_cast<long long>(n) * (n - 1) * (n - 2) * (n - 3) / 24;
        CHECK(oracle::crossing_count(d) == c4);
        CHECK(d.crossing_count() == c4);
    }
}

TEST_CASE("monotone classification") {
    const Drawing m4 = fixture_m4();
    const auto s = classify_monotone(m4);
    REQUIRE(s.has_value());
    CHECK(s->order == std::vector<int>{0, 1, 2, 3});
    CHECK(s->spine_edges == EdgeSet{m4.edge_id(0, 1), m4.edge_id(1, 2), m4.edge_id(2, 3)});
    CHECK_FALSE(classify_monotone(fixture_square()).has_value());

    // Relabeled by x: the spine follows x, not the vertex ids.
    const Drawing shuffled = Drawing::build(straight_line({pt(2, 0), pt(0, 1), pt(3, 5), pt(1, -1)}));
    const auto t = classify_monotone(shuffled);
    REQUIRE(t.has_value());
    CHECK(t->order == std::vector<int>{1, 3, 0, 2});
    CHECK(t->spine_edges.size() == 3);
}

TEST_CASE("two-page classification") {
    CHECK_FALSE(classify_two_page(fixture_m4()));
    CHECK_FALSE(classify_two_page(fixture_polar_k3()));
    for (int n = 3; n <= 6; ++n) {
        const Drawing d = generate({GenClass::TwoPage, n, static_cast<std::uint64_t>(n)});
        CHECK(classify_two_page(d));
        EdgeSet path;
        for (int v = 0; v + 1 < n; ++v) path.insert(d.edge_id(v, v + 1));
        CHECK(d.crossed_by(path).empty());
    }
}

TEST_CASE("cylindrical classification") {
    GenSpec spec{GenClass::Cylindrical, 4, 11};
    spec.inner = 2;
    spec.outer = 2;
    const Drawing d = generate(spec);
    const auto roles = classify_cylindrical(d, d.circles()->r_in2, d.circles()->r_out2);
    REQUIRE(roles.has_value());
    CHECK(roles->inner.size() == 2);
    CHECK(roles->outer.size() == 2);
    const auto count = [&](EdgeRole r) { return std::count(roles->roles.begin(), roles->roles.end(), r); };
    CHECK(count(EdgeRole::Inner) == 1);
    CHECK(count(EdgeRole::Outer) == 1);
    CHECK(count(EdgeRole::Side) == 4);
    CHECK(roles->side_edges().size() == 4);

    CHECK_FALSE(classify_cylindrical(fixture_square(), q(1, 4), q(4)).has_value());
    CHECK_THROWS_AS(classify_cylindrical(d, q(4), q(1)), Error);
}

TEST_CASE("cylindrical drawings cross at most one cycle edge per circle") {
    for (int s = 0; s < 30; ++s) {
        GenSpec spec{GenClass::Cylindrical, 6, static_cast<std::uint64_t>(s)};
        spec.inner = 1 + s % 5;
        spec.outer = 6 - spec.inner;
        const Drawing d = generate(spec);
        const auto roles = classify_cylindrical(d, d.circles()->r_in2, d.circles()->r_out2);
        REQUIRE(roles.has_value());
        int inner_crossed = 0, outer_crossed = 0;
        for (int e : roles->crossed_cycle_edges) {
            if (roles->roles[e] == EdgeRole::Inner) ++inner_crossed;
            if (roles->roles[e] == EdgeRole::Outer) ++outer_crossed;
            // Only side edges may cross a cycle edge.
            for (int f : d.cross_mask(e)) CHECK(roles->roles[f] == EdgeRole::Side);
        }
        CHECK(inner_crossed <= 1);
        CHECK(outer_crossed <= 1);
        CHECK(d.crossed_by(roles->inner_path | roles->outer_path).empty());
    }
}

TEST_CASE("c-monotone classification") {
    SUBCASE("polar triangle of one-third arcs") {
        const Drawing d = fixture_polar_k3();
        const CMonotoneReport r = classify_c_monotone(d);
        CHECK(r.c_monotone);
        CHECK(r.strongly);
        CHECK(r.spine.all_cycle_edges_spine);
        CHECK(r.spine.spine_edges == d.all_edges());
        CHECK_FALSE(cut_to_monotone(d).has_value());
    }
    SUBCASE("two spans covering the circle") {
        const Drawing d = Drawing::build(polar_data({q(0), q(1, 3), q(2, 3)},
                                                    {{0, 1, {{q(0), q(1)}, {q(1, 3), q(1)}}},
                                                     {0, 2, {{q(0), q(1)}, {q(1, 3), q(1, 2)}, {q(2, 3), q(1)}}},
                                                     {1, 2, {{q(2, 3), q(1)}, {q(1), q(2)}, {q(4, 3), q(1)}}}}));
        const CMonotoneReport r = classify_c_monotone(d);
        CHECK(r.c_monotone);
        CHECK_FALSE(r.strongly);
    }
    SUBCASE("Cartesian drawings are not c-monotone") {
        CHECK_FALSE(classify_c_monotone(fixture_m4()).c_monotone);
    }
}

TEST_CASE("cutting along an empty wedge") {
    const Drawing d = long_way_k3();
    const CMonotoneReport r = classify_c_monotone(d);
    REQUIRE(r.strongly);
    CHECK_FALSE(r.spine.all_cycle_edges_spine);
    const auto cut = cut_to_monotone(d);
    REQUIRE(cut.has_value());
    CHECK(cut->cut_theta == q(1, 6));
    CHECK(cut->new_to_old_vertex == std::vector<int>{1, 2, 0});
    CHECK(classify_monotone(cut->drawing).has_value());
    for (int e = 0; e < d.edge_count(); ++e)
        for (int f = 0; f < d.edge_count(); ++f)
            CHECK(d.crosses(e, f) == cut->drawing.crosses(cut->old_to_new_edge[e], cut->old_to_new_edge[f]));
}

TEST_CASE("cutting generated drawings keeps the crossing matrix") {
    int cuts = 0;
    for (std::uint64_t s = 0; s < 80; ++s) {
        const Drawing d = generate({GenClass::StronglyCMonotone, 6, s});
        const auto cut = cut_to_monotone(d);
        if (!cut) continue;
        ++cuts;
        REQUIRE(classify_monotone(cut->drawing).has_value());
        for (int e = 0; e < d.edge_count(); ++e) {
            CHECK(cut->new_to_old_edge[cut->old_to_new_edge[e]] == e);
            for (int f = 0; f < d.edge_count(); ++f)
                CHECK(d.crosses(e, f) == cut->drawing.crosses(cut->old_to_new_edge[e], cut->old_to_new_edge[f]));
        }
    }
    CHECK(cuts > 0);
}

TEST_CASE("twiggly edges of M4") {
    const Drawing d = fixture_m4();
    const SpineStructure s = *classify_monotone(d);
    const EdgeSet star3{d.edge_id(0, 3), d.edge_id(1, 3), d.edge_id(2, 3)};
    // Oracle: an edge is twiggly iff its segment crosses a spine segment.
    EdgeSet expect;
    for (int e : star3)
        for (int f : s.spine_edges)
            if (oracle::straight_edges_cross(d, e, f)) expect.insert(e);
    CHECK(expect == EdgeSet{d.edge_id(0, 3)});
    CHECK(twiggly_set(d, s, star3) == expect);
    CHECK(twiggly_set(d, s, s.spine_edges).empty());
}

TEST_CASE("maximal edge under the above relation") {
    const Drawing d = fixture_m4();
    const int low = d.edge_id(0, 3), high = d.edge_id(1, 3);
    // At x = 2 the edge 1-3 is at height 1/2 and 0-3 at 0.
    CHECK(*curve_eval(d.cartesian_curve(high), q(2)) == q(1, 2));
    CHECK(*curve_eval(d.cartesian_curve(low), q(2)) == 0);
    CHECK(is_above(d, high, low));
    CHECK_FALSE(is_above(d, low, high));
    CHECK(succ_maximal(d, EdgeSet{low}) == low);
    CHECK(succ_maximal(d, EdgeSet{low, high}) == high);
    CHECK_THROWS_AS(succ_maximal(d, EdgeSet{}), Error);
}

TEST_CASE("bumpy edges") {
    const Drawing d = bumpy_k4();
    const CMonotoneReport r = classify_c_monotone(d);
    REQUIRE(r.c_monotone);
    const int e = d.edge_id(0, 3);
    CHECK(d.crosses(e, d.edge_id(1, 2)));
    CHECK(bumpy_edges(d, e) == std::vector<int>{d.edge_id(0, 2), d.edge_id(1, 3)});
    try {
        bumpy_edges(d, d.edge_id(0, 1));
        FAIL("spine edge accepted");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NotTwiggly);
    }
}

TEST_CASE("bipartite graphs") {
    const BipartiteFixture f = fixture_bipartite_isolated();
    CHECK(f.drawing.graph().bipartite);
    CHECK(f.drawing.edge_count() == f.drawing.graph().part_a * f.drawing.graph().part_b);
    CHECK(f.drawing.edge_id(0, 1) == -1);
    CHECK_FALSE(classify_monotone(f.drawing).has_value());
}

}
