#include "cst/errors.hpp"
#include "cst/generators.hpp"
#include "cst/rng.hpp"
#include "cst/trees.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cst;
using testing::tree;

TEST_SUITE("trees") {

TEST_CASE("path through the square") {
    const Drawing d = fixture_square();
    const EdgeSet t = tree(d, "0-1,1-2,2-3");
    const TreeCert c = check_tree(d, t);
    CHECK(c.spanning);
    CHECK(c.acyclic_connected);
    CHECK(c.plane);
    // Inner vertices 1 and 2 form the fixed path; the double star reading wins.
    CHECK(c.kind == TreeKind{TreeKindTag::DoubleStar, {1, 2}});
    using P = std::array<int, 3>;
    CHECK(twin_star_paths(d, t) == std::vector<P>{P{0, 1, 2}, P{1, 2, 3}});
    CHECK(double_star_paths(d, t) == std::vector<std::array<int, 2>>{{1, 2}});
}

TEST_CASE("crossing diagonals are not plane") {
    const Drawing d = fixture_square();
    const TreeCert c = check_tree(d, tree(d, "0-2,1-3,0-1"));
    CHECK(c.spanning);
    CHECK(c.acyclic_connected);
    CHECK_FALSE(c.plane);
    CHECK_FALSE(c.is_plane_spanning_tree());
}

TEST_CASE("kinds") {
    const Drawing d = generate({GenClass::Convex, 6, 0});
    CHECK(check_tree(d, star(d, 0)).kind == TreeKind{TreeKindTag::Star, {0}});
    CHECK(check_tree(d, tree(d, "3-0,3-1,3-2,3-4,3-5")).kind == TreeKind{TreeKindTag::Star, {3}});
    CHECK(check_tree(d, tree(d, "0-1,1-2,1-3,1-4,0-5")).kind == TreeKind{TreeKindTag::DoubleStar, {0, 1}});
    CHECK(check_tree(d, tree(d, "0-1,1-2,2-3,3-4,0-5")).kind == TreeKind{TreeKindTag::KStar, {0, 1, 2, 3}});
    CHECK(check_tree(d, tree(d, "0-1,1-2,2-3,2-4,0-5")).kind == TreeKind{TreeKindTag::TwinStar, {0, 1, 2}});
    CHECK(check_tree(d, tree(d, "0-1,0-5,1-2,1-3,5-4")).kind == TreeKind{TreeKindTag::TwinStar, {1, 0, 5}});
    // Three non-leaves around vertex 0 do not form a path.
    const Drawing d7 = generate({GenClass::Convex, 7, 0});
    CHECK(check_tree(d7, tree(d7, "0-1,1-2,0-3,3-4,0-5,5-6")).kind.tag == TreeKindTag::Generic);
    // The middle of a twin star carries no leaves.
    CHECK(check_tree(d, tree(d, "0-1,0-5,1-2,5-4,0-3")).kind.tag == TreeKindTag::Generic);
    // Kinds are only assigned to plane spanning trees.
    CHECK(check_tree(d, tree(d, "0-2,1-3,1-4,1-5,0-1")).kind.tag == TreeKindTag::Generic);
    const TreeCert two = check_tree(d, tree(d, "0-1,2-3"));
    CHECK_FALSE(two.spanning);
    CHECK_FALSE(two.acyclic_connected);
}

TEST_CASE("unknown edges") {
    const Drawing d = fixture_square();
    try {
        check_tree(d, EdgeSet{40});
        FAIL("accepted an edge id outside the drawing");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownEdge);
    }
}

TEST_CASE("compatibility") {
    const Drawing d = fixture_square();
    const EdgeSet path = tree(d, "0-1,1-2,2-3");
    CHECK(is_compatible(d, path, path));
    CHECK(is_compatible(d, path, tree(d, "0-1,0-3,1-2")));
    CHECK_FALSE(is_compatible(d, tree(d, "0-1,0-2,0-3"), tree(d, "1-3,0-1,1-2")));
}

TEST_CASE("enumeration on small drawings") {
    CHECK(enumerate_plane_trees(fixture_polar_k3(), TreeFilter::All).size() == 3);
    const Drawing sq = fixture_square();
    long long spanning = 0;
    const auto expect = oracle::plane_spanning_trees(sq, &spanning);
    CHECK(spanning == 16);  // Cayley: 4^2
    CHECK(expect.size() == 12);
    CHECK(enumerate_plane_trees(sq, TreeFilter::All) == expect);
    CHECK(enumerate_plane_trees(sq, TreeFilter::Star).size() == 4);
}

TEST_CASE("enumeration is capped") {
    const Drawing d = generate({GenClass::Convex, 9, 0});
    try {
        enumerate_plane_trees(d, TreeFilter::All);
        FAIL("enumerated past the limit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooLarge);
    }
    CHECK(enumerate_plane_trees(d, TreeFilter::Star).size() == 9);
}

TEST_CASE("flips of a compatible step") {
    const Drawing d = fixture_square();
    const EdgeSet a = tree(d, "0-1,1-2,2-3"), b = tree(d, "0-1,0-3,1-2");
    CHECK(compatible_step_to_flips(d, a, a).empty());
    const auto flips = compatible_step_to_flips(d, a, b);
    REQUIRE(flips.size() == 1);
    CHECK(flips[0] == Flip{d.edge_id(2, 3), d.edge_id(0, 3)});
    try {
        compatible_step_to_flips(d, tree(d, "0-1,0-2,0-3"), tree(d, "1-3,0-1,1-2"));
        FAIL("flipped an incompatible pair");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Incompatible);
    }
}

TEST_CASE("tree paths") {
    const Drawing d = fixture_square();
    const EdgeSet t = tree(d, "0-1,1-2,2-3");
    CHECK(tree_path_edges(d, t, 0, 3) == std::vector<int>{d.edge_id(0, 1), d.edge_id(1, 2), d.edge_id(2, 3)});
    CHECK(tree_path_edges(d, t, 2, 2).empty());
    CHECK(tree_path_edges(d, tree(d, "0-1"), 0, 3).empty());
}

TEST_CASE("property: enumeration matches the brute-force filter") {
    const GenClass classes[] = {GenClass::RandomPoints, GenClass::Convex};
    for (int k = 0; k < 24; ++k) {
        const Drawing d = generate({classes[k % 2], 3 + k % 4, static_cast<std::uint64_t>(k)});
        CHECK(enumerate_plane_trees(d, TreeFilter::All) == oracle::plane_spanning_trees(d));
    }
}

TEST_CASE("property: special filters select by kind") {
    const GenClass classes[] = {GenClass::RandomPoints, GenClass::MonotonePerturbed, GenClass::StronglyCMonotone,
                                GenClass::TwoPage};
    for (int k = 0; k < 20; ++k) {
        const Drawing d = generate({classes[k % 4], 4 + k % 4, static_cast<std::uint64_t>(100 + k)});
        const auto all = enumerate_plane_trees(d, TreeFilter::All);
        std::vector<EdgeSet> stars, doubles, twins, special;
        for (EdgeSet t : all) {
            const TreeKindTag tag = check_tree(d, t).kind.tag;
            if (tag == TreeKindTag::Star) stars.push_back(t);
            if (tag == TreeKindTag::DoubleStar) doubles.push_back(t);
            if (tag == TreeKindTag::TwinStar) twins.push_back(t);
            if (tag == TreeKindTag::Star || tag == TreeKindTag::DoubleStar || tag == TreeKindTag::TwinStar)
                special.push_back(t);
        }
        CHECK(enumerate_plane_trees(d, TreeFilter::Star) == stars);
        CHECK(enumerate_plane_trees(d, TreeFilter::DoubleStar) == doubles);
        CHECK(enumerate_plane_trees(d, TreeFilter::TwinStar) == twins);
        CHECK(enumerate_plane_trees(d, TreeFilter::Special) == special);
        // Every star of a complete graph is plane.
        CHECK(static_cast<int>(stars.size()) == d.n());
    }
}

TEST_CASE("property: enumeration is sorted and duplicate-free") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Drawing d = generate({GenClass::MonotonePerturbed, 6, s});
        const auto all = enumerate_plane_trees(d, TreeFilter::All);
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        for (EdgeSet t : all) CHECK(check_tree(d, t).is_plane_spanning_tree());
    }
}

TEST_CASE("property: random plane trees are plane spanning trees") {
    Rng rng(5);
    for (int k = 0; k < 40; ++k) {
        const Drawing d = generate({GenClass::RandomPoints, 3 + k % 8, static_cast<std::uint64_t>(k)});
        for (int i = 0; i < 5; ++i) CHECK(check_tree(d, random_plane_tree(d, rng)).is_plane_spanning_tree());
    }
}

TEST_CASE("property: flips of compatible steps stay plane") {
    Rng rng(8);
    for (int k = 0; k < 30; ++k) {
        const Drawing d = generate({GenClass::RandomPoints, 5 + k % 3, static_cast<std::uint64_t>(k)});
        const auto all = enumerate_plane_trees(d, TreeFilter::All);
        const EdgeSet a = all[rng.below(all.size())];
        for (EdgeSet b : all) {
            if (!is_compatible(d, a, b)) continue;
            EdgeSet cur = a;
            const auto flips = compatible_step_to_flips(d, a, b);
            CHECK(static_cast<int>(flips.size()) == (b - a).size());
            for (const Flip& f : flips) {
                cur.erase(f.remove);
                cur.insert(f.add);
                CHECK(check_tree(d, cur).is_plane_spanning_tree());
                CHECK_FALSE(d.crosses(f.remove, f.add));
            }
            CHECK(cur == b);
        }
    }
}

}
