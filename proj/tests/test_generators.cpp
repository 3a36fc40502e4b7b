#include "cst/errors.hpp"
#include "cst/generators.hpp"
#include "cst/io.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cst;

namespace {

std::optional<ErrorKind> error_of(const GenSpec& spec) {
    try {
        generate(spec);
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

long long choose4(long long n) { return n * (n - 1) * (n - 2) * (n - 3) / 24; }

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("generation is a pure function of class, size and seed") {
    for (GenClass c : {GenClass::Convex, GenClass::RandomPoints, GenClass::MonotonePerturbed, GenClass::TwoPage,
                       GenClass::StronglyCMonotone}) {
        const GenSpec spec{c, 6, 12345};
        CHECK(serialize_drawing(generate(spec)) == serialize_drawing(generate(spec)));
    }
    GenSpec cyl{GenClass::Cylindrical, 6, 9};
    cyl.inner = 2;
    cyl.outer = 4;
    CHECK(serialize_drawing(generate(cyl)) == serialize_drawing(generate(cyl)));
    CHECK(serialize_drawing(generate({GenClass::RandomPoints, 6, 1})) !=
          serialize_drawing(generate({GenClass::RandomPoints, 6, 2})));
}

TEST_CASE("class names round trip") {
    for (GenClass c : {GenClass::Convex, GenClass::RandomPoints, GenClass::MonotonePerturbed, GenClass::TwoPage,
                       GenClass::Cylindrical, GenClass::StronglyCMonotone})
        CHECK(gen_class_from_string(to_string(c)) == c);
    CHECK_FALSE(gen_class_from_string("spiral"));
}

TEST_CASE("convex position has every quadruple crossing") {
    for (int n = 4; n <= 9; ++n) {
        const Drawing d = generate({GenClass::Convex, n, 0});
        CHECK(oracle::crossing_count(d) == choose4(n));
    }
}

TEST_CASE("each generator lands in its class") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        for (int n = 4; n <= 7; ++n) {
            const Drawing rp = generate({GenClass::RandomPoints, n, s});
            CHECK(classify(rp).is_simple);
            CHECK(classify(generate({GenClass::MonotonePerturbed, n, s})).is_monotone);
            CHECK(classify(generate({GenClass::TwoPage, n, s})).is_two_page);
            const ClassReport cm = classify(generate({GenClass::StronglyCMonotone, n, s}));
            CHECK(cm.is_c_monotone);
            CHECK(cm.is_strongly_c_monotone);
        }
    }
}

TEST_CASE("cylindrical split") {
    for (int inner = 1; inner <= 4; ++inner) {
        GenSpec spec{GenClass::Cylindrical, 6, static_cast<std::uint64_t>(inner)};
        spec.inner = inner;
        spec.outer = 6 - inner;
        const Drawing d = generate(spec);
        REQUIRE(d.circles());
        CHECK(d.circles()->r_in2 == 1);
        CHECK(d.circles()->r_out2 == 4);
        const auto roles = classify_cylindrical(d, d.circles()->r_in2, d.circles()->r_out2);
        REQUIRE(roles);
        CHECK(static_cast<int>(roles->inner.size()) == inner);
        CHECK(static_cast<int>(roles->outer.size()) == 6 - inner);
        for (int v : roles->inner) {
            const Point& p = d.point(v);
            CHECK(p.x * p.x + p.y * p.y == 1);
        }
        for (int v : roles->outer) {
            const Point& p = d.point(v);
            CHECK(p.x * p.x + p.y * p.y == 4);
        }
    }
}

TEST_CASE("invalid specs") {
    CHECK(error_of({GenClass::Convex, 2, 0}) == ErrorKind::ParseError);
    CHECK(error_of({GenClass::Convex, 12, 0}) == ErrorKind::TooLarge);
    GenSpec cyl{GenClass::Cylindrical, 5, 0};
    cyl.inner = 2;
    cyl.outer = 2;
    CHECK(error_of(cyl) == ErrorKind::ParseError);
    cyl.inner = 0;
    cyl.outer = 5;
    CHECK(error_of(cyl) == ErrorKind::ParseError);
    GenSpec none{GenClass::RandomPoints, 5, 0};
    none.max_rejects = -1;
    CHECK(error_of(none) == ErrorKind::RejectionBudgetExceeded);
}

TEST_CASE("property: no two strongly c-monotone edges cover the circle") {
    for (std::uint64_t s = 0; s < 12; ++s) {
        const Drawing d = generate({GenClass::StronglyCMonotone, 4 + static_cast<int>(s % 4), 500 + s});
        for (int e = 0; e < d.edge_count(); ++e)
            for (int f = e + 1; f < d.edge_count(); ++f) {
                const PolarCurve& a = d.polar_curve(e);
                const PolarCurve& b = d.polar_curve(f);
                // Any gap in the union lies between two consecutive endpoint angles.
                std::vector<Rat> ends;
                for (const PolarCurve* c : {&a, &b})
                    for (const Rat& t : {c->waypoints.front().theta, c->waypoints.back().theta}) ends.push_back(frac(t));
                std::sort(ends.begin(), ends.end());
                bool gap = false;
                for (std::size_t i = 0; i < ends.size() && !gap; ++i) {
                    const Rat next = i + 1 < ends.size() ? ends[i + 1] : ends[0] + 1;
                    if (next == ends[i]) continue;
                    const Rat mid = frac(Rat((ends[i] + next) / 2));
                    gap = !curve_eval(a, mid) && !curve_eval(b, mid);
                }
                CHECK(gap);
            }
    }
}

}
