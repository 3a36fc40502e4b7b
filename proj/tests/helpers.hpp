#pragma once

#include "cst/drawing.hpp"
#include "cst/io.hpp"

#include <string>
#include <utility>
#include <vector>

namespace testing {

inline cst::Point pt(long x, long y) { return {cst::make_rat(x), cst::make_rat(y)}; }
inline cst::Point pt(const cst::Rat& x, const cst::Rat& y) { return {x, y}; }
inline cst::Rat q(long num, long den = 1) { return cst::make_rat(num, den); }

inline cst::EdgeSet tree(const cst::Drawing& d, const std::string& text) { return cst::parse_tree(d, text); }

}  // namespace testing

namespace testing {

struct PolarEdge {
    int u, v;
    std::vector<std::pair<cst::Rat, cst::Rat>> waypoints;  ///< (theta, r), unwrapped
};

/// Polar drawing of K_n with vertices at radius 1 and the given angles.
inline cst::DrawingData polar_data(const std::vector<cst::Rat>& angles, const std::vector<PolarEdge>& edges) {
    cst::DrawingData d;
    d.n = static_cast<int>(angles.size());
    d.backend = cst::Backend::Polar;
    for (const auto& a : angles) d.polar.push_back({a, cst::make_rat(1)});
    for (const auto& e : edges) {
        cst::PolarCurve c;
        for (const auto& [t, r] : e.waypoints) c.waypoints.push_back({t, r});
        d.edges.push_back(cst::Edge{e.u, e.v, c});
    }
    return d;
}

}  // namespace testing

namespace testing {

/// Polar K3 whose cycle edge 0-1 takes the long way round, leaving the wedge
/// between vertices 0 and 1 empty.
inline cst::Drawing long_way_k3() {
    return cst::Drawing::build(polar_data({q(0), q(1, 3), q(2, 3)},
                                          {{0, 1, {{q(1, 3), q(1)}, {q(2, 3), q(2)}, {q(1), q(1)}}},
                                           {1, 2, {{q(1, 3), q(1)}, {q(2, 3), q(1)}}},
                                           {0, 2, {{q(2, 3), q(1)}, {q(1), q(1)}}}}));
}

/// Polar K4 at angles 0, 1/8, 1/4, 3/8 whose edge 0-3 crosses the spine edge
/// 1-2 once, passing below vertex 1 and above vertex 2.
inline cst::Drawing bumpy_k4() {
    return cst::Drawing::build(
        polar_data({q(0), q(1, 8), q(1, 4), q(3, 8)},
                   {{0, 1, {{q(0), q(1)}, {q(1, 8), q(1)}}},
                    {1, 2, {{q(1, 8), q(1)}, {q(1, 4), q(1)}}},
                    {2, 3, {{q(1, 4), q(1)}, {q(3, 8), q(1)}}},
                    {0, 3, {{q(0), q(1)}, {q(1, 8), q(1, 2)}, {q(1, 4), q(3, 2)}, {q(3, 8), q(1)}}},
                    {0, 2, {{q(0), q(1)}, {q(1, 8), q(1, 4)}, {q(1, 4), q(1)}}},
                    {1, 3, {{q(1, 8), q(1)}, {q(1, 4), q(2)}, {q(3, 8), q(1)}}}}));
}

/// bumpy_k4 plus a vertex at 1/2 closing the spine cycle the short way, so
/// every cycle edge is a spine edge and 0-3 is the only twiggly edge.
inline cst::Drawing one_twiggly_k5() {
    return cst::Drawing::build(
        polar_data({q(0), q(1, 8), q(1, 4), q(3, 8), q(1, 2)},
                   {{0, 1, {{q(0), q(1)}, {q(1, 8), q(1)}}},
                    {1, 2, {{q(1, 8), q(1)}, {q(1, 4), q(1)}}},
                    {2, 3, {{q(1, 4), q(1)}, {q(3, 8), q(1)}}},
                    {3, 4, {{q(3, 8), q(1)}, {q(1, 2), q(1)}}},
                    {0, 4, {{q(1, 2), q(1)}, {q(1), q(1)}}},
                    {0, 3, {{q(0), q(1)}, {q(1, 8), q(1, 2)}, {q(1, 4), q(3, 2)}, {q(3, 8), q(1)}}},
                    {0, 2, {{q(0), q(1)}, {q(1, 8), q(1, 4)}, {q(1, 4), q(1)}}},
                    {1, 3, {{q(1, 8), q(1)}, {q(1, 4), q(2)}, {q(3, 8), q(1)}}},
                    {1, 4, {{q(1, 8), q(1)}, {q(1, 4), q(3)}, {q(3, 8), q(3)}, {q(1, 2), q(1)}}},
                    {2, 4, {{q(1, 4), q(1)}, {q(3, 8), q(1, 2)}, {q(1, 2), q(1)}}}}));
}

}  // namespace testing
