#include "cst/generators.hpp"

namespace cst {

Drawing fixture_square() { return Drawing::build(straight_line({{0, 0}, {1, 0}, {1, 1}, {0, 1}})); }

Drawing fixture_m4() { return Drawing::build(straight_line({{0, 0}, {1, 1}, {2, -1}, {3, 0}})); }

Drawing fixture_polar_k3() {
    DrawingData d;
    d.n = 3;
    d.backend = Backend::Polar;
    const Rat third = make_rat(1, 3);
    d.polar = {{0, 1}, {third, 1}, {2 * third, 1}};
    d.edges.push_back(Edge{0, 1, PolarCurve{{{0, 1}, {third, 1}}}});
    d.edges.push_back(Edge{1, 2, PolarCurve{{{third, 1}, {2 * third, 1}}}});
    d.edges.push_back(Edge{0, 2, PolarCurve{{{2 * third, 1}, {1, 1}}}});
    return Drawing::build(std::move(d));
}

BipartiteFixture fixture_bipartite_isolated() {
    // Straight-line K_{3,3}; parts {0, 1, 2} and {3, 4, 5}.
    DrawingData d;
    d.n = 6;
    d.graph = GraphKind{true, 3, 3};
    d.points = {{0, 2}, {3, 1}, {5, 7}, {0, 12}, {10, 0}, {7, 10}};
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) d.edges.push_back(Edge{u, v, CartesianCurve{{d.points[u], d.points[v]}}});
    Drawing drawing = Drawing::build(std::move(d));
    const EdgeSet tree{drawing.edge_id(0, 3), drawing.edge_id(0, 5), drawing.edge_id(1, 4), drawing.edge_id(1, 5),
                       drawing.edge_id(2, 5)};
    return {std::move(drawing), tree};
}

}  // namespace cst
