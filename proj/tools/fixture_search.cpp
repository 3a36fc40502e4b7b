// Searches complete bipartite drawings for a plane spanning tree that crosses
// every edge outside it, and prints the first hit as a drawing file.
#include "cst/io.hpp"
#include "cst/rng.hpp"
#include "cst/trees.hpp"

#include <iostream>

using namespace cst;

int main(int argc, char** argv) {
    const int a = argc > 1 ? std::stoi(argv[1]) : 3;
    const int b = argc > 2 ? std::stoi(argv[2]) : 3;
    const int bends = argc > 3 ? std::stoi(argv[3]) : 0;
    const int tries = argc > 4 ? std::stoi(argv[4]) : 200000;
    Rng rng(20240601);
    for (int attempt = 0; attempt < tries; ++attempt) {
        DrawingData d;
        d.n = a + b;
        d.graph = GraphKind{true, a, b};
        for (int v = 0; v < d.n; ++v) d.points.push_back(Point{rng.range(0, 12), rng.range(0, 12)});
        for (int u = 0; u < a; ++u)
            for (int v = a; v < d.n; ++v) {
                CartesianCurve c{{d.points[u]}};
                for (int k = 0; k < bends; ++k) c.waypoints.push_back(Point{rng.range(-2, 14), rng.range(-2, 14)});
                c.waypoints.push_back(d.points[v]);
                d.edges.push_back(Edge{u, v, std::move(c)});
            }
        try {
            const Drawing dr = Drawing::build(d);
            for (EdgeSet t : enumerate_plane_trees(dr, TreeFilter::All)) {
                const EdgeSet rest = dr.all_edges() - t;
                if ((dr.crossed_by(t) & rest) == rest) {
                    std::cout << serialize_drawing(dr);
                    std::cerr << "attempt " << attempt << " tree " << tree_to_string(dr, t) << "\n";
                    return 0;
                }
            }
        } catch (const Error&) {
        }
    }
    std::cerr << "no fixture found\n";
    return 1;
}
