#pragma once

#include "cst/drawing.hpp"
#include "cst/edge_set.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace cst {

enum class GenClass { Convex, RandomPoints, MonotonePerturbed, TwoPage, Cylindrical, StronglyCMonotone };

const char* to_string(GenClass c);
std::optional<GenClass> gen_class_from_string(const std::string& s);

struct GenSpec {
    GenClass cls = GenClass::Convex;
    int n = 4;
    std::uint64_t seed = 0;
    int max_rejects = 1000;
    /// Cylindrical only: vertices on the inner and on the outer circle.
    int inner = 0;
    int outer = 0;
};

/// A validated drawing of K_n in the requested class, a pure function of the
/// spec. Cylindrical drawings carry their circles (r^2 = 1 and 4). Throws
/// RejectionBudgetExceeded, or ParseError for an invalid spec.
Drawing generate(const GenSpec& spec);

/// Drawing data before validation; the generators' raw material.
DrawingData straight_line(const std::vector<Point>& pts);

/// Unit square (0,0), (1,0), (1,1), (0,1), straight-line.
Drawing fixture_square();
/// Straight-line K4 on (0,0), (1,1), (2,-1), (3,0).
Drawing fixture_m4();
/// K3 at turns 0, 1/3, 2/3 on the unit circle, every edge a one-third arc.
Drawing fixture_polar_k3();

/// A complete bipartite drawing with a plane spanning tree that crosses
/// every edge outside it.
struct BipartiteFixture {
    Drawing drawing;
    EdgeSet tree;
};
BipartiteFixture fixture_bipartite_isolated();

}  // namespace cst
