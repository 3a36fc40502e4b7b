#pragma once

#include "cst/drawing.hpp"
#include "cst/edge_set.hpp"

#include <array>
#include <vector>

namespace cst {

class Rng;

enum class TreeKindTag { Star, DoubleStar, TwinStar, KStar, Generic };

const char* to_string(TreeKindTag tag);

/// Most specific k-star reading of a tree: the path holds the fixed path's
/// vertices (one for a star, (g, r) for a double star, (g, s, r) for a twin
/// star), oriented so the first endpoint is the smaller id.
struct TreeKind {
    TreeKindTag tag = TreeKindTag::Generic;
    std::vector<int> path;
    bool operator==(const TreeKind&) const = default;
};

struct TreeCert {
    bool spanning = false;           ///< the edges connect all vertices
    bool acyclic_connected = false;  ///< connected, acyclic, on all vertices
    bool plane = false;
    TreeKind kind;

    bool is_plane_spanning_tree() const { return spanning && acyclic_connected && plane; }
};

/// Throws UnknownEdge for ids outside the drawing.
TreeCert check_tree(const Drawing& d, EdgeSet s);

/// The union of the two sets is crossing-free.
bool is_compatible(const Drawing& d, EdgeSet t1, EdgeSet t2);

enum class TreeFilter { All, Star, DoubleStar, TwinStar, Special };

struct EnumLimits {
    int all = 8;
    int special = 10;
};

/// Exhaustive, duplicate-free, in canonical order. Throws TooLarge past the limit.
std::vector<EdgeSet> enumerate_plane_trees(const Drawing& d, TreeFilter filter, EnumLimits limits = {});

struct Flip {
    int remove = -1;
    int add = -1;
    bool operator==(const Flip&) const = default;
};

/// Crossing-free flips turning t1 into t2. Throws Incompatible.
std::vector<Flip> compatible_step_to_flips(const Drawing& d, EdgeSet t1, EdgeSet t2);

/// Tree edges (g, r) with every tree edge incident to g or r, g < r.
std::vector<std::array<int, 2>> double_star_paths(const Drawing& d, EdgeSet t);
/// Paths (g, s, r) with s of degree two and every tree edge incident to g or r, g < r.
std::vector<std::array<int, 3>> twin_star_paths(const Drawing& d, EdgeSet t);

/// Star at `center` (all edges incident to it).
EdgeSet star(const Drawing& d, int center);

/// A plane spanning tree grown from a random edge order; falls back to a star.
EdgeSet random_plane_tree(const Drawing& d, Rng& rng);

/// Edge ids along the unique path from u to v in the forest t, empty if none.
std::vector<int> tree_path_edges(const Drawing& d, EdgeSet t, int u, int v);

}  // namespace cst
