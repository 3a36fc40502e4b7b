#pragma once

#include "cst/drawing.hpp"
#include "cst/edge_set.hpp"
#include "cst/trees.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cst {

/// Trees joined by compatible steps, with the certificate of each tree and
/// each step. Every transformation below certifies its own output.
struct TransformSequence {
    std::vector<EdgeSet> trees;
    std::string method;
    std::vector<TreeCert> certs;
    std::vector<bool> step_compatible;

    /// Drawing-class methods: reduction rounds and per-tree trace.
    int rounds = 0;
    std::vector<int> twiggly_counts;
    /// Strongly c-monotone runs: twiggly depth of every sampled ray, per tree.
    std::vector<std::vector<int>> depth_profiles;
    bool cut_branch = false;

    int flips() const { return static_cast<int>(trees.size()) - 1; }
};

/// Checks every tree is a plane spanning tree and every step compatible.
/// Throws EmptySet, BadTree(index of the tree) or IncompatibleStep(index of
/// the step's first tree).
TransformSequence certify_sequence(const Drawing& d, std::vector<EdgeSet> seq, std::string method = "given");

/// Throws NotCylindrical when `roles` does not describe `d`, NoSideEdge when a
/// tree has no side edge.
TransformSequence transform_cylindrical(const Drawing& d, const CylRoles& roles, EdgeSet t1, EdgeSet t2);

/// Ends at the spine path. Throws NotMonotone.
TransformSequence monotone_to_spine(const Drawing& d, const SpineStructure& spine, EdgeSet t);

struct Bound {
    enum class Kind { Center, Edge, Infinity };
    Kind kind = Kind::Center;
    int edge = -1;
    bool operator==(const Bound&) const = default;
};

/// Angular interval [begin, end] (end unwrapped, so begin < end <= begin + 1)
/// between two radially neighbouring bounds.
struct Corridor {
    Rat begin;
    Rat end;
    Bound lower;
    Bound upper;
    std::optional<int> start_vertex;
    std::optional<int> end_vertex;
    /// One angle inside each elementary interval the corridor spans.
    std::vector<Rat> samples;

    bool full_circle() const { return !start_vertex; }
    bool is_inner() const { return lower.kind == Bound::Kind::Center; }
    bool is_outer() const { return upper.kind == Bound::Kind::Infinity; }
};

/// Corridors of the arrangement formed by `twigglies` and the two dummies,
/// in order of begin angle. Requires a polar drawing with distinct vertex angles.
std::vector<Corridor> corridors(const Drawing& d, EdgeSet twigglies);

/// Number of members of `edges` met by the ray at angle theta (inside the open span).
int ray_depth(const Drawing& d, EdgeSet edges, const Rat& theta);

/// Midpoints of the intervals between consecutive vertex angles.
std::vector<Rat> depth_sample_angles(const Drawing& d);

/// Greedy path through the vertices inside the corridor, from its start to
/// its end vertex. Throws FullCircleCorridor.
EdgeSet corridor_path(const Drawing& d, EdgeSet t, const Corridor& c);

/// Ends at a spine path. Throws NotStronglyCMonotone.
TransformSequence cmonotone_to_spine(const Drawing& d, EdgeSet t);

/// Star at g to star at r, one flip per step. Throws RelationCyclic.
TransformSequence star_to_star(const Drawing& d, int g, int r);

/// Throws NotDoubleStar.
TransformSequence double_star_to_star(const Drawing& d, EdgeSet t, int target_center);

/// `path` = (g, s, r) fixes the reading of t; otherwise one is chosen. Throws NotTwinStar.
TransformSequence twin_star_to_star(const Drawing& d, EdgeSet t, int target_center,
                                    std::optional<std::array<int, 3>> path = std::nullopt);

/// Between stars, double stars and twin stars. Throws NotSpecialTree.
TransformSequence transform_special(const Drawing& d, EdgeSet t1, EdgeSet t2);

/// t1 -> the shared target of `a`, then back along `b` reversed, with loops cut.
TransformSequence join_sequences(const Drawing& d, const TransformSequence& a, const TransformSequence& b,
                                 std::string method);

enum class Method { Auto, Cylindrical, Monotone, CMonotone, Special };

const char* to_string(Method m);
std::optional<Method> method_from_string(const std::string& s);

/// Dispatches to one method; `Auto` picks the first that applies in the order
/// cylindrical, monotone, strongly c-monotone, special. Throws MethodInapplicable.
TransformSequence transform(const Drawing& d, EdgeSet t1, EdgeSet t2, Method m);

}  // namespace cst
