#pragma once

#include "cst/edge_set.hpp"
#include "cst/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cst {

enum class Backend { Cartesian, Polar };

/// Complete graph on n vertices, or complete bipartite with parts
/// {0..a-1} and {a..a+b-1}.
struct GraphKind {
    bool bipartite = false;
    int part_a = 0;
    int part_b = 0;
    bool operator==(const GraphKind&) const = default;
};

/// Squared radii of the two circles of a cylindrical drawing, centered at the origin.
struct Circles {
    Rat r_in2;
    Rat r_out2;
    bool operator==(const Circles&) const = default;
};

struct Edge {
    int u = 0;
    int v = 0;
    Curve curve;
};

/// Raw, unvalidated drawing as read from a file or produced by a generator.
struct DrawingData {
    int n = 0;
    GraphKind graph;
    Backend backend = Backend::Cartesian;
    std::vector<Point> points;          ///< Cartesian backend
    std::vector<PolarPoint> polar;      ///< polar backend, theta in [0, 1)
    std::vector<Edge> edges;
    std::optional<Circles> circles;
};

/// A validated simple drawing. Immutable; edge ids index the edges sorted by
/// (u, v) with u < v, and every curve is oriented so it starts at u (Cartesian)
/// or keeps increasing angles (polar).
class Drawing {
public:
    /// Validates and throws NotSimple (or ParseError for malformed structure).
    static Drawing build(DrawingData data);

    int n() const { return data_.n; }
    Backend backend() const { return data_.backend; }
    const GraphKind& graph() const { return data_.graph; }
    const DrawingData& data() const { return data_; }
    const std::optional<Circles>& circles() const { return data_.circles; }

    int edge_count() const { return static_cast<int>(data_.edges.size()); }
    const Edge& edge(int id) const { return data_.edges[id]; }
    /// -1 when u and v are not adjacent in the drawn graph.
    int edge_id(int u, int v) const { return ids_[u * data_.n + v]; }
    EdgeSet all_edges() const;

    bool crosses(int e, int f) const { return cross_[e].contains(f); }
    EdgeSet cross_mask(int e) const { return cross_[e]; }
    /// Every edge crossed by some member of `s`.
    EdgeSet crossed_by(EdgeSet s) const;
    int crossing_count() const;

    const Point& point(int v) const { return data_.points[v]; }
    const PolarPoint& polar_point(int v) const { return data_.polar[v]; }
    const CartesianCurve& cartesian_curve(int e) const { return std::get<CartesianCurve>(edge(e).curve); }
    const PolarCurve& polar_curve(int e) const { return std::get<PolarCurve>(edge(e).curve); }

    bool adjacent(int e, int f) const;
    /// Common endpoint of two adjacent edges, -1 otherwise.
    int common_vertex(int e, int f) const;

private:
    DrawingData data_;
    std::vector<int> ids_;
    std::vector<EdgeSet> cross_;
};

/// A subset of vertices' cylindrical placement plus the edge classification.
struct CylInfo {
    Rat r_in2;
    Rat r_out2;
    std::vector<int> inner;  ///< inner vertices in angular order
    std::vector<int> outer;
};

struct ClassReport {
    bool is_simple = true;
    bool is_monotone = false;
    bool is_two_page = false;
    std::optional<CylInfo> cylindrical;
    bool is_c_monotone = false;
    bool is_strongly_c_monotone = false;
    std::vector<std::string> notes;
};

/// Validates the data and fills every class flag. Cylindrical membership is
/// only tested when the data carries a circles hint.
ClassReport validate_simple(const DrawingData& data);
ClassReport classify(const Drawing& d);

/// Vertex order along the spine and the spine edges.
struct SpineStructure {
    std::vector<int> order;
    EdgeSet spine_edges;
    EdgeSet cycle_edges;  ///< polar drawings only
    bool all_cycle_edges_spine = false;
};

std::optional<SpineStructure> classify_monotone(const Drawing& d);
bool classify_two_page(const Drawing& d);

enum class EdgeRole { Inner, Outer, Side };

struct CylRoles {
    std::vector<EdgeRole> roles;  ///< by edge id
    std::vector<int> inner;       ///< inner vertices in angular order
    std::vector<int> outer;
    EdgeSet cycle_edges;
    EdgeSet crossed_cycle_edges;
    /// Hamiltonian path of uncrossed cycle edges on each circle.
    EdgeSet inner_path;
    EdgeSet outer_path;
    EdgeSet side_edges() const;
};

/// Absent unless every vertex lies on one of the circles, both circles carry
/// a vertex and no curve crosses a circle. Throws InvalidRadii if r_in2 >= r_out2.
std::optional<CylRoles> classify_cylindrical(const Drawing& d, const Rat& r_in2, const Rat& r_out2);

struct CMonotoneReport {
    bool c_monotone = false;
    bool strongly = false;
    SpineStructure spine;
};

CMonotoneReport classify_c_monotone(const Drawing& d);

/// Members of `edges` crossing at least one spine edge.
EdgeSet twiggly_set(const Drawing& d, const SpineStructure& spine, EdgeSet edges);

/// e above f: the pair does not cross and at one x inside both open
/// x-ranges e has the larger y. Pairs without common open x-range are incomparable.
bool is_above(const Drawing& d, int e, int f);

/// An edge of the set with no other member above it; the lowest id among ties.
int succ_maximal(const Drawing& d, EdgeSet twigglies);

/// Bumpy edges of a twiggly edge of a polar drawing, in order along the edge.
std::vector<int> bumpy_edges(const Drawing& d, int e);

struct CutResult {
    Drawing drawing;
    Rat cut_theta;
    std::vector<int> old_to_new_vertex;
    std::vector<int> new_to_old_vertex;
    std::vector<int> old_to_new_edge;
    std::vector<int> new_to_old_edge;
};

/// Cuts a strongly c-monotone drawing along an uncrossed ray and unrolls it into
/// an x-monotone Cartesian drawing with x = angle past the cut, y = radius.
/// Absent when every cycle edge is a spine edge.
std::optional<CutResult> cut_to_monotone(const Drawing& d);

/// Vertices around the origin sorted by exact angle.
std::vector<int> angular_order(const std::vector<Point>& pts, std::vector<int> ids);

}  // namespace cst
