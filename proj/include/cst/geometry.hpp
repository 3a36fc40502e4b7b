#pragma once

#include "cst/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cst {

struct Point {
    Rat x;
    Rat y;
    bool operator==(const Point&) const = default;
};

/// A position in polar form: angle in turns (fractions of a full revolution)
/// and a positive radius, both relative to the origin.
struct PolarPoint {
    Rat theta;
    Rat r;
    bool operator==(const PolarPoint&) const = default;
};

struct Segment {
    Point a;
    Point b;
};

/// Polyline through the waypoints.
struct CartesianCurve {
    std::vector<Point> waypoints;
};

/// Radius as a piecewise-linear function of the angle. Angles strictly
/// increase and span less than one turn, so each ray from the origin meets
/// the curve at most once.
struct PolarCurve {
    std::vector<PolarPoint> waypoints;

    const Rat& theta_begin() const { return waypoints.front().theta; }
    const Rat& theta_end() const { return waypoints.back().theta; }
    Rat span() const { return theta_end() - theta_begin(); }
};

using Curve = std::variant<CartesianCurve, PolarCurve>;

enum class DegenerateReason {
    SharedEndpoint,  ///< both curves end at the contact point
    Touch,           ///< an endpoint of one curve lies on the other
    Overlap,         ///< collinear or coincident pieces of positive length
    Breakpoint,      ///< contact exactly at an interior waypoint
};

const char* to_string(DegenerateReason reason);

/// Outcome of intersecting two curves or segments. `where` is set for the
/// Proper and Degenerate cases: a Cartesian point, or (theta, r) for polar.
struct CrossKind {
    enum class Kind { None, Proper, Degenerate };
    Kind kind = Kind::None;
    DegenerateReason reason = DegenerateReason::Touch;
    std::variant<std::monostate, Point, PolarPoint> where;

    bool is_proper() const { return kind == Kind::Proper; }
    bool is_degenerate() const { return kind == Kind::Degenerate; }
    bool operator==(const CrossKind&) const = default;
};

/// Sign of the cross product (b - a) x (c - a).
int orientation(const Point& a, const Point& b, const Point& c);

/// Point on the closed segment, exact.
bool on_segment(const Segment& s, const Point& p);

/// Proper means the open segments meet in exactly one point.
CrossKind segment_proper_crossing(const Segment& s1, const Segment& s2);

/// Pairwise segment tests, each distinct contact reported once.
/// Contacts at interior waypoints are reported as Breakpoint degeneracies and
/// contacts at the common end of both curves as SharedEndpoint.
std::vector<CrossKind> polyline_crossings(const CartesianCurve& c1, const CartesianCurve& c2);

/// Crossings of two radius profiles, found where both are defined at a common
/// angle (mod 1) with equal radius.
std::vector<CrossKind> polar_crossings(const PolarCurve& c1, const PolarCurve& c2);

/// y where the curve meets the vertical line x = at; absent outside the
/// closed x-range. Throws NonMonotoneCurve unless the curve is strictly x-monotone.
std::optional<Rat> curve_eval(const CartesianCurve& c, const Rat& at);
/// r where the ray at angle `at` (mod 1) meets the curve; absent outside the closed span.
std::optional<Rat> curve_eval(const PolarCurve& c, const Rat& at);

bool is_x_monotone(const CartesianCurve& c);

/// Unwrapped angle of `theta` measured into the curve's span: the value
/// t = theta + k with t in [theta_begin, theta_begin + 1).
Rat unwrap_into(const PolarCurve& c, const Rat& theta);

/// True iff theta (mod 1) lies in the open span of the curve.
bool in_open_span(const PolarCurve& c, const Rat& theta);

enum class CircleRelation { Disjoint, Crosses, Touches };

/// `Crosses` iff the open segment has points strictly inside and strictly
/// outside the circle of squared radius r2; `Touches` iff it does not cross but
/// the closed segment meets the circle.
CircleRelation segment_circle_relation(const Segment& s, const Point& center, const Rat& r2);

Rat squared_distance(const Point& a, const Point& b);

/// Exact point on the circle of radius `radius` around the origin at angle
/// code `code` in [0, 4): quadrant floor(code) rotated by quarter turns, inside
/// it the rational half-angle parametrization at t = frac(code). The map is
/// strictly increasing in angle but not proportional to it.
Point point_on_circle(const Rat& radius, const Rat& code);

}  // namespace cst
