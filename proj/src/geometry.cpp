#include "cst/geometry.hpp"

#include "cst/errors.hpp"

#include <algorithm>

namespace cst {

const char* to_string(DegenerateReason reason) {
    switch (reason) {
        case DegenerateReason::SharedEndpoint: return "shared endpoint";
        case DegenerateReason::Touch: return "touch";
        case DegenerateReason::Overlap: return "overlap";
        case DegenerateReason::Breakpoint: return "breakpoint";
    }
    return "unknown";
}

namespace {

Rat cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
Point sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Rat dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

CrossKind degenerate(DegenerateReason reason, Point where) {
    CrossKind k;
    k.kind = CrossKind::Kind::Degenerate;
    k.reason = reason;
    k.where = std::move(where);
    return k;
}

CrossKind degenerate(DegenerateReason reason, PolarPoint where) {
    CrossKind k;
    k.kind = CrossKind::Kind::Degenerate;
    k.reason = reason;
    k.where = std::move(where);
    return k;
}

bool is_endpoint(const Segment& s, const Point& p) { return s.a == p || s.b == p; }

bool boxes_disjoint(const Segment& s1, const Segment& s2) {
    auto [x1lo, x1hi] = std::minmax(s1.a.x, s1.b.x);
    auto [x2lo, x2hi] = std::minmax(s2.a.x, s2.b.x);
    if (x1hi < x2lo || x2hi < x1lo) return true;
    auto [y1lo, y1hi] = std::minmax(s1.a.y, s1.b.y);
    auto [y2lo, y2hi] = std::minmax(s2.a.y, s2.b.y);
    return y1hi < y2lo || y2hi < y1lo;
}

void push_unique(std::vector<CrossKind>& out, CrossKind k) {
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(std::move(k));
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
    return sgn(cross(sub(b, a), sub(c, a)));
}

bool on_segment(const Segment& s, const Point& p) {
    if (orientation(s.a, s.b, p) != 0) return false;
    auto [xlo, xhi] = std::minmax(s.a.x, s.b.x);
    auto [ylo, yhi] = std::minmax(s.a.y, s.b.y);
    return xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi;
}

Rat squared_distance(const Point& a, const Point& b) {
    const Point d = sub(a, b);
    return dot(d, d);
}

CrossKind segment_proper_crossing(const Segment& s1, const Segment& s2) {
    if (boxes_disjoint(s1, s2)) return {};
    const int o1 = orientation(s1.a, s1.b, s2.a);
    const int o2 = orientation(s1.a, s1.b, s2.b);
    const int o3 = orientation(s2.a, s2.b, s1.a);
    const int o4 = orientation(s2.a, s2.b, s1.b);

    if (o1 == 0 && o2 == 0) {
        auto [p1, p2] = std::minmax(s1.a, s1.b, lex_less);
        auto [q1, q2] = std::minmax(s2.a, s2.b, lex_less);
        const Point& lo = lex_less(p1, q1) ? q1 : p1;
        const Point& hi = lex_less(p2, q2) ? p2 : q2;
        if (lex_less(hi, lo)) return {};
        if (lo == hi) return degenerate(DegenerateReason::SharedEndpoint, lo);
        return degenerate(DegenerateReason::Overlap, lo);
    }

    if (o1 * o2 < 0 && o3 * o4 < 0) {
        const Point d1 = sub(s1.b, s1.a);
        const Point d2 = sub(s2.b, s2.a);
        const Rat t = cross(sub(s2.a, s1.a), d2) / cross(d1, d2);
        CrossKind k;
        k.kind = CrossKind::Kind::Proper;
        k.where = Point{s1.a.x + t * d1.x, s1.a.y + t * d1.y};
        return k;
    }

    auto touch = [&](const Point& p) {
        const bool both = is_endpoint(s1, p) && is_endpoint(s2, p);
        return degenerate(both ? DegenerateReason::SharedEndpoint : DegenerateReason::Touch, p);
    };
    if (o1 == 0 && on_segment(s1, s2.a)) return touch(s2.a);
    if (o2 == 0 && on_segment(s1, s2.b)) return touch(s2.b);
    if (o3 == 0 && on_segment(s2, s1.a)) return touch(s1.a);
    if (o4 == 0 && on_segment(s2, s1.b)) return touch(s1.b);
    return {};
}

std::vector<CrossKind> polyline_crossings(const CartesianCurve& c1, const CartesianCurve& c2) {
    std::vector<CrossKind> out;
    const auto& w1 = c1.waypoints;
    const auto& w2 = c2.waypoints;
    auto is_curve_end = [](const std::vector<Point>& w, const Point& p) {
        return w.front() == p || w.back() == p;
    };
    auto is_interior_waypoint = [](const std::vector<Point>& w, const Point& p) {
        return std::find(w.begin() + 1, w.end() - 1, p) != w.end() - 1;
    };
    for (std::size_t i = 0; i + 1 < w1.size(); ++i) {
        const Segment s1{w1[i], w1[i + 1]};
        for (std::size_t j = 0; j + 1 < w2.size(); ++j) {
            CrossKind k = segment_proper_crossing(s1, Segment{w2[j], w2[j + 1]});
            if (k.kind == CrossKind::Kind::None) continue;
            if (k.is_degenerate() && k.reason != DegenerateReason::Overlap) {
                const Point& p = std::get<Point>(k.where);
                if (is_curve_end(w1, p) && is_curve_end(w2, p))
                    k.reason = DegenerateReason::SharedEndpoint;
                else if (is_interior_waypoint(w1, p) || is_interior_waypoint(w2, p))
                    k.reason = DegenerateReason::Breakpoint;
                else
                    k.reason = DegenerateReason::Touch;
            }
            push_unique(out, std::move(k));
        }
    }
    return out;
}

namespace {

// Radius at unwrapped angle t inside the closed span; the caller guarantees range.
Rat eval_unwrapped(const PolarCurve& c, const Rat& t) {
    const auto& w = c.waypoints;
    auto it = std::lower_bound(w.begin(), w.end(), t,
                               [](const PolarPoint& p, const Rat& v) { return p.theta < v; });
    if (it == w.end()) it = w.end() - 1;
    if (it->theta == t) return it->r;
    const PolarPoint& hi = *it;
    const PolarPoint& lo = *(it - 1);
    return lo.r + (hi.r - lo.r) * (t - lo.theta) / (hi.theta - lo.theta);
}

Rat ceil_rat(const Rat& q) { return -floor_rat(Rat(-q)); }

}  // namespace

Rat unwrap_into(const PolarCurve& c, const Rat& theta) {
    return c.theta_begin() + frac(theta - c.theta_begin());
}

bool in_open_span(const PolarCurve& c, const Rat& theta) {
    const Rat t = unwrap_into(c, theta);
    return t > c.theta_begin() && t < c.theta_end();
}

std::vector<CrossKind> polar_crossings(const PolarCurve& c1, const PolarCurve& c2) {
    std::vector<CrossKind> out;
    const Rat& a0 = c1.theta_begin();
    const Rat& a1 = c1.theta_end();
    const Rat& b0 = c2.theta_begin();
    const Rat& b1 = c2.theta_end();
    const Rat kmin = ceil_rat(Rat(a0 - b1));
    const Rat kmax = floor_rat(Rat(a1 - b0));

    for (Rat k = kmin; k <= kmax; k += 1) {
        const Rat lo = std::max(a0, Rat(b0 + k));
        const Rat hi = std::min(a1, Rat(b1 + k));
        if (lo > hi) continue;

        auto c1_end = [&](const Rat& t) { return t == a0 || t == a1; };
        auto c2_end = [&](const Rat& t) { return t == b0 + k || t == b1 + k; };
        auto zero_reason = [&](const Rat& t) {
            const bool e1 = c1_end(t), e2 = c2_end(t);
            if (e1 && e2) return DegenerateReason::SharedEndpoint;
            if (e1 || e2) {
                // One curve ends on the other; a kink of the other there is still a breakpoint hit.
                const PolarCurve& other = e1 ? c2 : c1;
                const Rat local = e1 ? Rat(t - k) : t;
                for (std::size_t i = 1; i + 1 < other.waypoints.size(); ++i)
                    if (other.waypoints[i].theta == local) return DegenerateReason::Breakpoint;
                return DegenerateReason::Touch;
            }
            return DegenerateReason::Breakpoint;
        };

        std::vector<Rat> ts{lo};
        for (const auto& p : c1.waypoints)
            if (p.theta > lo && p.theta < hi) ts.push_back(p.theta);
        for (const auto& p : c2.waypoints) {
            Rat t = p.theta + k;
            if (t > lo && t < hi) ts.push_back(std::move(t));
        }
        if (hi != lo) ts.push_back(hi);
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

        std::vector<Rat> diff;
        diff.reserve(ts.size());
        for (const Rat& t : ts) diff.push_back(eval_unwrapped(c1, t) - eval_unwrapped(c2, Rat(t - k)));

        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (diff[j] == 0)
                push_unique(out, degenerate(zero_reason(ts[j]),
                                            PolarPoint{frac(ts[j]), eval_unwrapped(c1, ts[j])}));
        }
        for (std::size_t j = 0; j + 1 < ts.size(); ++j) {
            const int s0 = sgn(diff[j]), s1 = sgn(diff[j + 1]);
            if (s0 == 0 && s1 == 0) {
                push_unique(out, degenerate(DegenerateReason::Overlap,
                                            PolarPoint{frac(ts[j]), eval_unwrapped(c1, ts[j])}));
            } else if (s0 * s1 < 0) {
                const Rat t = ts[j] + (ts[j + 1] - ts[j]) * diff[j] / (diff[j] - diff[j + 1]);
                CrossKind kk;
                kk.kind = CrossKind::Kind::Proper;
                kk.where = PolarPoint{frac(t), eval_unwrapped(c1, t)};
                push_unique(out, std::move(kk));
            }
        }
    }
    return out;
}

bool is_x_monotone(const CartesianCurve& c) {
    const auto& w = c.waypoints;
    if (w.size() < 2) return false;
    const int dir = sgn(Rat(w[1].x - w[0].x));
    if (dir == 0) return false;
    for (std::size_t i = 1; i + 1 < w.size(); ++i)
        if (sgn(Rat(w[i + 1].x - w[i].x)) != dir) return false;
    return true;
}

std::optional<Rat> curve_eval(const CartesianCurve& c, const Rat& at) {
    if (!is_x_monotone(c)) fail(ErrorKind::NonMonotoneCurve, "y-at-x query on a curve that is not x-monotone");
    const auto& w = c.waypoints;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        auto [lo, hi] = std::minmax(w[i].x, w[i + 1].x);
        if (at < lo || at > hi) continue;
        return w[i].y + (w[i + 1].y - w[i].y) * (at - w[i].x) / (w[i + 1].x - w[i].x);
    }
    return std::nullopt;
}

std::optional<Rat> curve_eval(const PolarCurve& c, const Rat& at) {
    const Rat t = unwrap_into(c, at);
    if (t > c.theta_end()) return std::nullopt;
    return eval_unwrapped(c, t);
}

CircleRelation segment_circle_relation(const Segment& s, const Point& center, const Rat& r2) {
    const Point p = sub(s.a, center);
    const Point d = sub(s.b, s.a);
    const Rat dd = dot(d, d);
    const Rat pd = dot(p, d);
    const Rat f0 = dot(p, p) - r2;
    const Rat f1 = squared_distance(s.b, center) - r2;
    const Rat tstar = -pd / dd;
    const Rat fstar = dot(p, p) - pd * pd / dd - r2;

    const Rat fmax = std::max(f0, f1);
    const Rat end_min = std::min(f0, f1);
    const Rat open_min = (tstar > 0 && tstar < 1) ? fstar : end_min;
    if (fmax > 0 && open_min < 0) return CircleRelation::Crosses;
    const Rat closed_min = (tstar >= 0 && tstar <= 1) ? std::min(fstar, end_min) : end_min;
    if (closed_min <= 0 && fmax >= 0) return CircleRelation::Touches;
    return CircleRelation::Disjoint;
}

Point point_on_circle(const Rat& radius, const Rat& code) {
    const Rat t = frac(code);
    const Rat q = floor_rat(code);
    long quadrant = q.get_num().get_si() % 4;
    if (quadrant < 0) quadrant += 4;
    const Rat den = 1 + t * t;
    Point u{(1 - t * t) / den, 2 * t / den};
    for (long i = 0; i < quadrant; ++i) u = Point{-u.y, u.x};
    return {radius * u.x, radius * u.y};
}

}  // namespace cst
