#include "cst/errors.hpp"
#include "cst/transforms.hpp"

#include <algorithm>
#include <map>

namespace cst {

int ray_depth(const Drawing& d, EdgeSet edges, const Rat& theta) {
    int depth = 0;
    for (int e : edges) depth += in_open_span(d.polar_curve(e), theta) ? 1 : 0;
    return depth;
}

namespace {

std::vector<Rat> sorted_vertex_angles(const Drawing& d) {
    std::vector<Rat> angles;
    for (int v = 0; v < d.n(); ++v) angles.push_back(d.polar_point(v).theta);
    std::sort(angles.begin(), angles.end());
    return angles;
}

// Midpoints between consecutive angles of a sorted list in [0, 1), wrapping around.
std::vector<Rat> cyclic_midpoints(const std::vector<Rat>& a) {
    std::vector<Rat> out;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const Rat hi = k + 1 < a.size() ? a[k + 1] : Rat(a[0] + 1);
        out.push_back(frac(Rat((a[k] + hi) / 2)));
    }
    return out;
}

using Pair = std::pair<Bound, Bound>;

// Neighbouring bounds along the ray at theta, from the center outwards.
std::vector<Pair> stack_at(const Drawing& d, EdgeSet twigglies, const Rat& theta) {
    std::vector<std::pair<Rat, int>> hits;
    for (int e : twigglies)
        if (in_open_span(d.polar_curve(e), theta)) hits.emplace_back(*curve_eval(d.polar_curve(e), theta), e);
    std::sort(hits.begin(), hits.end());
    for (std::size_t k = 0; k + 1 < hits.size(); ++k)
        ensure(hits[k].first != hits[k + 1].first, "twiggly edges meet inside an elementary interval");
    std::vector<Pair> out;
    Bound below{Bound::Kind::Center, -1};
    for (const auto& [r, e] : hits) {
        const Bound b{Bound::Kind::Edge, e};
        out.emplace_back(below, b);
        below = b;
    }
    out.emplace_back(below, Bound{Bound::Kind::Infinity, -1});
    return out;
}

int vertex_at(const Drawing& d, const Rat& theta) {
    int found = -1;
    for (int v = 0; v < d.n(); ++v)
        if (d.polar_point(v).theta == frac(theta)) {
            ensure(found < 0, "two vertices share an angle");
            found = v;
        }
    ensure(found >= 0, "corridor boundary angle holds no vertex");
    return found;
}

// Radius of a bound at an angle where it is defined; Infinity yields nothing.
std::optional<Rat> bound_radius(const Drawing& d, const Bound& b, const Rat& theta) {
    switch (b.kind) {
        case Bound::Kind::Center: return Rat(0);
        case Bound::Kind::Infinity: return std::nullopt;
        case Bound::Kind::Edge: return curve_eval(d.polar_curve(b.edge), theta);
    }
    return std::nullopt;
}

bool strictly_between(const Drawing& d, const Corridor& c, const Rat& theta, const Rat& r) {
    const auto lo = bound_radius(d, c.lower, theta);
    ensure(c.lower.kind != Bound::Kind::Edge || lo.has_value(), "lower bound undefined inside its corridor");
    if (!(*lo < r)) return false;
    if (c.upper.kind == Bound::Kind::Infinity) return true;
    const auto hi = bound_radius(d, c.upper, theta);
    ensure(hi.has_value(), "upper bound undefined inside its corridor");
    return r < *hi;
}

}  // namespace

std::vector<Rat> depth_sample_angles(const Drawing& d) { return cyclic_midpoints(sorted_vertex_angles(d)); }

std::vector<Corridor> corridors(const Drawing& d, EdgeSet twigglies) {
    ensure(d.backend() == Backend::Polar, "corridors need a polar drawing");
    std::vector<Rat> events;
    for (int e : twigglies) {
        events.push_back(frac(d.polar_curve(e).theta_begin()));
        events.push_back(frac(d.polar_curve(e).theta_end()));
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    if (events.empty()) {
        Corridor full{Rat(0), Rat(1), {Bound::Kind::Center, -1}, {Bound::Kind::Infinity, -1}, {}, {}, {make_rat(1, 2)}};
        return {full};
    }

    const int m = static_cast<int>(events.size());
    const std::vector<Rat> mids = cyclic_midpoints(events);
    std::vector<std::vector<Pair>> pairs;
    for (const Rat& mid : mids) pairs.push_back(stack_at(d, twigglies, mid));
    auto present = [&](int k, const Pair& p) {
        const auto& row = pairs[((k % m) + m) % m];
        return std::find(row.begin(), row.end(), p) != row.end();
    };
    // Unwrapped angle of event index k, counting full turns past the last event.
    auto event_at = [&](int k) { return Rat(events[k % m] + k / m); };

    std::vector<Corridor> out;
    for (int k = 0; k < m; ++k)
        for (const Pair& p : pairs[k]) {
            if (present(k - 1, p)) continue;
            int len = 1;
            while (len < m && present(k + len, p)) ++len;
            Corridor c;
            c.begin = events[k];
            c.end = event_at(k + len);
            c.lower = p.first;
            c.upper = p.second;
            c.start_vertex = vertex_at(d, c.begin);
            c.end_vertex = vertex_at(d, c.end);
            for (int i = 0; i < len; ++i) c.samples.push_back(mids[(k + i) % m]);
            out.push_back(std::move(c));
        }
    return out;
}

EdgeSet corridor_path(const Drawing& d, EdgeSet t, const Corridor& c) {
    if (c.full_circle()) fail(ErrorKind::FullCircleCorridor, "the full-circle corridor has no end vertices");
    auto unwrap = [&](const Rat& theta) { return Rat(c.begin + frac(Rat(theta - c.begin))); };

    std::vector<std::pair<Rat, int>> inside;
    for (int v = 0; v < d.n(); ++v) {
        if (v == *c.start_vertex || v == *c.end_vertex) continue;
        const Rat a = unwrap(d.polar_point(v).theta);
        if (a > c.begin && a < c.end && strictly_between(d, c, d.polar_point(v).theta, d.polar_point(v).r))
            inside.emplace_back(a, v);
    }
    std::sort(inside.begin(), inside.end());
    std::vector<std::pair<Rat, int>> walk{{c.begin, *c.start_vertex}};
    walk.insert(walk.end(), inside.begin(), inside.end());
    walk.emplace_back(c.end, *c.end_vertex);

    EdgeSet path;
    for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
        const auto [a0, p] = walk[k];
        const auto [a1, q] = walk[k + 1];
        const int e = d.edge_id(p, q);
        ensure(e >= 0, "corridor path step joins non-adjacent vertices");
        const PolarCurve& ce = d.polar_curve(e);
        ensure(frac(ce.theta_begin()) == frac(a0) && ce.span() == a1 - a0, "corridor path edge leaves the sub-arc");
        path.insert(e);
        // A bounding edge itself runs along the corridor's boundary.
        if ((c.lower.kind == Bound::Kind::Edge && c.lower.edge == e) ||
            (c.upper.kind == Bound::Kind::Edge && c.upper.edge == e))
            continue;

        // The edge and the bounds are piecewise linear; test every breakpoint
        // in the open sub-arc and the midpoints of the pieces between them.
        std::vector<Rat> marks{a0, a1};
        auto add_marks = [&](const PolarCurve& curve) {
            for (const auto& w : curve.waypoints) {
                const Rat a = Rat(a0 + frac(Rat(w.theta - a0)));
                if (a > a0 && a < a1) marks.push_back(a);
            }
        };
        add_marks(ce);
        if (c.lower.kind == Bound::Kind::Edge) add_marks(d.polar_curve(c.lower.edge));
        if (c.upper.kind == Bound::Kind::Edge) add_marks(d.polar_curve(c.upper.edge));
        std::sort(marks.begin(), marks.end());
        marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
        for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
            const Rat mid = (marks[i] + marks[i + 1]) / 2;
            ensure(strictly_between(d, c, frac(mid), *curve_eval(ce, frac(mid))), "corridor path edge leaves the corridor");
            if (i > 0)
                ensure(strictly_between(d, c, frac(marks[i]), *curve_eval(ce, frac(marks[i]))),
                       "corridor path edge leaves the corridor");
        }
    }
    ensure(!d.crossed_by(path).intersects(t), "corridor path crosses the tree");
    if (c.is_inner() || c.is_outer()) {
        const CMonotoneReport cm = classify_c_monotone(d);
        ensure(twiggly_set(d, cm.spine, path).empty(), "inner or outer corridor path uses a twiggly edge");
    }
    return path;
}

}  // namespace cst
