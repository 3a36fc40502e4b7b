#include "cst/drawing.hpp"

#include "cst/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cst {

namespace {

std::string pair_name(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

[[noreturn]] void not_simple(const Edge& e, const Edge& f, int id, const char* reason) {
    fail(ErrorKind::NotSimple, "edges " + pair_name(e) + " and " + pair_name(f) + ": " + reason, id);
}

[[noreturn]] void not_simple(const Edge& e, int id, const char* reason) {
    fail(ErrorKind::NotSimple, "edge " + pair_name(e) + ": " + reason, id);
}

std::vector<std::pair<int, int>> expected_edges(const DrawingData& d) {
    std::vector<std::pair<int, int>> out;
    if (d.graph.bipartite) {
        for (int u = 0; u < d.graph.part_a; ++u)
            for (int v = d.graph.part_a; v < d.n; ++v) out.emplace_back(u, v);
    } else {
        for (int u = 0; u < d.n; ++u)
            for (int v = u + 1; v < d.n; ++v) out.emplace_back(u, v);
    }
    return out;
}

void check_cartesian_curve(const DrawingData& d, Edge& e, int id) {
    auto* c = std::get_if<CartesianCurve>(&e.curve);
    if (c == nullptr) fail(ErrorKind::ParseError, "edge " + pair_name(e) + ": curve does not match backend");
    auto& w = c->waypoints;
    if (w.size() < 2) fail(ErrorKind::ParseError, "edge " + pair_name(e) + ": fewer than two waypoints");
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) fail(ErrorKind::ParseError, "edge " + pair_name(e) + ": zero-length segment");
    const Point& pu = d.points[e.u];
    const Point& pv = d.points[e.v];
    if (w.front() == pv && w.back() == pu) std::reverse(w.begin(), w.end());
    if (!(w.front() == pu && w.back() == pv))
        fail(ErrorKind::ParseError, "edge " + pair_name(e) + ": curve does not join its endpoints");

    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const Segment si{w[i], w[i + 1]};
        for (std::size_t j = i + 1; j + 1 < w.size(); ++j) {
            const CrossKind k = segment_proper_crossing(si, Segment{w[j], w[j + 1]});
            if (k.kind == CrossKind::Kind::None) continue;
            const bool consecutive_joint = j == i + 1 && k.is_degenerate() &&
                                           k.reason == DegenerateReason::SharedEndpoint &&
                                           std::get<Point>(k.where) == w[j];
            if (!consecutive_joint) not_simple(e, id, "degenerate contact (self intersection)");
        }
        for (int x = 0; x < d.n; ++x) {
            if (x == e.u || x == e.v) continue;
            if (on_segment(si, d.points[x])) not_simple(e, id, "vertex on curve");
        }
    }
}

void check_polar_curve(const DrawingData& d, const Edge& e, int id) {
    const auto* c = std::get_if<PolarCurve>(&e.curve);
    if (c == nullptr) fail(ErrorKind::ParseError, "edge " + pair_name(e) + ": curve does not match backend");
    const auto& w = c->waypoints;
    if (w.size() < 2) fail(ErrorKind::ParseError, "edge " + pair_name(e) + ": fewer than two waypoints");
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].r <= 0) fail(ErrorKind::ParseError, "edge " + pair_name(e) + ": non-positive radius");
        if (i + 1 < w.size() && !(w[i].theta < w[i + 1].theta))
            fail(ErrorKind::ParseError, "edge " + pair_name(e) + ": angles not strictly increasing");
    }
    if (!(c->span() < 1)) fail(ErrorKind::ParseError, "edge " + pair_name(e) + ": span of a full turn or more");
    auto at_vertex = [&](const PolarPoint& p, int v) {
        return frac(p.theta) == d.polar[v].theta && p.r == d.polar[v].r;
    };
    const bool forward = at_vertex(w.front(), e.u) && at_vertex(w.back(), e.v);
    const bool backward = at_vertex(w.front(), e.v) && at_vertex(w.back(), e.u);
    if (!forward && !backward)
        fail(ErrorKind::ParseError, "edge " + pair_name(e) + ": curve does not join its endpoints");
    for (int x = 0; x < d.n; ++x) {
        if (x == e.u || x == e.v) continue;
        if (in_open_span(*c, d.polar[x].theta) && *curve_eval(*c, d.polar[x].theta) == d.polar[x].r)
            not_simple(e, id, "vertex on curve");
    }
}

bool contact_is_common_vertex(const DrawingData& d, const CrossKind& k, int v) {
    if (!k.is_degenerate() || k.reason != DegenerateReason::SharedEndpoint) return false;
    if (d.backend == Backend::Cartesian) return std::get<Point>(k.where) == d.points[v];
    return std::get<PolarPoint>(k.where) == d.polar[v];
}

}  // namespace

Drawing Drawing::build(DrawingData data) {
    if (data.n < 1) fail(ErrorKind::ParseError, "drawing needs at least one vertex");
    if (data.graph.bipartite &&
        (data.graph.part_a < 1 || data.graph.part_b < 1 || data.graph.part_a + data.graph.part_b != data.n))
        fail(ErrorKind::ParseError, "bipartite parts do not sum to n");
    if (data.backend == Backend::Cartesian) {
        if (static_cast<int>(data.points.size()) != data.n) fail(ErrorKind::ParseError, "vertex count differs from n");
        for (int a = 0; a < data.n; ++a)
            for (int b = a + 1; b < data.n; ++b)
                if (data.points[a] == data.points[b]) fail(ErrorKind::ParseError, "coincident vertices");
    } else {
        if (static_cast<int>(data.polar.size()) != data.n) fail(ErrorKind::ParseError, "vertex count differs from n");
        for (const auto& p : data.polar)
            if (p.r <= 0 || p.theta < 0 || p.theta >= 1)
                fail(ErrorKind::ParseError, "polar vertex needs theta in [0, 1) and r > 0");
        for (int a = 0; a < data.n; ++a)
            for (int b = a + 1; b < data.n; ++b)
                if (data.polar[a] == data.polar[b]) fail(ErrorKind::ParseError, "coincident vertices");
    }

    for (auto& e : data.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= data.n || e.v >= data.n || e.u == e.v)
            fail(ErrorKind::ParseError, "edge with invalid endpoints " + pair_name(e));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(data.edges.begin(), data.edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    const auto expected = expected_edges(data);
    if (expected.size() > static_cast<std::size_t>(kMaxEdges))
        fail(ErrorKind::TooLarge, "more than " + std::to_string(kMaxEdges) + " edges");
    if (expected.size() != data.edges.size())
        fail(ErrorKind::ParseError, "edge list does not cover the declared graph exactly");
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (expected[i] != std::make_pair(data.edges[i].u, data.edges[i].v))
            fail(ErrorKind::ParseError, "edge list does not cover the declared graph exactly");

    Drawing d;
    const int m = static_cast<int>(data.edges.size());
    for (int id = 0; id < m; ++id) {
        if (data.backend == Backend::Cartesian)
            check_cartesian_curve(data, data.edges[id], id);
        else
            check_polar_curve(data, data.edges[id], id);
    }

    d.ids_.assign(static_cast<std::size_t>(data.n) * data.n, -1);
    for (int id = 0; id < m; ++id) {
        d.ids_[data.edges[id].u * data.n + data.edges[id].v] = id;
        d.ids_[data.edges[id].v * data.n + data.edges[id].u] = id;
    }

    d.cross_.assign(m, EdgeSet{});
    for (int a = 0; a < m; ++a) {
        const Edge& e = data.edges[a];
        for (int b = a + 1; b < m; ++b) {
            const Edge& f = data.edges[b];
            const std::vector<CrossKind> ks =
                data.backend == Backend::Cartesian
                    ? polyline_crossings(std::get<CartesianCurve>(e.curve), std::get<CartesianCurve>(f.curve))
                    : polar_crossings(std::get<PolarCurve>(e.curve), std::get<PolarCurve>(f.curve));
            int common = -1;
            if (e.u == f.u || e.u == f.v) common = e.u;
            if (e.v == f.u || e.v == f.v) common = e.v;
            int proper = 0;
            for (const auto& k : ks) {
                if (k.is_proper()) {
                    ++proper;
                } else if (common < 0 || !contact_is_common_vertex(data, k, common)) {
                    not_simple(e, f, a, "degenerate contact");
                }
            }
            if (common >= 0 && proper > 0) not_simple(e, f, a, "adjacent crossing");
            if (proper > 1) not_simple(e, f, a, "double crossing");
            if (proper == 1) {
                d.cross_[a].insert(b);
                d.cross_[b].insert(a);
            }
        }
    }
    d.data_ = std::move(data);
    return d;
}

EdgeSet Drawing::all_edges() const {
    const int m = edge_count();
    return EdgeSet(m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
}

EdgeSet Drawing::crossed_by(EdgeSet s) const {
    EdgeSet out;
    for (int e : s) out |= cross_[e];
    return out;
}

int Drawing::crossing_count() const {
    int total = 0;
    for (const auto& row : cross_) total += row.size();
    return total / 2;
}

bool Drawing::adjacent(int e, int f) const { return common_vertex(e, f) >= 0; }

int Drawing::common_vertex(int e, int f) const {
    const Edge& a = edge(e);
    const Edge& b = edge(f);
    if (a.u == b.u || a.u == b.v) return a.u;
    if (a.v == b.u || a.v == b.v) return a.v;
    return -1;
}

std::vector<int> angular_order(const std::vector<Point>& pts, std::vector<int> ids) {
    auto half = [&](int v) {
        const Point& p = pts[v];
        return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1;
    };
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        const int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        return sgn(Rat(pts[a].x * pts[b].y - pts[a].y * pts[b].x)) > 0;
    });
    return ids;
}

std::optional<SpineStructure> classify_monotone(const Drawing& d) {
    if (d.backend() != Backend::Cartesian || d.graph().bipartite) return std::nullopt;
    std::vector<int> order(d.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d.point(a).x < d.point(b).x; });
    for (int i = 0; i + 1 < d.n(); ++i)
        if (d.point(order[i]).x == d.point(order[i + 1]).x) return std::nullopt;
    for (int e = 0; e < d.edge_count(); ++e)
        if (!is_x_monotone(d.cartesian_curve(e))) return std::nullopt;
    SpineStructure s;
    for (int i = 0; i + 1 < d.n(); ++i) s.spine_edges.insert(d.edge_id(order[i], order[i + 1]));
    s.order = std::move(order);
    return s;
}

bool classify_two_page(const Drawing& d) {
    if (d.backend() != Backend::Cartesian) return false;
    const Rat& line = d.point(0).y;
    for (int v = 1; v < d.n(); ++v)
        if (d.point(v).y != line) return false;
    for (int e = 0; e < d.edge_count(); ++e) {
        const auto& w = d.cartesian_curve(e).waypoints;
        if (w.size() < 3) return false;
        const int side = sgn(Rat(w[1].y - line));
        if (side == 0) return false;
        for (std::size_t i = 1; i + 1 < w.size(); ++i)
            if (sgn(Rat(w[i].y - line)) != side) return false;
    }
    return true;
}

EdgeSet CylRoles::side_edges() const {
    EdgeSet s;
    for (std::size_t e = 0; e < roles.size(); ++e)
        if (roles[e] == EdgeRole::Side) s.insert(static_cast<int>(e));
    return s;
}

namespace {

// Cycle edges of one circle and its uncrossed Hamiltonian path.
void circle_cycle(const Drawing& d, const std::vector<int>& ring, CylRoles& roles, EdgeSet& path,
                  const std::vector<EdgeRole>& role_of, EdgeRole own) {
    const int k = static_cast<int>(ring.size());
    if (k < 2) return;
    EdgeSet cycle;
    if (k == 2) {
        cycle.insert(d.edge_id(ring[0], ring[1]));
    } else {
        for (int i = 0; i < k; ++i) cycle.insert(d.edge_id(ring[i], ring[(i + 1) % k]));
    }
    EdgeSet crossed;
    for (int e : cycle) {
        if (d.cross_mask(e).empty()) continue;
        crossed.insert(e);
        for (int f : d.cross_mask(e))
            ensure(role_of[f] == EdgeRole::Side, "cycle edge crossed by a non-side edge");
    }
    ensure(crossed.size() <= 1, "more than one crossed cycle edge on a circle");
    (void)own;
    roles.cycle_edges |= cycle;
    roles.crossed_cycle_edges |= crossed;
    if (k == 2) {
        ensure(crossed.empty(), "the only cycle edge of a two-vertex circle is crossed");
        path = cycle;
    } else {
        path = cycle;
        path.erase(crossed.empty() ? cycle.max_id() : crossed.min_id());
    }
}

}  // namespace

std::optional<CylRoles> classify_cylindrical(const Drawing& d, const Rat& r_in2, const Rat& r_out2) {
    if (!(r_in2 > 0) || !(r_in2 < r_out2)) fail(ErrorKind::InvalidRadii, "need 0 < r_in2 < r_out2");
    if (d.backend() != Backend::Cartesian) return std::nullopt;
    const Point origin{0, 0};
    std::vector<int> inner, outer;
    for (int v = 0; v < d.n(); ++v) {
        const Rat q = squared_distance(d.point(v), origin);
        if (q == r_in2)
            inner.push_back(v);
        else if (q == r_out2)
            outer.push_back(v);
        else
            return std::nullopt;
    }
    if (inner.empty() || outer.empty()) return std::nullopt;
    for (int e = 0; e < d.edge_count(); ++e) {
        const auto& w = d.cartesian_curve(e).waypoints;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (i > 0) {
                const Rat q = squared_distance(w[i], origin);
                if (q == r_in2 || q == r_out2) return std::nullopt;
            }
            const Segment s{w[i], w[i + 1]};
            if (segment_circle_relation(s, origin, r_in2) == CircleRelation::Crosses ||
                segment_circle_relation(s, origin, r_out2) == CircleRelation::Crosses)
                return std::nullopt;
        }
    }
    CylRoles roles;
    std::vector<bool> is_inner(d.n(), false);
    for (int v : inner) is_inner[v] = true;
    roles.roles.resize(d.edge_count());
    for (int e = 0; e < d.edge_count(); ++e) {
        const bool a = is_inner[d.edge(e).u], b = is_inner[d.edge(e).v];
        roles.roles[e] = (a && b) ? EdgeRole::Inner : (!a && !b) ? EdgeRole::Outer : EdgeRole::Side;
    }
    roles.inner = angular_order(d.data().points, inner);
    roles.outer = angular_order(d.data().points, outer);
    circle_cycle(d, roles.inner, roles, roles.inner_path, roles.roles, EdgeRole::Inner);
    circle_cycle(d, roles.outer, roles, roles.outer_path, roles.roles, EdgeRole::Outer);
    return roles;
}

namespace {

// Closed span of `b` covers the open gap left by `a`, i.e. the two spans cover the circle.
bool spans_cover_circle(const PolarCurve& a, const PolarCurve& b) {
    const Rat gap_start = a.theta_end();
    const Rat gap_end = a.theta_begin() + 1;
    const Rat k = floor_rat(Rat(gap_start - b.theta_begin()));
    return b.theta_begin() + k <= gap_start && b.theta_end() + k >= gap_end;
}

}  // namespace

CMonotoneReport classify_c_monotone(const Drawing& d) {
    CMonotoneReport rep;
    if (d.backend() != Backend::Polar || d.graph().bipartite || d.n() < 3) return rep;
    for (int v = 1; v < d.n(); ++v)
        if (d.polar_point(v).r != d.polar_point(0).r) return rep;
    rep.c_monotone = true;

    std::vector<int> order(d.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return d.polar_point(a).theta < d.polar_point(b).theta; });
    SpineStructure& s = rep.spine;
    s.all_cycle_edges_spine = true;
    for (int i = 0; i < d.n(); ++i) {
        const int a = order[i], b = order[(i + 1) % d.n()];
        const int e = d.edge_id(a, b);
        s.cycle_edges.insert(e);
        const Rat gap = frac(Rat(d.polar_point(b).theta - d.polar_point(a).theta));
        const PolarCurve& c = d.polar_curve(e);
        if (frac(c.theta_begin()) == d.polar_point(a).theta && c.span() == gap)
            s.spine_edges.insert(e);
        else
            s.all_cycle_edges_spine = false;
    }
    s.order = std::move(order);

    rep.strongly = true;
    for (int e = 0; e < d.edge_count() && rep.strongly; ++e)
        for (int f = e + 1; f < d.edge_count(); ++f)
            if (spans_cover_circle(d.polar_curve(e), d.polar_curve(f))) {
                rep.strongly = false;
                break;
            }
    return rep;
}

ClassReport classify(const Drawing& d) {
    ClassReport rep;
    rep.is_simple = true;
    rep.is_monotone = classify_monotone(d).has_value();
    rep.is_two_page = classify_two_page(d);
    if (d.circles()) {
        if (auto roles = classify_cylindrical(d, d.circles()->r_in2, d.circles()->r_out2)) {
            rep.cylindrical = CylInfo{d.circles()->r_in2, d.circles()->r_out2, roles->inner, roles->outer};
        } else {
            rep.notes.push_back("circles hint given but the drawing is not cylindrical for it");
        }
    } else if (d.backend() == Backend::Cartesian) {
        rep.notes.push_back("no circles hint; cylindrical test skipped");
    }
    const CMonotoneReport cm = classify_c_monotone(d);
    rep.is_c_monotone = cm.c_monotone;
    rep.is_strongly_c_monotone = cm.strongly;
    if (cm.strongly && !cm.spine.all_cycle_edges_spine)
        rep.notes.push_back("strongly c-monotone with a non-spine cycle edge; cuts to a monotone drawing");
    return rep;
}

ClassReport validate_simple(const DrawingData& data) { return classify(Drawing::build(data)); }

EdgeSet twiggly_set(const Drawing& d, const SpineStructure& spine, EdgeSet edges) {
    EdgeSet out;
    for (int e : edges)
        if (d.cross_mask(e).intersects(spine.spine_edges)) out.insert(e);
    return out;
}

bool is_above(const Drawing& d, int e, int f) {
    if (e == f || d.crosses(e, f)) return false;
    const auto& ce = d.cartesian_curve(e);
    const auto& cf = d.cartesian_curve(f);
    auto [elo, ehi] = std::minmax(ce.waypoints.front().x, ce.waypoints.back().x);
    auto [flo, fhi] = std::minmax(cf.waypoints.front().x, cf.waypoints.back().x);
    const Rat lo = std::max(elo, flo);
    const Rat hi = std::min(ehi, fhi);
    if (!(lo < hi)) return false;
    const Rat x = (lo + hi) / 2;
    return *curve_eval(ce, x) > *curve_eval(cf, x);
}

int succ_maximal(const Drawing& d, EdgeSet twigglies) {
    if (twigglies.empty()) fail(ErrorKind::EmptySet, "no twiggly edges to choose from");
    for (int e : twigglies) {
        bool dominated = false;
        for (int f : twigglies)
            if (is_above(d, f, e)) {
                dominated = true;
                break;
            }
        if (!dominated) return e;
    }
    ensure(false, "above relation is cyclic on a non-crossing set");
    return -1;
}

namespace {

int vertex_at_angle(const Drawing& d, int e, const Rat& theta) {
    const Edge& ed = d.edge(e);
    return d.polar_point(ed.u).theta == frac(theta) ? ed.u : ed.v;
}

}  // namespace

std::vector<int> bumpy_edges(const Drawing& d, int e) {
    const CMonotoneReport cm = classify_c_monotone(d);
    if (!cm.c_monotone) fail(ErrorKind::NotStronglyCMonotone, "bumpy edges need a c-monotone drawing");
    if (!d.cross_mask(e).intersects(cm.spine.spine_edges))
        fail(ErrorKind::NotTwiggly, "edge " + std::to_string(e) + " crosses no spine edge", e);
    const PolarCurve& ce = d.polar_curve(e);
    std::vector<std::pair<Rat, int>> hits;
    for (int s : d.cross_mask(e) & cm.spine.spine_edges) {
        for (const CrossKind& k : polar_crossings(ce, d.polar_curve(s)))
            if (k.is_proper()) hits.emplace_back(unwrap_into(ce, std::get<PolarPoint>(k.where).theta), s);
    }
    std::sort(hits.begin(), hits.end());
    std::vector<int> before{vertex_at_angle(d, e, ce.theta_begin())};
    std::vector<int> after;
    for (const auto& [t, s] : hits) {
        const PolarCurve& cs = d.polar_curve(s);
        before.push_back(vertex_at_angle(d, s, cs.theta_begin()));
        after.push_back(vertex_at_angle(d, s, cs.theta_end()));
    }
    after.push_back(vertex_at_angle(d, e, ce.theta_end()));
    std::vector<int> out;
    for (std::size_t i = 0; i < after.size(); ++i) out.push_back(d.edge_id(before[i], after[i]));
    return out;
}

std::optional<CutResult> cut_to_monotone(const Drawing& d) {
    const CMonotoneReport cm = classify_c_monotone(d);
    if (!cm.strongly) fail(ErrorKind::NotStronglyCMonotone, "cut needs a strongly c-monotone drawing");
    if (cm.spine.all_cycle_edges_spine) return std::nullopt;
    const auto& order = cm.spine.order;
    int first = -1;
    for (int i = 0; i < d.n(); ++i) {
        const int e = d.edge_id(order[i], order[(i + 1) % d.n()]);
        if (!cm.spine.spine_edges.contains(e)) {
            first = i;
            break;
        }
    }
    const int a = order[first], b = order[(first + 1) % d.n()];
    const Rat gap = frac(Rat(d.polar_point(b).theta - d.polar_point(a).theta));
    const Rat cut = frac(Rat(d.polar_point(a).theta + gap / 2));
    for (int e = 0; e < d.edge_count(); ++e) {
        const PolarCurve& c = d.polar_curve(e);
        ensure(unwrap_into(c, cut) > c.theta_end(), "wedge of the non-spine cycle edge is not empty");
    }

    CutResult res{d, cut, {}, {}, {}, {}};
    std::vector<int> by_x(d.n());
    std::iota(by_x.begin(), by_x.end(), 0);
    auto x_of = [&](int v) { return frac(Rat(d.polar_point(v).theta - cut)); };
    std::sort(by_x.begin(), by_x.end(), [&](int p, int q) { return x_of(p) < x_of(q); });
    res.new_to_old_vertex = by_x;
    res.old_to_new_vertex.assign(d.n(), -1);
    for (int i = 0; i < d.n(); ++i) res.old_to_new_vertex[by_x[i]] = i;

    DrawingData nd;
    nd.n = d.n();
    nd.backend = Backend::Cartesian;
    for (int i = 0; i < d.n(); ++i) nd.points.push_back(Point{x_of(by_x[i]), d.polar_point(by_x[i]).r});
    for (int e = 0; e < d.edge_count(); ++e) {
        const PolarCurve& c = d.polar_curve(e);
        const Rat x0 = frac(Rat(c.theta_begin() - cut));
        CartesianCurve cc;
        for (const auto& p : c.waypoints) cc.waypoints.push_back(Point{x0 + (p.theta - c.theta_begin()), p.r});
        nd.edges.push_back(Edge{res.old_to_new_vertex[d.edge(e).u], res.old_to_new_vertex[d.edge(e).v], cc});
    }
    res.drawing = Drawing::build(std::move(nd));
    res.old_to_new_edge.assign(d.edge_count(), -1);
    res.new_to_old_edge.assign(d.edge_count(), -1);
    for (int e = 0; e < d.edge_count(); ++e) {
        const int ne = res.drawing.edge_id(res.old_to_new_vertex[d.edge(e).u], res.old_to_new_vertex[d.edge(e).v]);
        res.old_to_new_edge[e] = ne;
        res.new_to_old_edge[ne] = e;
    }
    for (int e = 0; e < d.edge_count(); ++e)
        for (int f = 0; f < d.edge_count(); ++f)
            ensure(d.crosses(e, f) == res.drawing.crosses(res.old_to_new_edge[e], res.old_to_new_edge[f]),
                   "cut changed the crossing matrix");
    return res;
}

}  // namespace cst
