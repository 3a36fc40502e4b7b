#include "cst/transforms.hpp"

#include "cst/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

namespace cst {

TransformSequence certify_sequence(const Drawing& d, std::vector<EdgeSet> seq, std::string method) {
    if (seq.empty()) fail(ErrorKind::EmptySet, "a sequence needs at least one tree");
    TransformSequence out;
    out.method = std::move(method);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        TreeCert cert = check_tree(d, seq[i]);
        if (!cert.is_plane_spanning_tree())
            fail(ErrorKind::BadTree,
                 "tree " + std::to_string(i) + " is not a plane spanning tree (spanning=" +
                     (cert.spanning ? "true" : "false") + ", acyclic=" + (cert.acyclic_connected ? "true" : "false") +
                     ", plane=" + (cert.plane ? "true" : "false") + ")",
                 static_cast<int>(i));
        out.certs.push_back(cert);
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (!is_compatible(d, seq[i], seq[i + 1]))
            fail(ErrorKind::IncompatibleStep, "trees " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                                  " are not compatible", static_cast<int>(i));
        out.step_compatible.push_back(true);
    }
    out.trees = std::move(seq);
    return out;
}

namespace {

struct Components {
    std::vector<int> parent;
    explicit Components(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Spanning forest of the union of the classes, taking edges class by class
// and by increasing id; later edges closing a cycle are dropped.
EdgeSet retree(const Drawing& d, std::initializer_list<EdgeSet> classes) {
    Components comp(d.n());
    EdgeSet out, seen;
    for (EdgeSet cls : classes)
        for (int e : cls - seen) {
            seen.insert(e);
            if (comp.unite(d.edge(e).u, d.edge(e).v)) out.insert(e);
        }
    return out;
}

void push_distinct(std::vector<EdgeSet>& seq, EdgeSet t) {
    if (seq.empty() || seq.back() != t) seq.push_back(t);
}

// Drops the stretch between two visits of the same tree.
std::vector<EdgeSet> cut_loops(const std::vector<EdgeSet>& seq) {
    std::vector<EdgeSet> out;
    for (EdgeSet t : seq) {
        auto it = std::find(out.begin(), out.end(), t);
        if (it != out.end())
            out.erase(it + 1, out.end());
        else
            out.push_back(t);
    }
    return out;
}

// Keeps only the trees reached by jumping to the farthest compatible successor.
std::vector<EdgeSet> shortcut(const Drawing& d, const std::vector<EdgeSet>& seq) {
    std::vector<EdgeSet> out{seq.front()};
    std::size_t i = 0;
    while (i + 1 < seq.size()) {
        std::size_t j = seq.size() - 1;
        while (j > i + 1 && !is_compatible(d, seq[i], seq[j])) --j;
        out.push_back(seq[j]);
        i = j;
    }
    return out;
}

void require_tree(const Drawing& d, EdgeSet t, int index) {
    const TreeCert cert = check_tree(d, t);
    if (!cert.is_plane_spanning_tree())
        fail(ErrorKind::BadTree, "input tree " + std::to_string(index) + " is not a plane spanning tree", index);
}

int other_end(const Drawing& d, int e, int v) { return d.edge(e).u == v ? d.edge(e).v : d.edge(e).u; }

}  // namespace

TransformSequence transform_cylindrical(const Drawing& d, const CylRoles& roles, EdgeSet t1, EdgeSet t2) {
    if (static_cast<int>(roles.roles.size()) != d.edge_count())
        fail(ErrorKind::NotCylindrical, "edge roles do not match the drawing");
    require_tree(d, t1, 0);
    require_tree(d, t2, 1);
    if (t1 == t2) return certify_sequence(d, {t1}, "cylindrical");
    if (is_compatible(d, t1, t2)) return certify_sequence(d, {t1, t2}, "cylindrical");

    const EdgeSet base = roles.inner_path | roles.outer_path;
    ensure(d.crossed_by(base).empty(), "a circle path edge is crossed");
    const EdgeSet side = roles.side_edges();
    const EdgeSet s1_side = t1 & side, s2_side = t2 & side;
    if (s1_side.empty()) fail(ErrorKind::NoSideEdge, "first tree has no side edge", 0);
    if (s2_side.empty()) fail(ErrorKind::NoSideEdge, "second tree has no side edge", 1);

    std::vector<std::vector<EdgeSet>> candidates;
    for (int e1 : s1_side)
        for (int e2 : s2_side) {
            std::vector<EdgeSet> seq{t1};
            push_distinct(seq, base | EdgeSet::single(e1));
            if (d.crosses(e1, e2)) {
                // Swap partners: with e1 = s r and e2 = s' r', use s r' or s' r.
                const bool u1_inner = std::find(roles.inner.begin(), roles.inner.end(), d.edge(e1).u) !=
                                      roles.inner.end();
                const bool u2_inner = std::find(roles.inner.begin(), roles.inner.end(), d.edge(e2).u) !=
                                      roles.inner.end();
                const int s = u1_inner ? d.edge(e1).u : d.edge(e1).v, r = other_end(d, e1, s);
                const int s2 = u2_inner ? d.edge(e2).u : d.edge(e2).v, r2 = other_end(d, e2, s2);
                int bridge = -1;
                for (int cand : {d.edge_id(s, r2), d.edge_id(s2, r)})
                    if (bridge < 0 && cand >= 0 && !d.crosses(cand, e1) && !d.crosses(cand, e2)) bridge = cand;
                if (bridge < 0) continue;
                push_distinct(seq, base | EdgeSet::single(bridge));
            }
            push_distinct(seq, base | EdgeSet::single(e2));
            push_distinct(seq, t2);
            candidates.push_back(shortcut(d, cut_loops(seq)));
        }
    ensure(!candidates.empty(), "no side-edge pair admits a bridge");
    auto best = std::min_element(candidates.begin(), candidates.end(),
                                 [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return certify_sequence(d, *best, "cylindrical");
}

TransformSequence monotone_to_spine(const Drawing& d, const SpineStructure& spine, EdgeSet t) {
    if (!classify_monotone(d)) fail(ErrorKind::NotMonotone, "drawing is not x-monotone");
    require_tree(d, t, 0);
    const EdgeSet spine_path = spine.spine_edges;
    std::vector<EdgeSet> seq{t};
    std::vector<int> counts;
    EdgeSet cur = t;
    int rounds = 0;
    while (true) {
        const EdgeSet twig = twiggly_set(d, spine, cur);
        counts.push_back(twig.size());
        if (twig.empty()) break;
        ensure(rounds < d.n() - 1, "more than n - 1 twiggly rounds");
        const int e = succ_maximal(d, twig);
        const CartesianCurve& ce = d.cartesian_curve(e);
        int vi = d.edge(e).u, vj = d.edge(e).v;
        if (d.point(vi).x > d.point(vj).x) std::swap(vi, vj);

        std::vector<int> path{vi};
        for (int v : spine.order) {
            const Point& p = d.point(v);
            if (p.x > d.point(vi).x && p.x < d.point(vj).x && p.y > *curve_eval(ce, p.x)) path.push_back(v);
        }
        path.push_back(vj);
        EdgeSet added;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) added.insert(d.edge_id(path[k], path[k + 1]));
        ensure(!d.cross_mask(e).intersects(added), "path above the maximal twiggly edge crosses it");
        ensure(!d.crossed_by(added).intersects(cur), "path above the maximal twiggly edge crosses the tree");

        EdgeSet rest = (cur | added) - EdgeSet::single(e);
        const EdgeSet rest_twig = twiggly_set(d, spine, rest);
        const EdgeSet next = retree(d, {added, rest - rest_twig, rest_twig});
        ensure(next.size() == d.n() - 1, "re-treeing lost connectivity");
        ensure(twiggly_set(d, spine, next).size() < twig.size(), "twiggly count did not drop");
        cur = next;
        seq.push_back(cur);
        ++rounds;
    }
    if (cur != spine_path) {
        seq.push_back(spine_path);
        counts.push_back(0);
    }
    TransformSequence out = certify_sequence(d, std::move(seq), "monotone");
    out.rounds = rounds;
    out.twiggly_counts = std::move(counts);
    return out;
}

namespace {

EdgeSet map_edges(EdgeSet s, const std::vector<int>& to) {
    EdgeSet out;
    for (int e : s) out.insert(to[e]);
    return out;
}

std::vector<int> depth_profile(const Drawing& d, const SpineStructure& spine, EdgeSet t,
                               const std::vector<Rat>& angles) {
    const EdgeSet twig = twiggly_set(d, spine, t);
    std::vector<int> out;
    for (const Rat& a : angles) out.push_back(ray_depth(d, twig, a));
    return out;
}

}  // namespace

TransformSequence cmonotone_to_spine(const Drawing& d, EdgeSet t) {
    const CMonotoneReport cm = classify_c_monotone(d);
    if (!cm.strongly) fail(ErrorKind::NotStronglyCMonotone, "drawing is not strongly c-monotone");
    require_tree(d, t, 0);
    const std::vector<Rat> angles = depth_sample_angles(d);

    if (!cm.spine.all_cycle_edges_spine) {
        const auto cut = cut_to_monotone(d);
        ensure(cut.has_value(), "cut expected for a non-spine cycle edge");
        const auto spine = classify_monotone(cut->drawing);
        ensure(spine.has_value(), "cut drawing is not monotone");
        const TransformSequence inner = monotone_to_spine(cut->drawing, *spine, map_edges(t, cut->old_to_new_edge));
        std::vector<EdgeSet> back;
        for (EdgeSet s : inner.trees) back.push_back(map_edges(s, cut->new_to_old_edge));
        TransformSequence out = certify_sequence(d, std::move(back), "cmonotone");
        out.rounds = inner.rounds;
        out.twiggly_counts = inner.twiggly_counts;
        out.cut_branch = true;
        for (EdgeSet s : out.trees) out.depth_profiles.push_back(depth_profile(d, cm.spine, s, angles));
        return out;
    }

    const EdgeSet target = cm.spine.spine_edges - EdgeSet::single(cm.spine.spine_edges.max_id());
    std::vector<EdgeSet> seq{t};
    std::vector<int> counts;
    std::vector<std::vector<int>> profiles{depth_profile(d, cm.spine, t, angles)};
    EdgeSet cur = t;
    int rounds = 0;
    while (true) {
        const EdgeSet twig = twiggly_set(d, cm.spine, cur);
        counts.push_back(twig.size());
        if (twig.empty()) break;
        ensure(rounds < d.n() - 1, "more than n - 1 depth rounds");
        EdgeSet added;
        for (const Corridor& c : corridors(d, twig)) added |= corridor_path(d, cur, c);
        ensure(!d.crossed_by(added).intersects(cur - twig), "corridor paths cross the tree");
        const EdgeSet rest = (cur - twig) | added;
        const EdgeSet rest_twig = twiggly_set(d, cm.spine, rest);
        const EdgeSet next = retree(d, {rest - rest_twig, rest_twig});
        ensure(next.size() == d.n() - 1, "re-treeing lost connectivity");
        const std::vector<int> prof = depth_profile(d, cm.spine, next, angles);
        for (std::size_t k = 0; k < prof.size(); ++k)
            ensure(prof[k] <= std::max(profiles.back()[k] - 1, 0), "twiggly depth did not drop on a ray");
        cur = next;
        seq.push_back(cur);
        profiles.push_back(prof);
        ++rounds;
    }
    if (cur != target) {
        seq.push_back(target);
        counts.push_back(0);
        profiles.push_back(depth_profile(d, cm.spine, target, angles));
    }
    TransformSequence out = certify_sequence(d, std::move(seq), "cmonotone");
    out.rounds = rounds;
    out.twiggly_counts = std::move(counts);
    out.depth_profiles = std::move(profiles);
    return out;
}

namespace {

void require_complete(const Drawing& d) {
    if (d.graph().bipartite) fail(ErrorKind::MethodInapplicable, "star transformations need a complete graph");
}

// Vertices ordered so that v ->gr w (edge v r crosses edge w g) implies v
// comes first; ties broken by smallest id.
std::vector<int> gr_order(const Drawing& d, int g, int r, const std::vector<int>& verts) {
    const int k = static_cast<int>(verts.size());
    std::vector<std::vector<int>> out(k);
    std::vector<int> indeg(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && d.crosses(d.edge_id(verts[i], r), d.edge_id(verts[j], g))) {
                out[i].push_back(j);
                ++indeg[j];
            }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int i = 0; i < k; ++i)
        if (indeg[i] == 0) ready.push(i);
    std::vector<int> order;
    while (!ready.empty()) {
        const int i = ready.top();
        ready.pop();
        order.push_back(verts[i]);
        for (int j : out[i])
            if (--indeg[j] == 0) ready.push(j);
    }
    if (static_cast<int>(order.size()) != k)
        fail(ErrorKind::RelationCyclic,
             "crossing relation between the two stars is cyclic; the drawing cannot be simple");
    return order;
}

// Moves the leaves `leaves` of g over to r, latest in the order first.
void move_leaves(const Drawing& d, int g, int r, const std::vector<int>& leaves, std::vector<EdgeSet>& seq) {
    EdgeSet cur = seq.back();
    const std::vector<int> order = gr_order(d, g, r, leaves);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        cur.erase(d.edge_id(g, *it));
        cur.insert(d.edge_id(r, *it));
        seq.push_back(cur);
    }
}

// Orientation (g, r) of a fixed path end pair: the target itself, then the
// end the target hangs from, then the larger id is taken as r.
std::pair<int, int> orient(const Drawing& d, EdgeSet t, int a, int b, int target) {
    if (target == a) return {b, a};
    if (target == b) return {a, b};
    if (t.contains(d.edge_id(a, target))) return {b, a};
    if (t.contains(d.edge_id(b, target))) return {a, b};
    return {std::min(a, b), std::max(a, b)};
}

}  // namespace

TransformSequence star_to_star(const Drawing& d, int g, int r) {
    require_complete(d);
    ensure(g != r && g >= 0 && r >= 0 && g < d.n() && r < d.n(), "star_to_star needs two distinct vertices");
    std::vector<int> others;
    for (int v = 0; v < d.n(); ++v)
        if (v != g && v != r) others.push_back(v);
    std::vector<EdgeSet> seq{star(d, g)};
    move_leaves(d, g, r, others, seq);
    return certify_sequence(d, std::move(seq), "star_to_star");
}

TransformSequence double_star_to_star(const Drawing& d, EdgeSet t, int target_center) {
    require_complete(d);
    if (!check_tree(d, t).is_plane_spanning_tree())
        fail(ErrorKind::NotDoubleStar, "input is not a plane spanning tree");
    const auto paths = double_star_paths(d, t);
    if (paths.empty()) fail(ErrorKind::NotDoubleStar, "no edge of the tree touches every other edge");
    auto chosen = paths.front();
    for (const auto& p : paths)
        if (p[0] == target_center || p[1] == target_center) {
            chosen = p;
            break;
        }
    const auto [g, r] = orient(d, t, chosen[0], chosen[1], target_center);
    std::vector<int> leaves;
    for (int e : t)
        if (e != d.edge_id(g, r) && (d.edge(e).u == g || d.edge(e).v == g)) leaves.push_back(other_end(d, e, g));
    std::vector<EdgeSet> seq{t};
    move_leaves(d, g, r, leaves, seq);
    if (r != target_center) {
        const TransformSequence tail = star_to_star(d, r, target_center);
        seq.insert(seq.end(), tail.trees.begin() + 1, tail.trees.end());
    }
    return certify_sequence(d, std::move(seq), "double_star_to_star");
}

TransformSequence twin_star_to_star(const Drawing& d, EdgeSet t, int target_center,
                                    std::optional<std::array<int, 3>> path) {
    require_complete(d);
    if (!check_tree(d, t).is_plane_spanning_tree()) fail(ErrorKind::NotTwinStar, "input is not a plane spanning tree");
    const auto readings = twin_star_paths(d, t);
    if (readings.empty()) fail(ErrorKind::NotTwinStar, "no degree-two vertex joins two centers covering the tree");
    std::array<int, 3> chosen = readings.front();
    if (path) {
        const std::array<int, 3> want{std::min((*path)[0], (*path)[2]), (*path)[1], std::max((*path)[0], (*path)[2])};
        if (std::find(readings.begin(), readings.end(), want) == readings.end())
            fail(ErrorKind::NotTwinStar, "given path is not a twin-star reading of the tree");
        chosen = want;
    }
    const int s = chosen[1];
    const auto [g, r] = orient(d, t, chosen[0], chosen[2], target_center);
    const int gr = d.edge_id(g, r);
    ensure(!d.cross_mask(gr).intersects(t), "edge between the twin centers crosses the tree");
    EdgeSet next = t;
    next.insert(gr);
    next.erase(d.edge_id(r, s));
    const TransformSequence tail = double_star_to_star(d, next, target_center);
    std::vector<EdgeSet> seq{t};
    seq.insert(seq.end(), tail.trees.begin(), tail.trees.end());
    return certify_sequence(d, std::move(seq), "twin_star_to_star");
}

namespace {

TransformSequence reduce_special(const Drawing& d, EdgeSet t, const TreeKind& kind, int target) {
    switch (kind.tag) {
        case TreeKindTag::Star:
            if (kind.path[0] == target) return certify_sequence(d, {t}, "special");
            return star_to_star(d, kind.path[0], target);
        case TreeKindTag::DoubleStar: return double_star_to_star(d, t, target);
        case TreeKindTag::TwinStar:
            return twin_star_to_star(d, t, target, std::array<int, 3>{kind.path[0], kind.path[1], kind.path[2]});
        default: fail(ErrorKind::NotSpecialTree, "not a star, double star or twin star");
    }
}

}  // namespace

TransformSequence join_sequences(const Drawing& d, const TransformSequence& a, const TransformSequence& b,
                                 std::string method) {
    ensure(a.trees.back() == b.trees.back(), "joined sequences end at different trees");
    std::vector<EdgeSet> seq = a.trees;
    seq.insert(seq.end(), b.trees.rbegin() + 1, b.trees.rend());
    TransformSequence out = certify_sequence(d, cut_loops(seq), std::move(method));
    out.rounds = a.rounds + b.rounds;
    return out;
}

TransformSequence transform_special(const Drawing& d, EdgeSet t1, EdgeSet t2) {
    require_complete(d);
    const TreeCert c1 = check_tree(d, t1), c2 = check_tree(d, t2);
    for (const TreeCert* c : {&c1, &c2}) {
        const TreeKindTag tag = c->kind.tag;
        if (!c->is_plane_spanning_tree() ||
            !(tag == TreeKindTag::Star || tag == TreeKindTag::DoubleStar || tag == TreeKindTag::TwinStar))
            fail(ErrorKind::NotSpecialTree, "not a star, double star or twin star", c == &c1 ? 0 : 1);
    }
    const int center = c2.kind.path.back();
    const TransformSequence a = reduce_special(d, t1, c1.kind, center);
    const TransformSequence b = reduce_special(d, t2, c2.kind, center);
    TransformSequence out = join_sequences(d, a, b, "special");
    const int n = d.n();
    ensure(out.flips() <= 2 * (2 * (n - 2) + 1) + (n - 2), "special sequence exceeds its length bound");
    return out;
}

const char* to_string(Method m) {
    switch (m) {
        case Method::Auto: return "auto";
        case Method::Cylindrical: return "cylindrical";
        case Method::Monotone: return "monotone";
        case Method::CMonotone: return "cmonotone";
        case Method::Special: return "special";
    }
    return "unknown";
}

std::optional<Method> method_from_string(const std::string& s) {
    for (Method m : {Method::Auto, Method::Cylindrical, Method::Monotone, Method::CMonotone, Method::Special})
        if (s == to_string(m)) return m;
    return std::nullopt;
}

namespace {

bool is_special(const Drawing& d, EdgeSet t) {
    if (d.graph().bipartite) return false;
    const TreeCert c = check_tree(d, t);
    return c.is_plane_spanning_tree() && (c.kind.tag == TreeKindTag::Star || c.kind.tag == TreeKindTag::DoubleStar ||
                                          c.kind.tag == TreeKindTag::TwinStar);
}

}  // namespace

TransformSequence transform(const Drawing& d, EdgeSet t1, EdgeSet t2, Method m) {
    require_tree(d, t1, 0);
    require_tree(d, t2, 1);
    std::optional<CylRoles> roles;
    if ((m == Method::Auto || m == Method::Cylindrical) && d.circles())
        roles = classify_cylindrical(d, d.circles()->r_in2, d.circles()->r_out2);
    if (m == Method::Cylindrical && !roles) fail(ErrorKind::NotCylindrical, "drawing is not cylindrical");
    if (roles) return transform_cylindrical(d, *roles, t1, t2);

    if (m == Method::Auto || m == Method::Monotone) {
        if (const auto spine = classify_monotone(d)) {
            return join_sequences(d, monotone_to_spine(d, *spine, t1), monotone_to_spine(d, *spine, t2), "monotone");
        }
        if (m == Method::Monotone) fail(ErrorKind::NotMonotone, "drawing is not x-monotone");
    }
    if (m == Method::Auto || m == Method::CMonotone) {
        if (classify_c_monotone(d).strongly)
            return join_sequences(d, cmonotone_to_spine(d, t1), cmonotone_to_spine(d, t2), "cmonotone");
        if (m == Method::CMonotone) fail(ErrorKind::NotStronglyCMonotone, "drawing is not strongly c-monotone");
    }
    if (m == Method::Special || (is_special(d, t1) && is_special(d, t2))) return transform_special(d, t1, t2);
    fail(ErrorKind::MethodInapplicable, "no transformation applies to this drawing and these trees");
}

}  // namespace cst
