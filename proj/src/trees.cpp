#include "cst/trees.hpp"

#include "cst/errors.hpp"
#include "cst/rng.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace cst {

const char* to_string(TreeKindTag tag) {
    switch (tag) {
        case TreeKindTag::Star: return "star";
        case TreeKindTag::DoubleStar: return "double_star";
        case TreeKindTag::TwinStar: return "twin_star";
        case TreeKindTag::KStar: return "k_star";
        case TreeKindTag::Generic: return "generic";
    }
    return "unknown";
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
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

TreeKind tree_kind(const Drawing& d, EdgeSet s) {
    const int n = d.n();
    std::vector<int> deg(n, 0);
    std::vector<std::vector<int>> adj(n);
    for (int e : s) {
        const Edge& ed = d.edge(e);
        ++deg[ed.u];
        ++deg[ed.v];
        adj[ed.u].push_back(ed.v);
        adj[ed.v].push_back(ed.u);
    }
    std::vector<bool> inner(n, false);
    std::vector<int> hubs;
    for (int v = 0; v < n; ++v)
        if (deg[v] >= 2) {
            inner[v] = true;
            hubs.push_back(v);
        }
    if (hubs.empty()) return {TreeKindTag::Star, {0}};

    // Non-leaf vertices of a tree span a subtree; it must be a path whose
    // interior vertices carry no leaves.
    std::vector<int> ends;
    for (int v : hubs) {
        int hub_neighbours = 0;
        for (int w : adj[v]) hub_neighbours += inner[w] ? 1 : 0;
        if (hub_neighbours > 2) return {};
        if (hub_neighbours <= 1) ends.push_back(v);
    }
    std::vector<int> path{ends.front()};
    int prev = -1;
    while (true) {
        const int cur = path.back();
        int next = -1;
        for (int w : adj[cur])
            if (inner[w] && w != prev) next = w;
        if (next < 0) break;
        prev = cur;
        path.push_back(next);
    }
    if (path.size() != hubs.size()) return {};
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (deg[path[i]] != 2) return {};
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
    switch (path.size()) {
        case 1: return {TreeKindTag::Star, path};
        case 2: return {TreeKindTag::DoubleStar, path};
        case 3: return {TreeKindTag::TwinStar, path};
        default: return {TreeKindTag::KStar, path};
    }
}

}  // namespace

TreeCert check_tree(const Drawing& d, EdgeSet s) {
    if (!(s - d.all_edges()).empty())
        fail(ErrorKind::UnknownEdge, "edge id " + std::to_string((s - d.all_edges()).min_id()) + " not in drawing",
             (s - d.all_edges()).min_id());
    TreeCert cert;
    Components comp(d.n());
    bool cycle = false;
    int merges = 0;
    for (int e : s) {
        if (comp.unite(d.edge(e).u, d.edge(e).v))
            ++merges;
        else
            cycle = true;
    }
    cert.spanning = merges == d.n() - 1;
    cert.acyclic_connected = cert.spanning && !cycle;
    cert.plane = !d.crossed_by(s).intersects(s);
    if (cert.is_plane_spanning_tree()) cert.kind = tree_kind(d, s);
    return cert;
}

bool is_compatible(const Drawing& d, EdgeSet t1, EdgeSet t2) { return !d.crossed_by(t1).intersects(t2); }

EdgeSet star(const Drawing& d, int center) {
    EdgeSet s;
    for (int v = 0; v < d.n(); ++v)
        if (v != center && d.edge_id(center, v) >= 0) s.insert(d.edge_id(center, v));
    return s;
}

namespace {

struct Enumerator {
    const Drawing& d;
    int need;
    std::vector<EdgeSet> out;

    void run(int idx, EdgeSet chosen, EdgeSet blocked, std::vector<int> label, int count) {
        if (count == need) {
            out.push_back(chosen);
            return;
        }
        const int m = d.edge_count();
        if (m - idx < need - count) return;
        const Edge& e = d.edge(idx);
        if (!blocked.contains(idx) && label[e.u] != label[e.v]) {
            std::vector<int> merged = label;
            const int from = label[e.v], to = label[e.u];
            for (int& l : merged)
                if (l == from) l = to;
            run(idx + 1, chosen | EdgeSet::single(idx), blocked | d.cross_mask(idx), std::move(merged), count + 1);
        }
        run(idx + 1, chosen, blocked, std::move(label), count);
    }
};

bool matches(TreeFilter filter, TreeKindTag tag) {
    switch (filter) {
        case TreeFilter::All: return true;
        case TreeFilter::Star: return tag == TreeKindTag::Star;
        case TreeFilter::DoubleStar: return tag == TreeKindTag::DoubleStar;
        case TreeFilter::TwinStar: return tag == TreeKindTag::TwinStar;
        case TreeFilter::Special:
            return tag == TreeKindTag::Star || tag == TreeKindTag::DoubleStar || tag == TreeKindTag::TwinStar;
    }
    return false;
}

// Every tree whose edges all touch g or r, with the given fixed part.
void attach_to_ends(const Drawing& d, int g, int r, EdgeSet fixed, const std::vector<int>& rest,
                    std::vector<EdgeSet>& out) {
    const std::uint64_t combos = std::uint64_t{1} << rest.size();
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
        EdgeSet t = fixed;
        bool ok = true;
        for (std::size_t i = 0; i < rest.size() && ok; ++i) {
            const int id = d.edge_id((mask >> i) & 1U ? r : g, rest[i]);
            if (id < 0) ok = false;
            else t.insert(id);
        }
        if (ok && !d.crossed_by(t).intersects(t)) out.push_back(t);
    }
}

std::vector<EdgeSet> special_candidates(const Drawing& d) {
    const int n = d.n();
    std::vector<EdgeSet> out;
    for (int c = 0; c < n; ++c) {
        const EdgeSet s = star(d, c);
        if (s.size() == n - 1) out.push_back(s);
    }
    for (int g = 0; g < n; ++g)
        for (int r = g + 1; r < n; ++r) {
            const int gr = d.edge_id(g, r);
            if (gr < 0) continue;
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (v != g && v != r) rest.push_back(v);
            attach_to_ends(d, g, r, EdgeSet::single(gr), rest, out);
        }
    for (int s = 0; s < n; ++s)
        for (int g = 0; g < n; ++g)
            for (int r = g + 1; r < n; ++r) {
                if (g == s || r == s) continue;
                const int gs = d.edge_id(g, s), sr = d.edge_id(s, r);
                if (gs < 0 || sr < 0) continue;
                std::vector<int> rest;
                for (int v = 0; v < n; ++v)
                    if (v != g && v != r && v != s) rest.push_back(v);
                attach_to_ends(d, g, r, EdgeSet::single(gs) | EdgeSet::single(sr), rest, out);
            }
    return out;
}

}  // namespace

std::vector<EdgeSet> enumerate_plane_trees(const Drawing& d, TreeFilter filter, EnumLimits limits) {
    std::vector<EdgeSet> found;
    if (filter == TreeFilter::All) {
        if (d.n() > limits.all)
            fail(ErrorKind::TooLarge, "enumeration of all trees limited to n <= " + std::to_string(limits.all),
                 limits.all);
        Enumerator en{d, d.n() - 1, {}};
        std::vector<int> label(d.n());
        std::iota(label.begin(), label.end(), 0);
        en.run(0, EdgeSet{}, EdgeSet{}, std::move(label), 0);
        found = std::move(en.out);
    } else {
        if (d.n() > limits.special)
            fail(ErrorKind::TooLarge, "enumeration of special trees limited to n <= " + std::to_string(limits.special),
                 limits.special);
        for (EdgeSet t : special_candidates(d))
            if (matches(filter, check_tree(d, t).kind.tag)) found.push_back(t);
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

std::vector<int> tree_path_edges(const Drawing& d, EdgeSet t, int u, int v) {
    std::vector<std::vector<std::pair<int, int>>> adj(d.n());
    for (int e : t) {
        adj[d.edge(e).u].emplace_back(d.edge(e).v, e);
        adj[d.edge(e).v].emplace_back(d.edge(e).u, e);
    }
    std::vector<int> via(d.n(), -2);
    std::queue<int> q;
    q.push(u);
    via[u] = -1;
    while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (auto [y, e] : adj[x])
            if (via[y] == -2) {
                via[y] = e;
                q.push(y);
            }
    }
    std::vector<int> path;
    if (via[v] == -2) return path;
    for (int x = v; x != u;) {
        const int e = via[x];
        path.push_back(e);
        x = d.edge(e).u == x ? d.edge(e).v : d.edge(e).u;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Flip> compatible_step_to_flips(const Drawing& d, EdgeSet t1, EdgeSet t2) {
    if (!is_compatible(d, t1, t2)) fail(ErrorKind::Incompatible, "trees are not compatible");
    std::vector<Flip> flips;
    EdgeSet cur = t1;
    for (int add : t2 - t1) {
        const auto path = tree_path_edges(d, cur, d.edge(add).u, d.edge(add).v);
        int remove = -1;
        for (int e : path)
            if (!t2.contains(e)) remove = std::max(remove, e);
        ensure(remove >= 0, "cycle closed by a new edge has no removable edge");
        cur.erase(remove);
        cur.insert(add);
        flips.push_back({remove, add});
    }
    return flips;
}

std::vector<std::array<int, 2>> double_star_paths(const Drawing& d, EdgeSet t) {
    std::vector<std::array<int, 2>> out;
    for (int e : t) {
        const int g = d.edge(e).u, r = d.edge(e).v;
        bool ok = true;
        for (int f : t) {
            const Edge& ef = d.edge(f);
            if (ef.u != g && ef.u != r && ef.v != g && ef.v != r) ok = false;
        }
        if (ok) out.push_back({g, r});
    }
    return out;
}

std::vector<std::array<int, 3>> twin_star_paths(const Drawing& d, EdgeSet t) {
    std::vector<std::array<int, 3>> out;
    std::vector<std::vector<int>> adj(d.n());
    for (int e : t) {
        adj[d.edge(e).u].push_back(d.edge(e).v);
        adj[d.edge(e).v].push_back(d.edge(e).u);
    }
    for (int s = 0; s < d.n(); ++s) {
        if (adj[s].size() != 2) continue;
        const int g = std::min(adj[s][0], adj[s][1]);
        const int r = std::max(adj[s][0], adj[s][1]);
        bool ok = true;
        for (int f : t) {
            const Edge& ef = d.edge(f);
            if (ef.u != g && ef.u != r && ef.v != g && ef.v != r) ok = false;
        }
        if (ok) out.push_back({g, s, r});
    }
    return out;
}

EdgeSet random_plane_tree(const Drawing& d, Rng& rng) {
    std::vector<int> order(d.edge_count());
    std::iota(order.begin(), order.end(), 0);
    for (int attempt = 0; attempt < 32; ++attempt) {
        rng.shuffle(order);
        Components comp(d.n());
        EdgeSet t, blocked;
        for (int e : order) {
            if (blocked.contains(e)) continue;
            if (!comp.unite(d.edge(e).u, d.edge(e).v)) continue;
            t.insert(e);
            blocked |= d.cross_mask(e);
        }
        if (t.size() == d.n() - 1) return t;
    }
    return star(d, rng.range(0, d.n() - 1));
}

}  // namespace cst
