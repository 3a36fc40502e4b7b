#include "cst/compat.hpp"

#include "cst/errors.hpp"

#include <algorithm>
#include <bit>

namespace cst {

CompatGraph::CompatGraph(std::vector<EdgeSet> nodes, bool restricted)
    : nodes_(std::move(nodes)), restricted_(restricted) {
    words_ = (size() + 63) / 64;
    rows_.assign(static_cast<std::size_t>(size()) * words_, 0);
}

void CompatGraph::connect(int i, int j) {
    rows_[static_cast<std::size_t>(i) * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    rows_[static_cast<std::size_t>(j) * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
}

int CompatGraph::degree(int i) const {
    int deg = 0;
    for (int w = 0; w < words_; ++w) deg += std::popcount(row(i)[w]);
    return deg;
}

long long CompatGraph::edge_count() const {
    long long total = 0;
    for (int i = 0; i < size(); ++i) total += degree(i);
    return total / 2;
}

std::optional<int> CompatGraph::index_of(EdgeSet t) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t);
    if (it == nodes_.end() || *it != t) return std::nullopt;
    return static_cast<int>(it - nodes_.begin());
}

std::vector<int> CompatGraph::distances(int source) const {
    const int n = size();
    std::vector<int> dist(n, -1);
    std::vector<std::uint64_t> frontier(words_, 0), next(words_, 0);
    std::vector<int> unvisited;
    unvisited.reserve(n);
    for (int v = 0; v < n; ++v)
        if (v != source) unvisited.push_back(v);
    dist[source] = 0;
    frontier[source / 64] |= std::uint64_t{1} << (source % 64);
    // Bottom-up: each unvisited node looks for a frontier neighbour. The
    // graphs are dense, so the scan usually stops after a few words.
    for (int level = 1; !unvisited.empty(); ++level) {
        std::fill(next.begin(), next.end(), 0);
        std::vector<int> still;
        still.reserve(unvisited.size());
        bool grew = false;
        for (int v : unvisited) {
            const std::uint64_t* r = row(v);
            bool hit = false;
            for (int w = 0; w < words_ && !hit; ++w) hit = (r[w] & frontier[w]) != 0;
            if (hit) {
                dist[v] = level;
                next[v / 64] |= std::uint64_t{1} << (v % 64);
                grew = true;
            } else {
                still.push_back(v);
            }
        }
        if (!grew) break;
        unvisited.swap(still);
        frontier.swap(next);
    }
    return dist;
}

CompatGraph build_compat_graph(const Drawing& d, bool restricted, EnumLimits limits) {
    CompatGraph g(enumerate_plane_trees(d, restricted ? TreeFilter::Special : TreeFilter::All, limits), restricted);
    std::vector<EdgeSet> crossed;
    crossed.reserve(g.size());
    for (EdgeSet t : g.nodes()) crossed.push_back(d.crossed_by(t));
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            if (!crossed[i].intersects(g.nodes()[j])) g.connect(i, j);
    return g;
}

CompatAnalysis analyze(const CompatGraph& g) {
    CompatAnalysis out;
    const int n = g.size();
    out.eccentricity.assign(n, 0);
    out.component.assign(n, -1);
    for (int s = 0; s < n; ++s) {
        const std::vector<int> dist = g.distances(s);
        if (out.component[s] < 0) {
            for (int v = 0; v < n; ++v)
                if (dist[v] >= 0) out.component[v] = out.components;
            out.component_diameter.push_back(0);
            ++out.components;
        }
        out.eccentricity[s] = *std::max_element(dist.begin(), dist.end());
        int& cd = out.component_diameter[out.component[s]];
        cd = std::max(cd, out.eccentricity[s]);
    }
    out.connected = out.components <= 1;
    if (out.connected) out.diameter = out.component_diameter.empty() ? 0 : out.component_diameter.front();
    return out;
}

std::optional<int> bfs_distance(const CompatGraph& g, EdgeSet t1, EdgeSet t2) {
    const auto a = g.index_of(t1);
    if (!a) fail(ErrorKind::NodeMissing, "first tree is not a node of the graph", 0);
    const auto b = g.index_of(t2);
    if (!b) fail(ErrorKind::NodeMissing, "second tree is not a node of the graph", 1);
    const int dist = g.distances(*a)[*b];
    if (dist < 0) return std::nullopt;
    return dist;
}

}  // namespace cst
