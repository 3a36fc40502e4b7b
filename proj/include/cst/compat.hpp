#pragma once

#include "cst/drawing.hpp"
#include "cst/edge_set.hpp"
#include "cst/trees.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cst {

/// Compatibility graph over plane spanning trees. Nodes are sorted
/// canonically; row i of the adjacency is a bitset over node indices.
class CompatGraph {
public:
    CompatGraph(std::vector<EdgeSet> nodes, bool restricted);

    const std::vector<EdgeSet>& nodes() const { return nodes_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    bool restricted() const { return restricted_; }

    bool adjacent(int i, int j) const { return (rows_[i * words_ + j / 64] >> (j % 64)) & 1U; }
    int degree(int i) const;
    long long edge_count() const;
    /// Index of a tree, absent if it is not a node.
    std::optional<int> index_of(EdgeSet t) const;

    /// Breadth-first distances from `source`, -1 for unreachable nodes.
    std::vector<int> distances(int source) const;

private:
    friend CompatGraph build_compat_graph(const Drawing&, bool, EnumLimits);
    void connect(int i, int j);
    const std::uint64_t* row(int i) const { return rows_.data() + static_cast<std::size_t>(i) * words_; }

    std::vector<EdgeSet> nodes_;
    bool restricted_;
    int words_;
    std::vector<std::uint64_t> rows_;
};

/// All plane spanning trees (or only stars, double stars and twin stars when
/// `restricted`), adjacent iff compatible. Throws TooLarge past the limits.
CompatGraph build_compat_graph(const Drawing& d, bool restricted, EnumLimits limits = {});

struct CompatAnalysis {
    bool connected = false;
    int components = 0;
    /// Absent when the graph is disconnected.
    std::optional<int> diameter;
    std::vector<int> eccentricity;  ///< within the node's component
    std::vector<int> component;     ///< component index per node, by first node
    std::vector<int> component_diameter;
};

CompatAnalysis analyze(const CompatGraph& g);

/// Absent when the trees lie in different components. Throws NodeMissing.
std::optional<int> bfs_distance(const CompatGraph& g, EdgeSet t1, EdgeSet t2);

}  // namespace cst
