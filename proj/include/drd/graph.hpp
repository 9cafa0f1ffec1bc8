#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace drd {

using Edge = std::pair<int, int>;

/// Simple undirected graph on dense vertex ids 0..n-1.
/// Immutable after construction; adjacency lists are kept sorted.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate and reversed pairs are
    /// collapsed. Throws std::invalid_argument on self-loops or ids outside
    /// [0, n).
    Graph(int n, const std::vector<Edge>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    bool has_edge(int u, int v) const;

    int max_degree() const;
    int min_degree() const;

    bool is_connected() const;
    std::vector<std::vector<int>> components() const;

    bool operator==(const Graph& other) const
    {
        return adj_ == other.adj_;
    }

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

/// Removes the given vertices and renumbers the survivors densely.
/// Returns the new graph and the old->new id map (-1 for removed ids).
std::pair<Graph, std::vector<int>> delete_vertices(const Graph& g,
                                                   const std::vector<int>& to_remove);

/// Removes one edge. Throws if the edge is absent.
Graph delete_edge(const Graph& g, int u, int v);

/// Adds one edge between distinct, non-adjacent vertices.
Graph add_edge(const Graph& g, int u, int v);

std::vector<Edge> edge_list(const Graph& g);

} // namespace drd
