#include "drd/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace drd {

Graph::Graph(int n, const std::vector<Edge>& edges)
{
    if (n < 0)
        throw std::invalid_argument("graph order must be non-negative");
    adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") out of range for n=" +
                                        std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += static_cast<int>(nbrs.size());
    }
    edge_count_ /= 2;
}

bool Graph::has_edge(int u, int v) const
{
    const auto& nbrs = adj_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::max_degree() const
{
    int d = 0;
    for (const auto& nbrs : adj_)
        d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

int Graph::min_degree() const
{
    if (adj_.empty())
        return 0;
    int d = degree(0);
    for (const auto& nbrs : adj_)
        d = std::min(d, static_cast<int>(nbrs.size()));
    return d;
}

std::vector<std::vector<int>> Graph::components() const
{
    const int n = order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int u : adj_[v]) {
                if (comp[u] < 0) {
                    comp[u] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool Graph::is_connected() const
{
    return order() <= 1 || components().size() == 1;
}

std::pair<Graph, std::vector<int>> delete_vertices(const Graph& g,
                                                   const std::vector<int>& to_remove)
{
    const int n = g.order();
    std::vector<char> gone(n, 0);
    for (int v : to_remove) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("delete_vertices: id " + std::to_string(v) +
                                        " out of range");
        gone[v] = 1;
    }
    std::vector<int> old_to_new(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!gone[v])
            old_to_new[v] = next++;
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        if (gone[v])
            continue;
        for (int u : g.neighbors(v))
            if (u > v && !gone[u])
                edges.emplace_back(old_to_new[v], old_to_new[u]);
    }
    return {Graph(next, edges), std::move(old_to_new)};
}

Graph delete_edge(const Graph& g, int u, int v)
{
    if (!g.has_edge(u, v))
        throw std::invalid_argument("delete_edge: edge not present");
    std::vector<Edge> edges;
    for (const auto& [a, b] : edge_list(g))
        if (!((a == u && b == v) || (a == v && b == u)))
            edges.emplace_back(a, b);
    return Graph(g.order(), edges);
}

Graph add_edge(const Graph& g, int u, int v)
{
    if (u == v)
        throw std::invalid_argument("add_edge: endpoints must be distinct");
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        throw std::invalid_argument("add_edge: id out of range");
    if (g.has_edge(u, v))
        throw std::invalid_argument("add_edge: edge already present");
    auto edges = edge_list(g);
    edges.emplace_back(u, v);
    return Graph(g.order(), edges);
}

std::vector<Edge> edge_list(const Graph& g)
{
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v))
            if (v < u)
                edges.emplace_back(v, u);
    return edges;
}

} // namespace drd
