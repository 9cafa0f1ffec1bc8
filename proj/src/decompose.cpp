#include "drd/decompose.hpp"

#include <algorithm>

namespace drd {

namespace {

// Orders a path component of the B-subgraph from one end to the other.
// Components here induce paths or cycles only, since every member has
// degree <= 2 in the host graph.
std::vector<int> walk_path(const Graph& g, const std::vector<char>& in_b,
                           int start, std::vector<char>& seen)
{
    std::vector<int> seq{start};
    seen[start] = 1;
    int prev = -1, cur = start;
    for (;;) {
        int next = -1;
        for (int u : g.neighbors(cur))
            if (in_b[u] && u != prev && !seen[u]) {
                next = u;
                break;
            }
        if (next < 0)
            break;
        seq.push_back(next);
        seen[next] = 1;
        prev = cur;
        cur = next;
    }
    return seq;
}

} // namespace

Decomposition decompose(const Graph& g)
{
    const int n = g.order();
    Decomposition d;
    std::vector<char> in_b(n, 1);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) {
            d.a_vertices.push_back(v);
            in_b[v] = 0;
        }

    std::vector<char> seen(n, 0);

    auto a_neighbors = [&](int v) {
        std::vector<int> out;
        for (int u : g.neighbors(v))
            if (!in_b[u])
                out.push_back(u);
        return out;
    };

    for (int s = 0; s < n; ++s) {
        if (!in_b[s] || seen[s])
            continue;

        // Find an end of the B-component containing s (a vertex with at most
        // one B-neighbor). If none exists the component is a cycle.
        int b_deg_s = 0;
        for (int u : g.neighbors(s))
            b_deg_s += in_b[u];
        int end = -1;
        if (b_deg_s <= 1) {
            end = s;
        } else {
            std::vector<char> visited(n, 0);
            std::vector<int> stack{s};
            visited[s] = 1;
            std::vector<int> comp;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int u : g.neighbors(v))
                    if (in_b[u] && !visited[u]) {
                        visited[u] = 1;
                        stack.push_back(u);
                    }
            }
            std::sort(comp.begin(), comp.end());
            for (int v : comp) {
                int bd = 0;
                for (int u : g.neighbors(v))
                    bd += in_b[u];
                if (bd <= 1) {
                    end = v;
                    break;
                }
            }
            if (end < 0) {
                // 2-regular inside B: a whole component of g with no A-vertex
                for (int v : comp)
                    seen[v] = 1;
                d.floating_components.push_back(comp);
                continue;
            }
        }

        std::vector<int> seq = walk_path(g, in_b, end, seen);
        const auto front_att = a_neighbors(seq.front());
        const auto back_att = a_neighbors(seq.back());

        if (front_att.empty() && back_att.empty()) {
            // isolated path component of g
            std::vector<int> comp = seq;
            std::sort(comp.begin(), comp.end());
            d.floating_components.push_back(comp);
            continue;
        }

        BPath p;
        p.vertices = seq;
        if (!front_att.empty() && !back_att.empty()) {
            if (p.vertices.front() > p.vertices.back())
                std::reverse(p.vertices.begin(), p.vertices.end());
            p.attachments = a_neighbors(p.vertices.front());
            for (int a : a_neighbors(p.vertices.back()))
                p.attachments.push_back(a);
            std::sort(p.attachments.begin(), p.attachments.end());
            p.attachments.erase(std::unique(p.attachments.begin(), p.attachments.end()),
                                p.attachments.end());
            d.maximal_paths.push_back(std::move(p));
        } else {
            // orient with the attached end first
            if (front_att.empty())
                std::reverse(p.vertices.begin(), p.vertices.end());
            p.attachments = a_neighbors(p.vertices.front());
            d.pendant_paths.push_back(std::move(p));
        }
    }

    auto by_front = [](const BPath& x, const BPath& y) {
        return x.vertices.front() < y.vertices.front();
    };
    std::sort(d.maximal_paths.begin(), d.maximal_paths.end(), by_front);
    std::sort(d.pendant_paths.begin(), d.pendant_paths.end(), by_front);
    std::sort(d.floating_components.begin(), d.floating_components.end());
    for (const auto& p : d.maximal_paths)
        d.path_counts[static_cast<int>(p.vertices.size())]++;
    return d;
}

} // namespace drd
