#include "drd/family.hpp"

#include <stdexcept>
#include <string>

namespace drd {

namespace {

void append_cycle_edges(std::vector<Edge>& edges, int first, int len)
{
    for (int i = 0; i < len; ++i)
        edges.emplace_back(first + i, first + (i + 1) % len);
}

void append_path_edges(std::vector<Edge>& edges, int first, int len)
{
    for (int i = 0; i + 1 < len; ++i)
        edges.emplace_back(first + i, first + i + 1);
}

void check_tadpole(const TadpoleParams& t)
{
    if (t.m < 3)
        throw std::invalid_argument("tadpole requires cycle length m >= 3");
    if (t.k < 1)
        throw std::invalid_argument("tadpole requires path length k >= 1");
}

} // namespace

Graph cycle(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle requires n >= 3");
    std::vector<Edge> edges;
    append_cycle_edges(edges, 0, n);
    return Graph(n, edges);
}

Graph path(int n)
{
    if (n < 1)
        throw std::invalid_argument("path requires n >= 1");
    std::vector<Edge> edges;
    append_path_edges(edges, 0, n);
    return Graph(n, edges);
}

Graph complete(int n)
{
    if (n < 1)
        throw std::invalid_argument("complete graph requires n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph tadpole(int m, int k)
{
    check_tadpole({m, k});
    std::vector<Edge> edges;
    append_cycle_edges(edges, 0, m);
    edges.emplace_back(0, m);
    append_path_edges(edges, m, k);
    return Graph(m + k, edges);
}

Graph spider(const std::vector<int>& leg_lengths)
{
    if (leg_lengths.size() < 3)
        throw std::invalid_argument("spider requires at least 3 legs");
    std::vector<Edge> edges;
    int next = 1;
    for (int len : leg_lengths) {
        if (len < 1)
            throw std::invalid_argument("spider legs must have length >= 1");
        edges.emplace_back(0, next);
        append_path_edges(edges, next, len);
        next += len;
    }
    return Graph(next, edges);
}

Graph q_graph()
{
    std::vector<Edge> edges;
    append_cycle_edges(edges, 0, 5);
    append_cycle_edges(edges, 5, 5);
    edges.emplace_back(0, 5);
    return Graph(10, edges);
}

Graph g_q(const Graph& base)
{
    const int nb = base.order();
    if (nb < 1)
        throw std::invalid_argument("GQ requires a non-empty base graph");
    std::vector<Edge> edges = edge_list(base);
    // Q's vertex 0 is one of its two degree-3 vertices; copy i maps Q vertex
    // 0 to base vertex i and Q vertex j >= 1 to nb + 9i + (j-1).
    const Graph q = q_graph();
    for (int i = 0; i < nb; ++i) {
        auto map = [&](int qv) { return qv == 0 ? i : nb + 9 * i + (qv - 1); };
        for (const auto& [u, v] : edge_list(q))
            edges.emplace_back(map(u), map(v));
    }
    return Graph(10 * nb, edges);
}

Graph g_h(const Graph& base)
{
    const int nb = base.order();
    if (nb < 1)
        throw std::invalid_argument("GH requires a non-empty base graph");
    std::vector<Edge> edges = edge_list(base);
    for (int i = 0; i < nb; ++i) {
        const int c1 = nb + 10 * i;
        const int c2 = c1 + 5;
        append_cycle_edges(edges, c1, 5);
        append_cycle_edges(edges, c2, 5);
        edges.emplace_back(i, c1);
        edges.emplace_back(i, c2);
    }
    return Graph(11 * nb, edges);
}

Graph star_of_tadpoles(const std::vector<TadpoleParams>& tadpoles,
                       const std::vector<int>& attached_cycles,
                       const std::vector<int>& identified_cycles)
{
    const size_t pieces = tadpoles.size() + attached_cycles.size() + identified_cycles.size();
    if (pieces < 2)
        throw std::invalid_argument("star-of-tadpoles requires at least 2 pieces");
    std::vector<Edge> edges;
    int next = 1;
    for (const auto& t : tadpoles) {
        check_tadpole(t);
        append_cycle_edges(edges, next, t.m);
        edges.emplace_back(next, next + t.m);
        append_path_edges(edges, next + t.m, t.k);
        edges.emplace_back(0, next + t.m + t.k - 1); // hub to the far path end
        next += t.m + t.k;
    }
    for (int len : attached_cycles) {
        if (len < 3)
            throw std::invalid_argument("attached cycles must have length >= 3");
        append_cycle_edges(edges, next, len);
        edges.emplace_back(0, next);
        next += len;
    }
    for (int len : identified_cycles) {
        if (len < 3)
            throw std::invalid_argument("identified cycles must have length >= 3");
        // hub stands in for one cycle vertex: hub, next, ..., next+len-2, hub
        edges.emplace_back(0, next);
        append_path_edges(edges, next, len - 1);
        edges.emplace_back(next + len - 2, 0);
        next += len - 1;
    }
    return Graph(next, edges);
}

Graph generate(const FamilySpec& spec)
{
    switch (spec.kind) {
    case FamilySpec::Kind::Cycle:
        return cycle(spec.n);
    case FamilySpec::Kind::Path:
        return path(spec.n);
    case FamilySpec::Kind::Complete:
        return complete(spec.n);
    case FamilySpec::Kind::Tadpole:
        return tadpole(spec.tadpole.m, spec.tadpole.k);
    case FamilySpec::Kind::Spider:
        return spider(spec.leg_lengths);
    case FamilySpec::Kind::QGraph:
        return q_graph();
    case FamilySpec::Kind::GQ:
        return g_q(spec.base);
    case FamilySpec::Kind::GH:
        return g_h(spec.base);
    case FamilySpec::Kind::StarOfTadpoles:
        return star_of_tadpoles(spec.tadpoles, spec.attached_cycles,
                                spec.identified_cycles);
    }
    throw std::invalid_argument("unknown family kind");
}

std::string family_name(FamilySpec::Kind kind)
{
    switch (kind) {
    case FamilySpec::Kind::Cycle: return "cycle";
    case FamilySpec::Kind::Path: return "path";
    case FamilySpec::Kind::Complete: return "complete";
    case FamilySpec::Kind::Tadpole: return "tadpole";
    case FamilySpec::Kind::Spider: return "spider";
    case FamilySpec::Kind::QGraph: return "q";
    case FamilySpec::Kind::GQ: return "gq";
    case FamilySpec::Kind::GH: return "gh";
    case FamilySpec::Kind::StarOfTadpoles: return "star";
    }
    return "unknown";
}

} // namespace drd
