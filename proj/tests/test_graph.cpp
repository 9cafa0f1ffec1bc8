#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "drd/decompose.hpp"
#include "drd/enumerate.hpp"
#include "drd/family.hpp"
#include "drd/graph.hpp"
#include "drd/io.hpp"
#include "drd/random_models.hpp"

using namespace drd;

TEST_CASE("build_graph basics")
{
    Graph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(triangle.order() == 3);
    CHECK(triangle.edge_count() == 3);

    Graph dedup(2, {{0, 1}, {1, 0}});
    CHECK(dedup.edge_count() == 1);

    CHECK_THROWS_AS(Graph(4, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("graph edits")
{
    Graph c5 = cycle(5);
    auto [p4, map] = delete_vertices(c5, {0});
    CHECK(p4.order() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.max_degree() == 2);
    CHECK(p4.min_degree() == 1); // a path now

    Graph t = tadpole(5, 6);
    std::vector<int> tail;
    for (int v = 5; v < 11; ++v)
        tail.push_back(v);
    auto [c, map2] = delete_vertices(t, tail);
    CHECK(c.order() == 5);
    CHECK(c.min_degree() == 2);
    CHECK(c.max_degree() == 2);

    CHECK_THROWS_AS(add_edge(c5, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(add_edge(c5, 2, 2), std::invalid_argument);
    Graph chord = add_edge(c5, 0, 2);
    CHECK(chord.edge_count() == 6);
    CHECK(delete_edge(chord, 0, 2).edge_count() == 5);
}

TEST_CASE("delete_vertices preserves surviving adjacency")
{
    Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(RandomModel::UniformMinDeg2, 20, 99, trial);
        std::vector<int> drop;
        for (int v = 0; v < g.order(); ++v)
            if (rng.unit() < 0.3)
                drop.push_back(v);
        auto [h, map] = delete_vertices(g, drop);
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (map[u] >= 0 && map[v] >= 0)
                    CHECK(g.has_edge(u, v) == h.has_edge(map[u], map[v]));
    }
}

TEST_CASE("family generators")
{
    Graph t = tadpole(3, 1);
    REQUIRE(t.order() == 4);
    std::multiset<int> degs;
    for (int v = 0; v < 4; ++v)
        degs.insert(t.degree(v));
    CHECK(degs == std::multiset<int>{1, 2, 2, 3});

    Graph q = q_graph();
    CHECK(q.order() == 10);
    CHECK(q.edge_count() == 11);
    int deg3 = 0;
    for (int v = 0; v < 10; ++v)
        if (q.degree(v) == 3)
            ++deg3;
    CHECK(deg3 == 2);

    Graph gh1 = g_h(path(1));
    CHECK(gh1.order() == 11);
    CHECK(gh1.degree(0) == 2); // the hub joins one vertex of each C5
    CHECK(gh1.edge_count() == 12);

    Graph gq2 = g_q(path(2));
    CHECK(gq2.order() == 20);
    CHECK(gq2.is_connected());

    Graph sp = spider({2, 3, 4});
    CHECK(sp.order() == 10);
    CHECK(sp.degree(0) == 3);
    CHECK(sp.edge_count() == 9);

    Graph star = star_of_tadpoles({{5, 6}}, {5}, {4});
    // hub + tadpole(11) + cycle(5) + identified cycle sharing the hub (3 new)
    CHECK(star.order() == 1 + 11 + 5 + 3);
    CHECK(star.degree(0) == 4);

    CHECK_THROWS_AS(tadpole(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(tadpole(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(spider({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(star_of_tadpoles({{3, 1}}, {}, {}), std::invalid_argument);
}

TEST_CASE("generated degree sequences match the closed forms")
{
    for (int n : {3, 4, 7, 12}) {
        Graph c = cycle(n);
        for (int v = 0; v < n; ++v)
            CHECK(c.degree(v) == 2);
    }
    for (int n : {1, 2, 5, 9}) {
        Graph p = path(n);
        int leaves = 0;
        for (int v = 0; v < n; ++v)
            leaves += p.degree(v) <= 1;
        CHECK(leaves == (n == 1 ? 1 : 2));
    }
    Graph k5 = complete(5);
    for (int v = 0; v < 5; ++v)
        CHECK(k5.degree(v) == 4);

    // tadpole(m, k): one vertex of degree 3, one leaf, the rest degree 2
    Graph t = tadpole(5, 6);
    std::multiset<int> degs;
    for (int v = 0; v < t.order(); ++v)
        degs.insert(t.degree(v));
    std::multiset<int> want{3, 1};
    for (int i = 0; i < 9; ++i)
        want.insert(2);
    CHECK(degs == want);
}

TEST_CASE("decompose tadpole(3,2)")
{
    Decomposition d = decompose(tadpole(3, 2));
    REQUIRE(d.a_vertices == std::vector<int>{0});
    REQUIRE(d.maximal_paths.size() == 1);
    CHECK(d.maximal_paths[0].vertices == std::vector<int>{1, 2});
    CHECK(d.maximal_paths[0].attachments == std::vector<int>{0});
    REQUIRE(d.pendant_paths.size() == 1);
    CHECK(d.pendant_paths[0].vertices == std::vector<int>{3, 4});
    CHECK(d.pendant_paths[0].attachments == std::vector<int>{0});
    CHECK(d.floating_components.empty());
}

TEST_CASE("decompose q graph")
{
    Decomposition d = decompose(q_graph());
    CHECK(d.a_vertices == std::vector<int>{0, 5});
    REQUIRE(d.maximal_paths.size() == 2);
    for (const auto& p : d.maximal_paths) {
        CHECK(p.vertices.size() == 4);
        CHECK(p.attachments.size() == 1);
    }
    CHECK(d.path_counts.at(4) == 2);
}

TEST_CASE("decompose cycle: everything floats")
{
    Decomposition d = decompose(cycle(6));
    CHECK(d.a_vertices.empty());
    CHECK(d.maximal_paths.empty());
    REQUIRE(d.floating_components.size() == 1);
    CHECK(d.floating_components[0].size() == 6);
}

TEST_CASE("decompose partitions the vertex set")
{
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 4 + static_cast<int>(trial % 47);
        Graph g = random_graph(RandomModel::UniformMinDeg2, std::max(4, n), 1234, trial);
        Decomposition d = decompose(g);
        std::vector<int> hit(g.order(), 0);
        for (int v : d.a_vertices)
            ++hit[v];
        for (const auto& p : d.maximal_paths)
            for (int v : p.vertices)
                ++hit[v];
        for (const auto& p : d.pendant_paths)
            for (int v : p.vertices)
                ++hit[v];
        for (const auto& comp : d.floating_components)
            for (int v : comp)
                ++hit[v];
        for (int v = 0; v < g.order(); ++v)
            REQUIRE(hit[v] == 1);
        for (const auto& p : d.maximal_paths) {
            // canonical orientation and end attachment
            CHECK(p.vertices.front() <= p.vertices.back());
            bool front_attached = false, back_attached = false;
            for (int a : p.attachments) {
                front_attached |= g.has_edge(p.vertices.front(), a);
                back_attached |= g.has_edge(p.vertices.back(), a);
            }
            CHECK(front_attached);
            CHECK(back_attached);
            for (int v : p.vertices)
                CHECK(g.degree(v) <= 2);
        }
    }
}

TEST_CASE("enumerate_small counts all labeled graphs")
{
    EnumerateOptions opts;
    for (int n = 0; n <= 5; ++n) {
        long long expect = 1LL << (n * (n - 1) / 2);
        CHECK(count_small(n, opts) == expect);
    }
    CHECK_THROWS_AS(count_small(9, opts), std::invalid_argument);
}

TEST_CASE("enumerate_small dedup finds the known class counts")
{
    EnumerateOptions opts;
    opts.min_degree = 2;
    opts.connected_only = true;
    opts.dedup = true;
    CHECK(count_small(3, opts) == 1); // the triangle
    CHECK(count_small(4, opts) == 3); // C4, diamond, K4
}

TEST_CASE("enumerate_small agrees with an independent recount")
{
    // second enumerator: recursive edge choices instead of mask iteration
    const int n = 5;
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.emplace_back(u, v);
    long long recount = 0;
    std::vector<Edge> chosen;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == slots.size()) {
            Graph g(n, chosen);
            if (g.min_degree() >= 2 && g.is_connected())
                ++recount;
            return;
        }
        rec(i + 1);
        chosen.push_back(slots[i]);
        rec(i + 1);
        chosen.pop_back();
    };
    rec(0);

    EnumerateOptions opts;
    opts.min_degree = 2;
    opts.connected_only = true;
    CHECK(count_small(n, opts) == recount);
}

TEST_CASE("edge list round trip")
{
    Graph g = tadpole(5, 3);
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    Graph back = read_edge_list(in);
    CHECK(back == g);
}

TEST_CASE("edge list parse errors carry line numbers")
{
    std::istringstream empty("");
    CHECK_THROWS_AS(read_edge_list(empty), ParseError);

    std::istringstream bad("# comment\n3 2\n0 1\n0 7\n");
    try {
        read_edge_list(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("writer emits ordered edges with header")
{
    Graph g(4, {{3, 2}, {1, 0}, {2, 0}});
    std::ostringstream out;
    write_edge_list(out, g);
    CHECK(out.str() == "4 3\n0 1\n0 2\n2 3\n");
}

TEST_CASE("random models are reproducible and respect their contracts")
{
    Graph a = random_graph(RandomModel::UniformMinDeg2, 30, 7, 0);
    Graph b = random_graph(RandomModel::UniformMinDeg2, 30, 7, 0);
    CHECK(a == b);
    CHECK(a.min_degree() >= 2);
    CHECK_THROWS_AS(random_graph(RandomModel::UniformMinDeg2, 2, 7, 0),
                    std::invalid_argument);

    Graph c = random_graph(RandomModel::CycleUnion, 23, 11, 3);
    CHECK(c.min_degree() == 2);
    CHECK(c.max_degree() == 2);

    Graph s = random_graph(RandomModel::Spider, 14, 5, 2);
    CHECK(s.edge_count() == 13);
    int centers = 0;
    for (int v = 0; v < s.order(); ++v)
        centers += s.degree(v) >= 3;
    CHECK(centers == 1);
}
