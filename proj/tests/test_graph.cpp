#include <doctest.h>

#include <random>

#include "spc/catalog.hpp"
#include "spc/errors.hpp"
#include "spc/graph.hpp"
#include "oracles.hpp"

using namespace spc;

namespace {

Graph cycle(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph path(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e);
}

} // namespace

TEST_CASE("build_graph validates input")
{
    auto c5 = cycle(5);
    CHECK(c5.n() == 5);
    CHECK(c5.m() == 5);
    for (int v = 0; v < 5; ++v)
        CHECK(c5.degree(v) == 2);

    auto g1 = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 5}, {2, 5}});
    CHECK(g1.degree(2) == 3);
    CHECK(g1.degree(4) == 3);
    CHECK(g1.degree(5) == 2);

    auto k1 = build_graph(1, {});
    CHECK(k1.n() == 1);
    CHECK(k1.m() == 0);

    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(build_graph(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), Error);
}

TEST_CASE("distance matrix basics")
{
    auto c5 = cycle(5);
    DistanceMatrix dm(c5);
    CHECK(dm.at(0, 2) == 2);
    CHECK(dm.at(0, 3) == 2);

    auto p4 = path(4);
    DistanceMatrix dmp(p4);
    CHECK(dmp.at(0, 3) == 3);

    // eccentricity of every vertex of g11 is at most 3
    const auto& g11 = catalog_get("g11").graph;
    DistanceMatrix dm11(g11);
    for (int u = 0; u < g11.n(); ++u)
        for (int v = 0; v < g11.n(); ++v)
            CHECK(dm11.at(u, v) <= 3);
}

TEST_CASE("distance matrix agrees with per-query BFS on random graphs")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 30; ++round) {
        int n = 2 + static_cast<int>(rng() % 62);
        auto g = oracle::random_subcubic(rng, n);
        DistanceMatrix dm(g);
        for (int u = 0; u < n; ++u) {
            CHECK(dm.at(u, u) == 0);
            for (int v = 0; v < n; ++v) {
                CHECK(dm.at(u, v) == dm.at(v, u));
                CHECK(dm.at(u, v) == oracle::bfs_dist(g, u, v));
            }
        }
        // triangle inequality on finite entries
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (dm.finite(a, b) && dm.finite(b, c))
                        CHECK(dm.at(a, c) <= dm.at(a, b) + dm.at(b, c));
    }
}

TEST_CASE("triangle enumeration")
{
    CHECK(enumerate_triangles(catalog_get("g5").graph).size() == 3);
    CHECK(enumerate_triangles(catalog_get("g11").graph).size() == 4);
    CHECK(enumerate_triangles(cycle(6)).empty());

    std::mt19937_64 rng(11);
    for (int round = 0; round < 25; ++round) {
        auto g = oracle::random_subcubic(rng, 4 + static_cast<int>(rng() % 40));
        auto ours = enumerate_triangles(g);
        auto brute = oracle::triangles_bruteforce(g);
        REQUIRE(ours.size() == brute.size());
        for (size_t i = 0; i < ours.size(); ++i) {
            CHECK(ours[i].verts[0] == brute[i][0]);
            CHECK(ours[i].verts[1] == brute[i][1]);
            CHECK(ours[i].verts[2] == brute[i][2]);
        }
    }
}

TEST_CASE("shortest cycle through a vertex")
{
    auto c7 = cycle(7);
    for (int v = 0; v < 7; ++v)
        CHECK(shortest_cycle_through(c7, v) == 7);

    CHECK(shortest_cycle_through(path(5), 2) == kInfDist);

    // 6-cycle with a chord: the chord endpoints sit on a 4-cycle
    const auto& g7 = catalog_get("g7").graph;
    CHECK(shortest_cycle_through(g7, 1) == 4);
    CHECK(shortest_cycle_through(g7, 4) == 4);

    std::mt19937_64 rng(13);
    for (int round = 0; round < 25; ++round) {
        auto g = oracle::random_subcubic(rng, 4 + static_cast<int>(rng() % 28));
        for (int v = 0; v < g.n(); ++v) {
            int got = shortest_cycle_through(g, v);
            CHECK(got == oracle::shortest_cycle_through_bruteforce(g, v));
            CHECK(got == oracle::shortest_cycle_via_edge_removal(g, v));
        }
    }
}

TEST_CASE("bipartite test with odd-cycle witness")
{
    CHECK(is_bipartite(cycle(6)).bipartite);

    auto res5 = is_bipartite(cycle(5));
    REQUIRE_FALSE(res5.bipartite);
    CHECK(res5.odd_cycle.order() % 2 == 1);

    auto k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto resk4 = is_bipartite(k4);
    REQUIRE_FALSE(resk4.bipartite);
    CHECK(resk4.odd_cycle.order() % 2 == 1);

    std::mt19937_64 rng(17);
    for (int round = 0; round < 40; ++round) {
        auto g = oracle::random_subcubic(rng, 3 + static_cast<int>(rng() % 30));
        auto res = is_bipartite(g);
        if (res.bipartite) {
            for (auto [u, v] : g.edges())
                CHECK(res.side[u] != res.side[v]);
        } else {
            const auto& cyc = res.odd_cycle.verts;
            REQUIRE(cyc.size() % 2 == 1);
            std::set<int> uniq(cyc.begin(), cyc.end());
            CHECK(uniq.size() == cyc.size());
            for (size_t i = 0; i < cyc.size(); ++i)
                CHECK(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
        }
    }
}

TEST_CASE("induced power subgraph")
{
    auto c7 = cycle(7);
    std::vector<int> all;
    for (int v = 0; v < 7; ++v)
        all.push_back(v);
    auto same = induced_power_subgraph(c7, all, 1);
    CHECK(same.graph.m() == c7.m());
    for (auto [u, v] : c7.edges())
        CHECK(same.graph.has_edge(u, v));

    CHECK(induced_power_subgraph(c7, {0, 3}, 3).graph.m() == 1);
    CHECK(induced_power_subgraph(c7, {0, 3}, 2).graph.m() == 0);
}

TEST_CASE("delete_vertices and components")
{
    auto c5 = cycle(5);
    auto ident = delete_vertices(c5, {});
    CHECK(ident.graph.n() == 5);
    CHECK(ident.graph.m() == 5);

    auto p4 = delete_vertices(c5, {0});
    CHECK(p4.graph.n() == 4);
    CHECK(p4.graph.m() == 3);
    CHECK(p4.graph.max_degree() == 2);

    // removing the two 3-vertices of g3 leaves two single edges
    const auto& g3 = catalog_get("g3").graph;
    std::vector<int> threes;
    for (int v = 0; v < g3.n(); ++v)
        if (g3.degree(v) == 3)
            threes.push_back(v);
    REQUIRE(threes.size() == 2);
    auto rest = delete_vertices(g3, threes);
    auto comps = connected_components(rest.graph);
    CHECK(comps.size() == 2);
    for (const auto& c : comps)
        CHECK(c.size() == 2);

    auto two_triangles = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(connected_components(two_triangles).size() == 2);
}

TEST_CASE("bfs tree")
{
    auto p3 = path(3);
    auto t = bfs_tree(p3, 1);
    CHECK(t.depth[0] == 1);
    CHECK(t.depth[2] == 1);
    CHECK(t.parent[0] == 1);

    std::mt19937_64 rng(23);
    for (int round = 0; round < 10; ++round) {
        auto g = oracle::random_subcubic(rng, 4 + static_cast<int>(rng() % 30));
        DistanceMatrix dm(g);
        auto bt = bfs_tree(g, 0);
        for (int v = 0; v < g.n(); ++v) {
            int d = dm.at(0, v);
            CHECK(bt.depth[v] == (d == kInfDist ? -1 : d));
        }
    }
}
