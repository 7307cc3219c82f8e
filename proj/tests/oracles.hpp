#pragma once

// Independent brute-force oracles for cross-checking the library. These stay
// deliberately naive and share no code with the implementation paths they
// check.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "spc/graph.hpp"

namespace oracle {

// every simple cycle through v, by DFS over simple paths
inline int shortest_cycle_through_bruteforce(const spc::Graph& g, int v)
{
    int best = spc::kInfDist;
    std::vector<int> path{v};
    std::vector<char> used(static_cast<size_t>(g.n()), 0);
    used[v] = 1;
    auto dfs = [&](auto&& self, int cur) -> void {
        for (int w : g.neighbors(cur)) {
            if (w == v && path.size() >= 3) {
                best = std::min(best, static_cast<int>(path.size()));
                continue;
            }
            if (used[w] || static_cast<int>(path.size()) >= best)
                continue;
            used[w] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            used[w] = 0;
        }
    };
    dfs(dfs, v);
    return best;
}

// the check suggested for shortest_cycle_through: min over incident edges of
// 1 + shortest v-u path with the edge uv removed
inline int shortest_cycle_via_edge_removal(const spc::Graph& g, int v)
{
    int best = spc::kInfDist;
    for (int u : g.neighbors(v)) {
        std::vector<int> dist(static_cast<size_t>(g.n()), spc::kInfDist);
        std::vector<int> queue{v};
        dist[v] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            for (int w : g.neighbors(x)) {
                if ((x == v && w == u) || (x == u && w == v))
                    continue;
                if (dist[w] == spc::kInfDist) {
                    dist[w] = dist[x] + 1;
                    queue.push_back(w);
                }
            }
        }
        if (dist[u] != spc::kInfDist)
            best = std::min(best, dist[u] + 1);
    }
    return best;
}

inline std::vector<std::array<int, 3>> triangles_bruteforce(const spc::Graph& g)
{
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            for (int c = b + 1; c < g.n(); ++c)
                if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))
                    out.push_back({a, b, c});
    return out;
}

// plain per-query BFS
inline int bfs_dist(const spc::Graph& g, int s, int t)
{
    std::vector<int> dist(static_cast<size_t>(g.n()), spc::kInfDist);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (int w : g.neighbors(x))
            if (dist[w] == spc::kInfDist) {
                dist[w] = dist[x] + 1;
                queue.push_back(w);
            }
    }
    return dist[t];
}

// direct definition scans, independent of classify()
struct ProfileScan {
    int saturation = 0;
    int three_k = 0;
    bool claw_free = true;
};

inline ProfileScan profile_bruteforce(const spc::Graph& g)
{
    ProfileScan p;
    std::vector<char> heavy(static_cast<size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) != 3)
            continue;
        int d3 = 0;
        for (int w : g.neighbors(v))
            if (g.degree(w) == 3)
                ++d3;
        p.saturation = std::max(p.saturation, d3);
        if (d3 == 3)
            heavy[v] = 1;
        auto nb = g.neighbors(v);
        int edges = g.has_edge(nb[0], nb[1]) + g.has_edge(nb[0], nb[2]) +
                    g.has_edge(nb[1], nb[2]);
        if (edges == 0)
            p.claw_free = false;
    }
    for (int v = 0; v < g.n(); ++v) {
        if (!heavy[v])
            continue;
        int hh = 0;
        for (int w : g.neighbors(v))
            if (heavy[w])
                ++hh;
        p.three_k = std::max(p.three_k, hh);
    }
    return p;
}

// random subcubic graph, deterministic per seed
inline spc::Graph random_subcubic(std::mt19937_64& rng, int n, double edge_bias = 1.2)
{
    std::vector<spc::Edge> edges;
    std::vector<int> degree(static_cast<size_t>(n), 0);
    std::set<std::pair<int, int>> seen;
    int attempts = static_cast<int>(edge_bias * n) + 3;
    for (int i = 0; i < attempts; ++i) {
        int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (u == v || degree[u] >= 3 || degree[v] >= 3)
            continue;
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second)
            continue;
        edges.emplace_back(u, v);
        ++degree[u];
        ++degree[v];
    }
    return spc::Graph(n, edges);
}

} // namespace oracle
