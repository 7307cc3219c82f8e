#include "spc/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "spc/errors.hpp"

namespace spc {

Graph::Graph(int n, const std::vector<Edge>& edges)
{
    if (n < 0)
        fail(ErrorKind::malformed_edge, "negative vertex count");
    adj_.assign(static_cast<size_t>(n), {});
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(ErrorKind::malformed_edge,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            fail(ErrorKind::malformed_edge, "loop at vertex " + std::to_string(u));
        Edge key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second)
            fail(ErrorKind::malformed_edge,
                 "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
    }
    for (auto& nb : adj_)
        std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const
{
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const
{
    int d = 0;
    for (int v = 0; v < n(); ++v)
        d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const
{
    if (n() == 0)
        return 0;
    int d = degree(0);
    for (int v = 1; v < n(); ++v)
        d = std::min(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<Edge>& edges)
{
    return Graph(n, edges);
}

std::vector<int> bfs_distances(const Graph& g, int root)
{
    std::vector<int> dist(static_cast<size_t>(g.n()), kInfDist);
    std::deque<int> q;
    dist[root] = 0;
    q.push_back(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist[w] == kInfDist) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    return dist;
}

BfsTree bfs_tree(const Graph& g, int root)
{
    BfsTree t;
    t.parent.assign(static_cast<size_t>(g.n()), -1);
    t.depth.assign(static_cast<size_t>(g.n()), -1);
    std::deque<int> q;
    t.depth[root] = 0;
    q.push_back(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        t.order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (t.depth[w] == -1) {
                t.depth[w] = t.depth[v] + 1;
                t.parent[w] = v;
                q.push_back(w);
            }
        }
    }
    return t;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.n())
{
    d_.resize(static_cast<size_t>(n_) * n_);
    for (int v = 0; v < n_; ++v) {
        auto row = bfs_distances(g, v);
        std::copy(row.begin(), row.end(), d_.begin() + static_cast<size_t>(v) * n_);
    }
}

std::vector<std::vector<int>> connected_components(const Graph& g)
{
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s])
            continue;
        std::vector<int> comp;
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<CyclePath> enumerate_triangles(const Graph& g)
{
    std::vector<CyclePath> out;
    for (int u = 0; u < g.n(); ++u) {
        auto nb = g.neighbors(u);
        for (size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] <= u)
                continue;
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (nb[j] <= u)
                    continue;
                if (g.has_edge(nb[i], nb[j]))
                    out.push_back({{u, nb[i], nb[j]}, true});
            }
        }
    }
    return out;
}

namespace {

// BFS from src to dst in g avoiding the vertex `skip`.
int dist_avoiding(const Graph& g, int src, int dst, int skip)
{
    if (src == skip || dst == skip)
        return kInfDist;
    std::vector<int> dist(static_cast<size_t>(g.n()), kInfDist);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (v == dst)
            return dist[v];
        for (int w : g.neighbors(v)) {
            if (w == skip || dist[w] != kInfDist)
                continue;
            dist[w] = dist[v] + 1;
            q.push_back(w);
        }
    }
    return dist[dst];
}

} // namespace

int shortest_cycle_through(const Graph& g, int v)
{
    // Any cycle through v enters and leaves via two distinct neighbors a, b;
    // its remainder is an a-b path avoiding v.
    auto nb = g.neighbors(v);
    int best = kInfDist;
    for (size_t i = 0; i < nb.size(); ++i) {
        for (size_t j = i + 1; j < nb.size(); ++j) {
            int d = dist_avoiding(g, nb[i], nb[j], v);
            if (d != kInfDist)
                best = std::min(best, d + 2);
        }
    }
    return best;
}

Bipartition is_bipartite(const Graph& g)
{
    Bipartition res;
    res.side.assign(static_cast<size_t>(g.n()), -1);
    std::vector<int> parent(static_cast<size_t>(g.n()), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (res.side[s] != -1)
            continue;
        res.side[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v)) {
                if (res.side[w] == -1) {
                    res.side[w] = 1 - res.side[v];
                    parent[w] = v;
                    q.push_back(w);
                } else if (res.side[w] == res.side[v]) {
                    // Odd cycle: walk both endpoints to their lowest common ancestor.
                    std::vector<int> up_v{v}, up_w{w};
                    std::vector<char> on_v(static_cast<size_t>(g.n()), 0);
                    for (int x = v; x != -1; x = parent[x]) {
                        on_v[x] = 1;
                        if (x != v)
                            up_v.push_back(x);
                    }
                    int lca = w;
                    while (!on_v[lca]) {
                        lca = parent[lca];
                        up_w.push_back(lca);
                    }
                    std::vector<int> cyc;
                    for (int x = v; x != lca; x = parent[x])
                        cyc.push_back(x);
                    cyc.push_back(lca);
                    std::vector<int> tail;
                    for (int x = w; x != lca; x = parent[x])
                        tail.push_back(x);
                    std::reverse(tail.begin(), tail.end());
                    cyc.insert(cyc.end(), tail.begin(), tail.end());
                    res.bipartite = false;
                    res.odd_cycle = {std::move(cyc), true};
                    return res;
                }
            }
        }
    }
    res.bipartite = true;
    return res;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep)
{
    InducedSubgraph out;
    out.to_orig = keep;
    std::sort(out.to_orig.begin(), out.to_orig.end());
    out.to_orig.erase(std::unique(out.to_orig.begin(), out.to_orig.end()), out.to_orig.end());
    out.from_orig.assign(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < out.to_orig.size(); ++i)
        out.from_orig[out.to_orig[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (int u : out.to_orig)
        for (int v : g.neighbors(u))
            if (u < v && out.from_orig[v] != -1)
                edges.emplace_back(out.from_orig[u], out.from_orig[v]);
    out.graph = Graph(static_cast<int>(out.to_orig.size()), edges);
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& drop)
{
    std::vector<char> dropped(static_cast<size_t>(g.n()), 0);
    for (int v : drop)
        dropped[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!dropped[v])
            keep.push_back(v);
    return induced_subgraph(g, keep);
}

InducedSubgraph induced_power_subgraph(const Graph& g, const std::vector<int>& t, int radius)
{
    InducedSubgraph out;
    out.to_orig = t;
    std::sort(out.to_orig.begin(), out.to_orig.end());
    out.to_orig.erase(std::unique(out.to_orig.begin(), out.to_orig.end()), out.to_orig.end());
    out.from_orig.assign(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < out.to_orig.size(); ++i)
        out.from_orig[out.to_orig[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (size_t i = 0; i < out.to_orig.size(); ++i) {
        auto dist = bfs_distances(g, out.to_orig[i]);
        for (size_t j = i + 1; j < out.to_orig.size(); ++j)
            if (dist[out.to_orig[j]] != kInfDist && dist[out.to_orig[j]] <= radius)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    out.graph = Graph(static_cast<int>(out.to_orig.size()), edges);
    return out;
}

} // namespace spc
