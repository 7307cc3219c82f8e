#pragma once

#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace spc {

// Sentinel for "no path" / "no cycle". Distances never get added to it blindly.
inline constexpr int kInfDist = std::numeric_limits<int>::max();

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }
    std::span<const int> neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    int max_degree() const;
    int min_degree() const;
    std::vector<Edge> edges() const;

private:
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

Graph build_graph(int n, const std::vector<Edge>& edges);

/// All-pairs hop distances, kInfDist when unreachable.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    int n() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    bool finite(int u, int v) const { return at(u, v) != kInfDist; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

struct CyclePath {
    std::vector<int> verts;
    bool is_cycle = false;

    int order() const { return static_cast<int>(verts.size()); }
};

std::vector<int> bfs_distances(const Graph& g, int root);

struct BfsTree {
    std::vector<int> parent; // -1 for root and unreached vertices
    std::vector<int> depth;  // -1 for unreached
    std::vector<int> order;  // visit order, reached vertices only
};

BfsTree bfs_tree(const Graph& g, int root);

std::vector<std::vector<int>> connected_components(const Graph& g);

/// Triangles as sorted vertex triples, each listed once.
std::vector<CyclePath> enumerate_triangles(const Graph& g);

/// Local girth g(v): length of the shortest cycle through v, kInfDist if none.
int shortest_cycle_through(const Graph& g, int v);

struct Bipartition {
    bool bipartite = false;
    std::vector<int> side; // 0/1 labels when bipartite
    CyclePath odd_cycle;   // witness when not bipartite
};

Bipartition is_bipartite(const Graph& g);

/// Subgraph plus the id translation both ways (from_orig[v] == -1 for dropped vertices).
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_orig;
    std::vector<int> from_orig;
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);
InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& drop);

/// Graph on t with edges between vertices at distance <= radius in g.
/// Vertex i of the result is to_orig[i] (t sorted ascending, deduplicated).
InducedSubgraph induced_power_subgraph(const Graph& g, const std::vector<int>& t, int radius);

} // namespace spc
