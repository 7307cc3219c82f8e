#include "spc/solver.hpp"

#include <algorithm>
#include <chrono>

#include "spc/errors.hpp"

namespace spc {

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
    const Graph& g;
    const SSequence& s;
    const SolveConfig& cfg;
    DistanceMatrix dm;
    int n;
    int k;

    std::vector<int> order;       // vertices in branching order
    std::vector<int> rank;        // inverse of order
    std::vector<std::vector<std::vector<int>>> ball; // ball[c][v]: u != v with dist <= s_c+1
    std::vector<std::vector<int>> blocked;           // blocked[c][v]: #assigned class-c within range
    std::vector<int> cand;        // per vertex, #classes with blocked == 0
    std::vector<int> assign;      // 0 = none, else class
    std::vector<int> used;        // per class, #uses
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    Clock::time_point deadline{};
    bool has_deadline = false;

    Searcher(const Graph& graph, const SSequence& seq, const SolveConfig& config)
        : g(graph), s(seq), cfg(config), dm(graph), n(graph.n()), k(seq.k())
    {
        build_order();
        ball.assign(static_cast<size_t>(k), {});
        for (int c = 0; c < k; ++c) {
            ball[c].assign(static_cast<size_t>(n), {});
            for (int v = 0; v < n; ++v)
                for (int u = 0; u < n; ++u)
                    if (u != v && dm.at(u, v) != kInfDist && dm.at(u, v) <= s.values[c])
                        ball[c][v].push_back(u);
        }
        blocked.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(n), 0));
        cand.assign(static_cast<size_t>(n), k);
        assign.assign(static_cast<size_t>(n), 0);
        used.assign(static_cast<size_t>(k), 0);
        if (cfg.wall_seconds) {
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(*cfg.wall_seconds));
            has_deadline = true;
        }
    }

    // BFS order starting from the smallest vertex of the largest component,
    // remaining components by decreasing size (ties by smallest vertex).
    void build_order()
    {
        auto comps = connected_components(g);
        std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size())
                return a.size() > b.size();
            return a.front() < b.front();
        });
        for (const auto& comp : comps) {
            auto t = bfs_tree(g, comp.front());
            for (int v : t.order)
                order.push_back(v);
        }
        rank.assign(static_cast<size_t>(n), 0);
        for (size_t i = 0; i < order.size(); ++i)
            rank[order[i]] = static_cast<int>(i);
    }

    bool class_allowed(int v, int c1) const
    {
        if (cfg.allowed.empty())
            return true;
        return (cfg.allowed[static_cast<size_t>(v)] >> (c1 - 1)) & 1u;
    }

    bool place(int v, int c1)
    {
        assign[v] = c1;
        ++used[c1 - 1];
        bool dead = false;
        for (int u : ball[c1 - 1][v]) {
            if (blocked[c1 - 1][u]++ == 0) {
                if (--cand[u] == 0 && assign[u] == 0)
                    dead = true;
            }
        }
        return !dead;
    }

    void unplace(int v, int c1)
    {
        for (int u : ball[c1 - 1][v])
            if (--blocked[c1 - 1][u] == 0)
                ++cand[u];
        --used[c1 - 1];
        assign[v] = 0;
    }

    bool dfs(int pos)
    {
        if (out_of_budget)
            return false;
        if (pos == n)
            return true;
        ++nodes;
        if (nodes > cfg.node_budget) {
            out_of_budget = true;
            return false;
        }
        if (has_deadline && (nodes & 0x3ff) == 0 && Clock::now() > deadline) {
            out_of_budget = true;
            return false;
        }
        int v = order[pos];
        for (int c1 = 1; c1 <= k; ++c1) {
            if (blocked[c1 - 1][v] != 0)
                continue;
            if (!class_allowed(v, c1))
                continue;
            // Equal-value classes are interchangeable: class c may open only
            // after class c-1 of the same value has been used.
            if (cfg.symmetry_breaking && c1 > 1 && s.values[c1 - 1] == s.values[c1 - 2] &&
                used[c1 - 2] == 0)
                continue;
            bool viable = place(v, c1);
            if (viable && dfs(pos + 1))
                return true;
            unplace(v, c1);
            if (out_of_budget)
                return false;
        }
        return false;
    }
};

} // namespace

SolveOutcome decide(const Graph& g, const SSequence& s, const SolveConfig& cfg)
{
    SolveOutcome out;
    if (g.n() == 0) {
        out.status = SolveOutcome::Status::colorable;
        out.witness = PackingColoring{};
        return out;
    }
    Searcher search(g, s, cfg);
    bool found = search.dfs(0);
    out.nodes = search.nodes;
    if (search.out_of_budget) {
        out.status = SolveOutcome::Status::timeout;
        return out;
    }
    if (!found) {
        out.status = SolveOutcome::Status::not_colorable;
        return out;
    }
    PackingColoring witness{search.assign};
    auto check = verify(g, search.dm, s, witness);
    if (!check.valid)
        fail(ErrorKind::internal_structure, "solver produced an invalid witness");
    out.status = SolveOutcome::Status::colorable;
    out.witness = std::move(witness);
    return out;
}

namespace {

bool enumerate_assignments(const Graph& g, const DistanceMatrix& dm, const SSequence& s,
                           std::vector<int>& assign, int v)
{
    if (v == g.n())
        return true;
    for (int c = 1; c <= s.k(); ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (assign[u] == c && dm.at(u, v) != kInfDist && dm.at(u, v) <= s.at(c))
                ok = false;
        if (!ok)
            continue;
        assign[v] = c;
        if (enumerate_assignments(g, dm, s, assign, v + 1))
            return true;
        assign[v] = 0;
    }
    return false;
}

} // namespace

SolveOutcome decide_all_small(const Graph& g, const SSequence& s)
{
    if (g.n() > 10 || s.k() > 6)
        fail(ErrorKind::too_large,
             "decide_all_small limited to n <= 10 and k <= 6, got n=" + std::to_string(g.n()) +
                 " k=" + std::to_string(s.k()));
    SolveOutcome out;
    if (g.n() == 0) {
        out.status = SolveOutcome::Status::colorable;
        out.witness = PackingColoring{};
        return out;
    }
    DistanceMatrix dm(g);
    std::vector<int> assign(static_cast<size_t>(g.n()), 0);
    if (enumerate_assignments(g, dm, s, assign, 0)) {
        PackingColoring witness{assign};
        if (!verify(g, dm, s, witness).valid)
            fail(ErrorKind::internal_structure, "enumeration produced an invalid witness");
        out.status = SolveOutcome::Status::colorable;
        out.witness = std::move(witness);
    } else {
        out.status = SolveOutcome::Status::not_colorable;
    }
    return out;
}

} // namespace spc
