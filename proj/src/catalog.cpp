#include "spc/catalog.hpp"

#include <algorithm>

#include "spc/errors.hpp"

namespace spc {

namespace {

Graph cycle_graph(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

std::vector<NamedGraph> build_catalog()
{
    std::vector<NamedGraph> cat;

    cat.push_back({"k1", Graph(1, {}), 0, 0, 0, true, "single vertex"});
    cat.push_back({"c5", cycle_graph(5), 0, 0, 0, true, "the exceptional 5-cycle"});

    // Fixed edge lists of the exceptional family, 0-based vertex ids.
    cat.push_back({"g1",
                   Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 5}, {2, 5}}),
                   0, 0, 4, std::nullopt, "0-saturated, g3=4, diameter 2"});
    cat.push_back({"g2",
                   Graph(6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}),
                   1, 0, 3, std::nullopt, "1-saturated, g3=3 (triangle with an ear)"});
    cat.push_back({"g3",
                   Graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}}),
                   1, 0, 3, std::nullopt, "two triangles joined by an edge"});
    cat.push_back({"g4",
                   Graph(5, {{0, 1}, {0, 2}, {0, 3}, {4, 1}, {4, 2}, {4, 3}}),
                   0, 0, 4, std::nullopt, "K_{2,3}"});
    {
        std::vector<Edge> e;
        for (int i = 0; i < 12; ++i)
            e.emplace_back(i, (i + 1) % 12);
        e.emplace_back(1, 11);
        e.emplace_back(3, 5);
        e.emplace_back(7, 9);
        cat.push_back({"g5", Graph(12, e), 1, 0, 3, std::nullopt,
                       "12-cycle with three triangle chords"});
    }
    {
        std::vector<Edge> e;
        for (int i = 0; i < 10; ++i)
            e.emplace_back(i, (i + 1) % 10);
        e.emplace_back(1, 9);
        e.emplace_back(3, 5);
        cat.push_back({"g6", Graph(10, e), 1, 0, 3, std::nullopt,
                       "10-cycle with two triangle chords"});
    }
    {
        std::vector<Edge> e;
        for (int i = 0; i < 6; ++i)
            e.emplace_back(i, (i + 1) % 6);
        e.emplace_back(1, 4);
        cat.push_back({"g7", Graph(6, e), 1, 0, 4, std::nullopt, "6-cycle with one chord"});
    }
    {
        std::vector<Edge> e;
        for (int i = 0; i < 8; ++i)
            e.emplace_back(i, (i + 1) % 8);
        e.emplace_back(0, 4);
        e.emplace_back(2, 6);
        cat.push_back({"g8", Graph(8, e), 1, 0, 5, std::nullopt, "8-cycle with two long chords"});
    }
    cat.push_back({"g9",
                   Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 5}, {2, 5}, {5, 6},
                             {1, 6}}),
                   2, 0, 4, std::nullopt, "2-saturated, g3=4"});
    {
        std::vector<Edge> e;
        for (int i = 0; i < 9; ++i)
            e.emplace_back(i, (i + 1) % 9);
        e.emplace_back(1, 8);
        e.emplace_back(2, 4);
        e.emplace_back(5, 7);
        cat.push_back({"g10", Graph(9, e), 2, 0, 3, std::nullopt,
                       "9-cycle with three triangle chords, diameter 3"});
    }
    {
        std::vector<Edge> e;
        for (int i = 0; i < 8; ++i)
            e.emplace_back(i, (i + 1) % 8);
        e.emplace_back(0, 8);
        e.emplace_back(1, 8);
        e.emplace_back(2, 9);
        e.emplace_back(3, 9);
        e.emplace_back(4, 10);
        e.emplace_back(5, 10);
        e.emplace_back(6, 11);
        e.emplace_back(7, 11);
        e.emplace_back(8, 10);
        e.emplace_back(9, 11);
        cat.push_back({"g11", Graph(12, e), 3, 3, 3, true,
                       "claw-free cubic, four disjoint triangles, diameter 3"});
    }
    {
        // Four disjoint triangles wired so the distance-3 graph on any exact
        // transversal is K4 (the tight (3,2)-saturated configuration).
        std::vector<Edge> e{{0, 1},  {0, 2},  {0, 3},   {1, 2},          // x triangle + stem
                            {4, 5},  {5, 6},  {6, 4},                    // y triangle
                            {7, 8},  {8, 9},  {9, 7},                    // z triangle
                            {10, 11}, {11, 12}, {12, 10},                // w triangle
                            {3, 10}, {1, 4},  {2, 7},  {6, 13}, {13, 8},
                            {9, 11}, {5, 12}};
        cat.push_back({"fig1", Graph(14, e), 3, 2, 3, std::nullopt,
                       "(3,2)-saturated gadget whose transversal power graph is K4"});
    }
    return cat;
}

std::vector<CatalogFact> build_facts()
{
    auto seq = [](std::initializer_list<int> v) { return make_sequence(std::vector<int>(v)); };
    std::vector<CatalogFact> f;
    f.push_back({"c5", seq({1, 2, 2}), false, "exceptional cycle"});
    f.push_back({"c5", seq({2, 2, 2, 2}), false, "exceptional cycle"});
    f.push_back({"c5", seq({1, 2, 2, 3}), true, "solver witness"});
    f.push_back({"c5", seq({2, 2, 2, 2, 3}), true, "solver witness"});
    f.push_back({"g1", seq({1, 2, 2}), false, "diameter-2 counting argument"});
    f.push_back({"g1", seq({2, 2, 2, 2, 2}), false, "diameter-2 counting argument"});
    f.push_back({"g1", seq({1, 2, 2, 3}), true, "fixed labeling"});
    f.push_back({"g2", seq({1, 2, 2}), false, "contains a 5-cycle with a near vertex"});
    f.push_back({"g2", seq({1, 2, 2, 3}), true, "fixed labeling"});
    f.push_back({"g2", seq({2, 2, 2, 2, 3}), true, "fixed labeling"});
    f.push_back({"g3", seq({1, 2, 2, 3}), true, "fixed labeling"});
    f.push_back({"g4", seq({2, 2, 2, 2}), false, "five vertices pairwise within distance 2"});
    f.push_back({"g5", seq({1, 1, 3}), false, "three triangles and a 9-cycle"});
    f.push_back({"g6", seq({2, 2, 2, 2}), false, "two triangles with a shared gateway"});
    f.push_back({"g7", seq({1, 2, 2}), false, "counting argument"});
    f.push_back({"g8", seq({1, 2, 2, 2}), false, "counting argument"});
    f.push_back({"g9", seq({1, 2, 2, 2}), false, "5-cycle with four 3-vertices"});
    f.push_back({"g9", seq({2, 2, 2, 2, 2}), false, "5-cycle neighborhood counting"});
    f.push_back({"g10", seq({1, 2, 2, 3}), false, "diameter-3 counting argument"});
    f.push_back({"g10", seq({1, 1, 3, 3}), false, "three disjoint triangles, diameter 3"});
    f.push_back({"g10", seq({1, 1, 2}), true, "solver witness"});
    f.push_back({"g11", seq({1, 1, 3, 3, 3}), false, "four disjoint triangles, diameter 3"});
    f.push_back({"g11", seq({1, 1, 2, 2}), true, "solver witness"});
    f.push_back({"fig1", seq({1, 1, 3, 3, 3}), true, "solver witness"});
    return f;
}

} // namespace

const std::vector<NamedGraph>& catalog_all()
{
    static const std::vector<NamedGraph> cat = build_catalog();
    return cat;
}

const NamedGraph& catalog_get(const std::string& name)
{
    for (const auto& g : catalog_all())
        if (g.name == name)
            return g;
    fail(ErrorKind::unknown_name, "unknown catalog graph '" + name + "'");
}

std::vector<std::string> catalog_names()
{
    std::vector<std::string> names;
    for (const auto& g : catalog_all())
        names.push_back(g.name);
    return names;
}

const std::vector<CatalogFact>& all_facts()
{
    static const std::vector<CatalogFact> facts = build_facts();
    return facts;
}

namespace {

bool extend_iso(const Graph& a, const Graph& b, std::vector<int>& map, std::vector<char>& used,
                int v)
{
    if (v == a.n())
        return true;
    for (int w = 0; w < b.n(); ++w) {
        if (used[w] || a.degree(v) != b.degree(w))
            continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (a.has_edge(u, v) != b.has_edge(map[u], w))
                ok = false;
        if (!ok)
            continue;
        map[v] = w;
        used[w] = 1;
        if (extend_iso(a, b, map, used, v + 1))
            return true;
        used[w] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b)
{
    if (a.n() != b.n() || a.m() != b.m())
        return std::nullopt;
    std::vector<int> deg_a, deg_b;
    for (int v = 0; v < a.n(); ++v)
        deg_a.push_back(a.degree(v));
    for (int v = 0; v < b.n(); ++v)
        deg_b.push_back(b.degree(v));
    std::sort(deg_a.begin(), deg_a.end());
    std::sort(deg_b.begin(), deg_b.end());
    if (deg_a != deg_b)
        return std::nullopt;
    std::vector<int> map(static_cast<size_t>(a.n()), -1);
    std::vector<char> used(static_cast<size_t>(b.n()), 0);
    if (extend_iso(a, b, map, used, 0))
        return map;
    return std::nullopt;
}

} // namespace spc
