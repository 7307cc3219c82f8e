#include "spc/linear.hpp"

#include <algorithm>

#include "spc/errors.hpp"

namespace spc {

namespace {

std::vector<int> repeat_fill(const std::vector<int>& prefix, const std::vector<int>& block, int n)
{
    std::vector<int> out = prefix;
    while (static_cast<int>(out.size()) < n)
        out.push_back(block[(out.size() - prefix.size()) % block.size()]);
    return out;
}

std::vector<int> tail_pattern(const std::vector<int>& block, const std::vector<int>& tail, int n)
{
    std::vector<int> out;
    int body = n - static_cast<int>(tail.size());
    for (int i = 0; i < body; ++i)
        out.push_back(block[static_cast<size_t>(i) % block.size()]);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

// Classes: 1 -> 1, 2a -> 2, 2b -> 3. Case split on n mod 12.
std::vector<int> cycle_122(int n)
{
    if (n == 5)
        fail(ErrorKind::exceptional_graph, "C5 admits no (1,2,2)-packing coloring");
    int r = n % 12;
    if (r % 3 == 0)
        return repeat_fill({}, {1, 2, 3}, n);
    if (r % 3 == 1)
        return repeat_fill({1, 2, 1, 3}, {1, 2, 3}, n);
    switch (r) {
    case 2:
        return repeat_fill({2, 1, 3, 2, 1, 3}, {1, 2, 1, 3}, n);
    case 8:
        return repeat_fill({}, {1, 2, 1, 3}, n);
    case 11:
        return repeat_fill({1, 2, 3}, {1, 2, 1, 3}, n);
    case 5:
        return repeat_fill({3, 1, 2, 1, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 1},
                           {3, 1, 2, 1, 3, 1, 2, 1, 3, 1, 2, 1}, n);
    default:
        fail(ErrorKind::internal_structure, "unreachable cycle_122 case");
    }
}

// Recolor the class-1 vertices of the (1,2,2) pattern with two fresh classes.
// Classes: 2a -> 1, 2b -> 2, 2c -> 3, 2d -> 4.
std::vector<int> cycle_2222(int n)
{
    auto base = cycle_122(n);
    std::vector<int> out(base.size(), 0);
    std::vector<int> ones;
    for (int i = 0; i < n; ++i) {
        if (base[i] == 1)
            ones.push_back(i);
        else
            out[i] = base[i] - 1; // 2a,2b keep their identity as classes 1,2
    }
    // Consecutive class-1 positions at cyclic distance <= 2 must alternate
    // between the two fresh classes; a gap of 3+ lets the alternation reset.
    int cls = 3;
    for (size_t i = 0; i < ones.size(); ++i) {
        if (i > 0) {
            int gap = ones[i] - ones[i - 1];
            cls = (gap <= 2) ? (out[ones[i - 1]] == 3 ? 4 : 3) : 3;
        }
        out[ones[i]] = cls;
    }
    return out;
}

// Classes: 1 -> 1, 2 -> 2, 4 -> 3, 5 -> 4, k -> 5. Case split on n mod 8.
std::vector<int> cycle_1245k(int n)
{
    if (n == 3)
        return {1, 2, 3};
    const std::vector<int> block{1, 2, 1, 3, 1, 2, 1, 4};
    switch (n % 8) {
    case 0: return tail_pattern(block, {}, n);
    case 4: return tail_pattern(block, {1, 2, 1, 5}, n);
    case 1: return tail_pattern(block, {1, 2, 1, 3, 1, 4, 2, 1, 5}, n);
    case 5: return tail_pattern(block, {1, 3, 2, 1, 5}, n);
    case 2: return tail_pattern(block, {1, 2, 1, 3, 1, 4, 1, 2, 1, 5}, n);
    case 6: return tail_pattern(block, {1, 3, 1, 2, 1, 4}, n);
    case 3: return tail_pattern(block, {1, 2, 1, 3, 1, 4, 1, 2, 3, 1, 5}, n);
    case 7: return tail_pattern(block, {1, 3, 1, 2, 5, 1, 4}, n);
    default:
        fail(ErrorKind::internal_structure, "unreachable cycle_1245k case");
    }
}

Graph standard_cycle(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph standard_path(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

void check_on(const Graph& g, const SSequence& s, const PackingColoring& c, const char* what)
{
    if (!verify(g, s, c).valid)
        fail(ErrorKind::internal_structure, std::string("invalid closed-form coloring: ") + what);
}

} // namespace

SSequence scheme_sequence(const LinearScheme& scheme)
{
    switch (scheme.kind) {
    case LinearKind::l11k:
        return make_sequence({1, 1, scheme.k});
    case LinearKind::l122:
    case LinearKind::path122_ends1:
        return make_sequence({1, 2, 2});
    case LinearKind::l2222:
    case LinearKind::path2222_equal_ends:
        return make_sequence({2, 2, 2, 2});
    case LinearKind::l1245k:
        return make_sequence({1, 2, 4, 5, scheme.k});
    }
    fail(ErrorKind::internal_structure, "unknown scheme");
}

PackingColoring color_cycle(int n, const LinearScheme& scheme)
{
    if (n < 3)
        fail(ErrorKind::too_short, "cycle needs order >= 3");
    std::vector<int> cls;
    switch (scheme.kind) {
    case LinearKind::l11k:
        if (scheme.k < 1)
            fail(ErrorKind::bad_sequence, "l11k needs k >= 1");
        for (int i = 0; i < n; ++i)
            cls.push_back(1 + (i % 2));
        if (n % 2 == 1)
            cls.back() = 3;
        break;
    case LinearKind::l122:
        cls = cycle_122(n);
        break;
    case LinearKind::l2222:
        if (n == 5)
            fail(ErrorKind::exceptional_graph, "C5 admits no (2,2,2,2)-packing coloring");
        cls = cycle_2222(n);
        break;
    case LinearKind::l1245k:
        if (scheme.k < 6)
            fail(ErrorKind::bad_sequence, "l1245k needs k >= 6");
        cls = cycle_1245k(n);
        break;
    default:
        fail(ErrorKind::bad_sequence, "path scheme passed to color_cycle");
    }
    PackingColoring c{std::move(cls)};
    check_on(standard_cycle(n), scheme_sequence(scheme), c, "cycle");
    return c;
}

PackingColoring color_path_ends1(int n)
{
    if (n < 3)
        fail(ErrorKind::too_short, "color_path_ends1 needs n >= 3");
    std::vector<int> cls;
    if (n % 3 == 1) {
        cls = repeat_fill({}, {1, 2, 3}, n - 1);
        cls.push_back(1);
    } else if (n % 3 == 0) {
        cls = repeat_fill({}, {1, 2, 3}, n - 3);
        cls.insert(cls.end(), {1, 2, 1});
    } else {
        cls = repeat_fill({}, {1, 2, 3}, n - 5);
        cls.insert(cls.end(), {1, 2, 1, 3, 1});
    }
    PackingColoring c{std::move(cls)};
    check_on(standard_path(n), make_sequence({1, 2, 2}), c, "path ends1");
    if (c.cls.front() != 1 || c.cls.back() != 1)
        fail(ErrorKind::internal_structure, "path ends1 endpoints not in class 1");
    return c;
}

PackingColoring color_path_equal_ends(int n)
{
    if (n < 4)
        fail(ErrorKind::too_short, "color_path_equal_ends needs n >= 4");
    std::vector<int> cls(static_cast<size_t>(n));
    cls.front() = cls.back() = 1;
    for (int i = 1; i + 1 < n; ++i)
        cls[i] = 2 + ((i - 1) % 3);
    PackingColoring c{std::move(cls)};
    check_on(standard_path(n), make_sequence({2, 2, 2, 2}), c, "path equal ends");
    return c;
}

CyclePath trace_component(const Graph& g, const std::vector<int>& comp)
{
    for (int v : comp)
        if (g.degree(v) > 2)
            fail(ErrorKind::precondition_violated, "component has a vertex of degree > 2");
    CyclePath out;
    if (comp.size() == 1) {
        out.verts = comp;
        return out;
    }
    int start = -1;
    for (int v : comp)
        if (g.degree(v) <= 1) {
            start = v;
            break;
        }
    out.is_cycle = (start == -1);
    if (out.is_cycle)
        start = comp.front(); // comp is sorted, so this is the smallest id
    int prev = -1, cur = start;
    while (true) {
        out.verts.push_back(cur);
        int next = -1;
        for (int w : g.neighbors(cur))
            if (w != prev) {
                next = w;
                break;
            }
        if (next == -1)
            break;
        prev = cur;
        cur = next;
        if (out.is_cycle && cur == start)
            break;
        if (!out.is_cycle && static_cast<int>(out.verts.size()) == static_cast<int>(comp.size()))
            break;
    }
    if (out.verts.size() != comp.size())
        fail(ErrorKind::internal_structure, "component trace did not cover the component");
    return out;
}

namespace {

std::vector<int> path_pattern(int n, const LinearScheme& scheme)
{
    switch (scheme.kind) {
    case LinearKind::l11k: {
        std::vector<int> cls;
        for (int i = 0; i < n; ++i)
            cls.push_back(1 + (i % 2));
        return cls;
    }
    case LinearKind::l122:
    case LinearKind::path122_ends1:
        if (n == 1)
            return {1};
        if (n == 2)
            return {1, 2};
        return color_path_ends1(n).cls;
    case LinearKind::l2222:
    case LinearKind::path2222_equal_ends:
        if (n == 1)
            return {1};
        if (n == 2)
            return {1, 2};
        if (n == 3)
            return {1, 2, 3};
        return color_path_equal_ends(n).cls;
    case LinearKind::l1245k:
        if (n == 1)
            return {1};
        if (n == 2)
            return {1, 2};
        // A cycle coloring stays valid on the path: dropping an edge only
        // increases distances.
        return cycle_1245k(n);
    }
    fail(ErrorKind::internal_structure, "unknown scheme");
}

} // namespace

PackingColoring color_delta2(const Graph& g, const LinearScheme& scheme)
{
    if (g.max_degree() > 2)
        fail(ErrorKind::precondition_violated, "color_delta2 needs max degree <= 2");
    PackingColoring out{std::vector<int>(static_cast<size_t>(g.n()), 0)};
    for (const auto& comp : connected_components(g)) {
        auto trail = trace_component(g, comp);
        std::vector<int> cls;
        if (trail.is_cycle)
            cls = color_cycle(trail.order(), scheme).cls;
        else
            cls = path_pattern(trail.order(), scheme);
        for (int i = 0; i < trail.order(); ++i)
            out.cls[trail.verts[i]] = cls[i];
    }
    if (!verify(g, scheme_sequence(scheme), out).valid)
        fail(ErrorKind::internal_structure, "color_delta2 assembled an invalid coloring");
    return out;
}

} // namespace spc
