#include "spc/generator.hpp"

#include <algorithm>
#include <random>

#include "spc/errors.hpp"

namespace spc {

namespace {

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi) // inclusive
{
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct Builder {
    std::vector<Edge> edges;
    std::vector<int> degree;
    std::vector<int> ports; // vertices with one free slot left open on purpose

    int add_vertex()
    {
        degree.push_back(0);
        return static_cast<int>(degree.size()) - 1;
    }

    void add_edge(int u, int v)
    {
        edges.emplace_back(u, v);
        ++degree[u];
        ++degree[v];
    }

    int n() const { return static_cast<int>(degree.size()); }

    int triangle(int port_count) // port_count in 0..3
    {
        int a = add_vertex(), b = add_vertex(), c = add_vertex();
        add_edge(a, b);
        add_edge(b, c);
        add_edge(a, c);
        int verts[3] = {a, b, c};
        for (int i = 0; i < port_count; ++i)
            ports.push_back(verts[i]);
        return a;
    }

    int square(bool two_ports) // ports on opposite corners
    {
        int a = add_vertex(), b = add_vertex(), c = add_vertex(), d = add_vertex();
        add_edge(a, b);
        add_edge(b, c);
        add_edge(c, d);
        add_edge(d, a);
        ports.push_back(a);
        if (two_ports)
            ports.push_back(c);
        return a;
    }

    int diamond(bool port)
    {
        int a = add_vertex(), b = add_vertex(), c = add_vertex(), d = add_vertex();
        add_edge(a, b);
        add_edge(b, c);
        add_edge(c, d);
        add_edge(d, a);
        add_edge(a, c);
        if (port)
            ports.push_back(b);
        return a;
    }

    // heavy vertex with its triangle and the triangle hanging off its third leg
    int flower()
    {
        int x = add_vertex(), x1 = add_vertex(), x2 = add_vertex(), x3 = add_vertex();
        int y = add_vertex(), z = add_vertex();
        add_edge(x, x1);
        add_edge(x, x2);
        add_edge(x1, x2);
        add_edge(x, x3);
        add_edge(x3, y);
        add_edge(x3, z);
        add_edge(y, z);
        ports.push_back(x1);
        ports.push_back(x2);
        ports.push_back(y);
        return x;
    }

    // two adjacent would-be-heavy vertices with their triangles
    int heavy_pair()
    {
        int x = triangle(0), xp = triangle(0);
        // triangle() returns the first vertex; give both a mutual edge and
        // open ports on the remaining triangle vertices
        add_edge(x, xp);
        ports.push_back(x + 1);
        ports.push_back(x + 2);
        ports.push_back(xp + 1);
        ports.push_back(xp + 2);
        return x;
    }

    // triangle of would-be-heavy vertices, each with a pendant port
    int heavy_triangle()
    {
        int a = add_vertex(), b = add_vertex(), c = add_vertex();
        add_edge(a, b);
        add_edge(b, c);
        add_edge(a, c);
        for (int v : {a, b, c}) {
            int p = add_vertex();
            add_edge(v, p);
            ports.push_back(p);
        }
        return a;
    }

    bool adjacent(int u, int v) const
    {
        for (auto [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u))
                return true;
        return false;
    }

    void bridge(Rng& rng, int u, int v, int min_len)
    {
        int len = rand_int(rng, min_len, 3);
        if (len == 0 && (u == v || adjacent(u, v)))
            len = 1;
        int prev = u;
        for (int i = 0; i < len; ++i) {
            int w = add_vertex();
            add_edge(prev, w);
            prev = w;
        }
        add_edge(prev, v);
    }

    void pendant(Rng& rng, int u)
    {
        int len = rand_int(rng, 1, 2);
        int prev = u;
        for (int i = 0; i < len; ++i) {
            int w = add_vertex();
            add_edge(prev, w);
            prev = w;
        }
    }
};

Graph build_delta2(Rng& rng, int n_target)
{
    Builder b;
    while (b.n() < n_target) {
        int len = rand_int(rng, 1, std::max(3, n_target / 2));
        bool cycle = len >= 3 && rand_int(rng, 0, 1) == 1;
        int first = b.add_vertex();
        int prev = first;
        for (int i = 1; i < len; ++i) {
            int w = b.add_vertex();
            b.add_edge(prev, w);
            prev = w;
        }
        if (cycle)
            b.add_edge(prev, first);
    }
    return Graph(b.n(), b.edges);
}

Graph build_dominated_cycle(Rng& rng, int n_target)
{
    Builder b;
    int m = std::clamp(rand_int(rng, 5, std::max(5, (2 * n_target) / 3)), 5,
                       std::max(5, n_target - 1));
    std::vector<int> cyc;
    for (int i = 0; i < m; ++i)
        cyc.push_back(b.add_vertex());
    for (int i = 0; i < m; ++i)
        b.add_edge(cyc[i], cyc[(i + 1) % m]);
    // non-overlapping ears over consecutive pairs
    int i = 0;
    bool any = false;
    while (i + 1 < m) {
        if (rand_int(rng, 0, 2) != 0 || !any) {
            int x = b.add_vertex();
            b.add_edge(cyc[i], x);
            b.add_edge(cyc[i + 1], x);
            any = true;
            i += 2;
        } else {
            ++i;
        }
    }
    return Graph(b.n(), b.edges);
}

Graph assemble(Rng& rng, const ClassConstraint& c, int n_target)
{
    if (c.max_degree_max && *c.max_degree_max <= 2)
        return build_delta2(rng, n_target);

    int sat = c.saturation_max.value_or(3);
    bool heavy_allowed = !c.saturation_max || sat >= 3;
    int three_k = c.three_k_max.value_or(3);
    bool want_triangles = c.g3_equals.has_value() || (c.g3_max && *c.g3_max <= 4);
    bool squares_ok = !c.g3_equals || *c.g3_equals != 3;

    if (sat >= 2 && want_triangles && rand_int(rng, 0, 5) == 0)
        return build_dominated_cycle(rng, n_target);

    Builder b;
    int guard = 0;
    while (b.n() < n_target - 4 && ++guard < 64) {
        int roll = rand_int(rng, 0, 9);
        if (heavy_allowed && three_k >= 2 && roll == 0)
            b.heavy_triangle();
        else if (heavy_allowed && three_k >= 1 && roll == 1)
            b.heavy_pair();
        else if (heavy_allowed && roll <= 2)
            b.flower();
        else if (squares_ok && roll == 3)
            b.square(sat >= 1 || rand_int(rng, 0, 1) == 0);
        else if (sat >= 2 && roll == 4)
            b.diamond(rand_int(rng, 0, 1) == 1);
        else {
            int max_ports = sat == 0 ? 1 : (sat == 1 ? 2 : 3);
            b.triangle(rand_int(rng, sat == 0 ? 0 : 1, max_ports));
        }
    }
    if (b.n() == 0)
        b.triangle(1);

    // wire ports together with 2-vertex bridges; occasionally leave one open
    // or hang a pendant path off it
    std::shuffle(b.ports.begin(), b.ports.end(), rng);
    int min_len = sat >= 2 ? 0 : 1;
    std::vector<int> open = std::move(b.ports);
    b.ports.clear();
    while (open.size() >= 2) {
        int u = open.back();
        open.pop_back();
        int v = open.back();
        open.pop_back();
        int roll = rand_int(rng, 0, 9);
        if (roll == 0) {
            b.pendant(rng, u);
            open.push_back(v);
        } else if (roll == 1) {
            open.push_back(v); // leave u a 2-vertex
        } else {
            b.bridge(rng, u, v, min_len);
        }
    }
    if (!open.empty() && rand_int(rng, 0, 1) == 0)
        b.pendant(rng, open.front());
    return Graph(b.n(), b.edges);
}

bool edge_on_triangle(const Graph& g, int u, int v)
{
    for (int w : g.neighbors(u))
        if (w != v && g.has_edge(w, v))
            return true;
    return false;
}

std::optional<Graph> repair(const Graph& g0, const ClassConstraint& c, int budget)
{
    Graph g = g0;
    for (int round = 0; round < budget; ++round) {
        if (g.max_degree() > 3)
            return std::nullopt;
        auto profile = classify(g);
        if (in_class(profile, c))
            return g;

        auto edges = g.edges();
        int n = g.n();

        if (c.saturation_max && profile.saturation > *c.saturation_max) {
            // subdivide a 3-3 edge, ideally away from triangles
            int bu = -1, bv = -1;
            for (auto [u, v] : edges) {
                if (g.degree(u) != 3 || g.degree(v) != 3)
                    continue;
                bool tri = edge_on_triangle(g, u, v);
                if (bu == -1 || !tri) {
                    bu = u;
                    bv = v;
                    if (!tri)
                        break;
                }
            }
            if (bu == -1)
                return std::nullopt;
            std::vector<Edge> next;
            for (auto [u, v] : edges)
                if (!((u == bu && v == bv) || (u == bv && v == bu)))
                    next.emplace_back(u, v);
            next.emplace_back(bu, n);
            next.emplace_back(bv, n);
            g = Graph(n + 1, next);
            continue;
        }
        if (c.three_k_max && profile.three_k > *c.three_k_max) {
            std::vector<char> heavy(static_cast<size_t>(n), 0);
            for (int v : profile.heavy)
                heavy[v] = 1;
            int bu = -1, bv = -1;
            for (auto [u, v] : edges) {
                if (!heavy[u] || !heavy[v] || edge_on_triangle(g, u, v))
                    continue;
                bu = u;
                bv = v;
                break;
            }
            if (bu == -1)
                return std::nullopt;
            std::vector<Edge> next;
            for (auto [u, v] : edges)
                if (!((u == bu && v == bv) || (u == bv && v == bu)))
                    next.emplace_back(u, v);
            next.emplace_back(bu, n);
            next.emplace_back(bv, n);
            g = Graph(n + 1, next);
            continue;
        }

        int bound = c.g3_equals ? *c.g3_equals : (c.g3_max ? *c.g3_max : kInfDist);
        bool fixed = false;
        if (bound != kInfDist) {
            for (int v = 0; v < n && !fixed; ++v) {
                if (g.degree(v) != 3 || profile.girth_profile[v] <= bound)
                    continue;
                std::vector<int> twos;
                for (int w : g.neighbors(v))
                    if (g.degree(w) == 2)
                        twos.push_back(w);
                for (size_t a = 0; a < twos.size() && !fixed; ++a)
                    for (size_t b = a + 1; b < twos.size() && !fixed; ++b)
                        if (!g.has_edge(twos[a], twos[b])) {
                            auto next = edges;
                            next.emplace_back(twos[a], twos[b]);
                            g = Graph(n, next);
                            fixed = true;
                        }
            }
        }
        if (!fixed)
            return std::nullopt;
    }
    return std::nullopt;
}

} // namespace

Graph generate(const GenSpec& spec)
{
    Rng rng(spec.seed);
    for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
        int n_target = rand_int(rng, spec.n_min, spec.n_max);
        Graph raw = assemble(rng, spec.constraint, n_target);
        if (raw.n() > spec.n_max + 8)
            continue;
        auto fixed = repair(raw, spec.constraint, 32);
        if (!fixed)
            continue;
        if (fixed->n() < spec.n_min || fixed->n() > spec.n_max)
            continue;
        if (!in_class(*fixed, spec.constraint))
            continue;
        return *fixed;
    }
    fail(ErrorKind::generation_exhausted,
         "no in-class instance found for " + to_string(spec.constraint) + " within " +
             std::to_string(spec.max_attempts) + " attempts");
}

std::vector<Graph> generate_suite(const ClassConstraint& constraint, int count, int n_min,
                                  int n_max, std::uint64_t seed)
{
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        GenSpec spec;
        spec.constraint = constraint;
        spec.n_min = n_min;
        spec.n_max = n_max;
        spec.seed = seed + static_cast<std::uint64_t>(i) * 7919;
        out.push_back(generate(spec));
    }
    return out;
}

} // namespace spc
