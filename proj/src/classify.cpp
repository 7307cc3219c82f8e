#include "spc/classify.hpp"

#include <algorithm>
#include <sstream>

#include "spc/errors.hpp"

namespace spc {

std::optional<std::array<int, 4>> find_diamond(const Graph& g)
{
    // Chord endpoints first: an edge uw with two distinct common neighbors a, b
    // gives the diamond (u, a, w, b).
    for (int u = 0; u < g.n(); ++u) {
        for (int w : g.neighbors(u)) {
            if (w <= u)
                continue;
            std::vector<int> common;
            for (int a : g.neighbors(u))
                if (a != w && g.has_edge(a, w))
                    common.push_back(a);
            if (common.size() >= 2)
                return std::array<int, 4>{u, common[0], w, common[1]};
        }
    }
    return std::nullopt;
}

ClassProfile classify(const Graph& g)
{
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 3)
            fail(ErrorKind::not_subcubic,
                 "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));

    ClassProfile p;
    p.max_degree = g.max_degree();
    p.min_degree = g.min_degree();
    p.girth_profile.resize(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v)
        p.girth_profile[v] = shortest_cycle_through(g, v);

    auto triangles = enumerate_triangles(g);
    std::vector<int> triangle_count(static_cast<size_t>(g.n()), 0);
    for (const auto& t : triangles)
        for (int v : t.verts)
            ++triangle_count[v];

    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) != 3)
            continue;
        p.had_three_vertex = true;
        int deg3_nbrs = 0;
        int heavy_ok = 1;
        for (int w : g.neighbors(v)) {
            if (g.degree(w) == 3)
                ++deg3_nbrs;
            else
                heavy_ok = 0;
        }
        p.saturation = std::max(p.saturation, deg3_nbrs);
        if (heavy_ok)
            p.heavy.push_back(v);
        if (triangle_count[v] >= 2)
            p.rich.push_back(v);
        if (p.girth_profile[v] == kInfDist)
            p.g3 = kInfDist;
        else if (p.g3 != kInfDist)
            p.g3 = std::max(p.g3, p.girth_profile[v]);
        // claw: three pairwise non-adjacent neighbors
        auto nb = g.neighbors(v);
        if (!g.has_edge(nb[0], nb[1]) && !g.has_edge(nb[0], nb[2]) && !g.has_edge(nb[1], nb[2]))
            p.claw_free = false;
    }

    std::vector<char> is_heavy(static_cast<size_t>(g.n()), 0);
    for (int v : p.heavy)
        is_heavy[v] = 1;
    for (int v : p.heavy) {
        int cnt = 0;
        for (int w : g.neighbors(v))
            if (is_heavy[w])
                ++cnt;
        p.three_k = std::max(p.three_k, cnt);
    }

    p.diamond = find_diamond(g);
    return p;
}

bool in_class(const ClassProfile& p, const ClassConstraint& c)
{
    if (c.max_degree_max && p.max_degree > *c.max_degree_max)
        return false;
    if (c.saturation_max && p.saturation > *c.saturation_max)
        return false;
    if (c.three_k_max && p.three_k > *c.three_k_max)
        return false;
    if (p.had_three_vertex) {
        if (c.g3_max && (p.g3 == kInfDist || p.g3 > *c.g3_max))
            return false;
        if (c.g3_equals && p.g3 != *c.g3_equals)
            return false;
    }
    if (c.require_claw_free && !p.claw_free)
        return false;
    return true;
}

bool in_class(const Graph& g, const ClassConstraint& c)
{
    return in_class(classify(g), c);
}

ClassConstraint parse_constraint(const std::string& text)
{
    ClassConstraint c;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(),
                                   [](unsigned char ch) { return std::isspace(ch); }),
                    token.end());
        if (token.empty())
            continue;
        auto number_after = [&](size_t pos) {
            try {
                return std::stoi(token.substr(pos));
            } catch (const std::exception&) {
                fail(ErrorKind::parse, "bad class constraint token '" + token + "'");
            }
        };
        if (token == "clawfree")
            c.require_claw_free = true;
        else if (token.rfind("sat<=", 0) == 0)
            c.saturation_max = number_after(5);
        else if (token.rfind("3k<=", 0) == 0)
            c.three_k_max = number_after(4);
        else if (token.rfind("g3<=", 0) == 0)
            c.g3_max = number_after(4);
        else if (token.rfind("g3=", 0) == 0)
            c.g3_equals = number_after(3);
        else if (token.rfind("maxdeg<=", 0) == 0)
            c.max_degree_max = number_after(8);
        else
            fail(ErrorKind::parse, "bad class constraint token '" + token + "'");
    }
    return c;
}

std::string to_string(const ClassConstraint& c)
{
    std::vector<std::string> parts;
    if (c.saturation_max)
        parts.push_back("sat<=" + std::to_string(*c.saturation_max));
    if (c.three_k_max)
        parts.push_back("3k<=" + std::to_string(*c.three_k_max));
    if (c.g3_max)
        parts.push_back("g3<=" + std::to_string(*c.g3_max));
    if (c.g3_equals)
        parts.push_back("g3=" + std::to_string(*c.g3_equals));
    if (c.max_degree_max)
        parts.push_back("maxdeg<=" + std::to_string(*c.max_degree_max));
    if (c.require_claw_free)
        parts.push_back("clawfree");
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ',';
        out += parts[i];
    }
    return out;
}

} // namespace spc
