#include "spc/colorers.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "spc/catalog.hpp"
#include "spc/errors.hpp"
#include "spc/linear.hpp"
#include "spc/structure.hpp"

namespace spc {

namespace {

// ---------------------------------------------------------------------------
// shared helpers
// ---------------------------------------------------------------------------

bool fits(const DistanceMatrix& dm, const SSequence& s, const std::vector<int>& cls, int v,
          int c)
{
    for (int u = 0; u < dm.n(); ++u) {
        if (u == v || cls[u] != c)
            continue;
        int d = dm.at(u, v);
        if (d != kInfDist && d <= s.at(c))
            return false;
    }
    return true;
}

int first_fit(const DistanceMatrix& dm, const SSequence& s, const std::vector<int>& cls, int v,
              const std::vector<int>& candidates)
{
    for (int c : candidates)
        if (fits(dm, s, cls, v, c))
            return c;
    return -1;
}

void paste(std::vector<int>& whole, const InducedSubgraph& sub, const std::vector<int>& part)
{
    for (int v = 0; v < static_cast<int>(part.size()); ++v)
        whole[sub.to_orig[v]] = part[v];
}

std::vector<int> remap_classes(const std::vector<int>& cls, const std::vector<int>& map)
{
    std::vector<int> out(cls.size());
    for (size_t i = 0; i < cls.size(); ++i)
        out[i] = map[static_cast<size_t>(cls[i]) - 1];
    return out;
}

std::vector<int> all_classes(int k)
{
    std::vector<int> out(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        out[i] = i + 1;
    return out;
}

// solver fallback restricted to a subset of classes on flagged vertices
std::vector<int> solve_component(const Graph& cg, const SSequence& s, const char* what)
{
    SolveConfig cfg;
    auto out = decide(cg, s, cfg);
    if (out.status != SolveOutcome::Status::colorable)
        fail(ErrorKind::internal_structure,
             std::string("guaranteed-colorable case failed to solve: ") + what);
    return out.witness->cls;
}

PackingColoring finish(const Graph& g, const SSequence& s, std::vector<int> cls,
                       const char* who)
{
    PackingColoring out{std::move(cls)};
    if (!verify(g, s, out).valid)
        fail(ErrorKind::internal_structure, std::string(who) + " assembled an invalid coloring");
    return out;
}

std::optional<std::vector<int>> match_catalog(const Graph& cg, const char* name,
                                              const std::vector<int>& stored)
{
    const auto& named = catalog_get(name);
    if (named.graph.n() != cg.n() || named.graph.m() != cg.m())
        return std::nullopt;
    auto iso = find_isomorphism(named.graph, cg);
    if (!iso)
        return std::nullopt;
    std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
    for (int i = 0; i < cg.n(); ++i)
        cls[(*iso)[i]] = stored[i];
    return cls;
}

bool is_catalog(const Graph& cg, const char* name)
{
    const auto& named = catalog_get(name);
    if (named.graph.n() != cg.n() || named.graph.m() != cg.m())
        return false;
    return find_isomorphism(named.graph, cg).has_value();
}

template <typename CompFn>
std::vector<int> over_components(const Graph& g, CompFn fn)
{
    std::vector<int> cls(static_cast<size_t>(g.n()), 0);
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        paste(cls, sub, fn(sub.graph));
    }
    return cls;
}

// ---------------------------------------------------------------------------
// low saturation: Delta<=2 base, short-cycle peel, exception graphs
// ---------------------------------------------------------------------------

enum class LowFam { f113k, f1223, f22223, f123456k };

struct LowCtx {
    LowFam fam;
    SSequence s;
    LinearScheme base_scheme;
    std::vector<int> base_map;     // linear class -> S class
    std::vector<int> peel_classes; // value-3 classes, in preference order
    std::vector<std::string>* trace = nullptr;
    std::set<int>* special_vertices = nullptr; // filled only at input level
};

std::optional<LowFam> low_family(const SSequence& s)
{
    const auto& v = s.values;
    if (v.size() == 4 && v[0] == 1 && v[1] == 1 && v[2] == 3 && v[3] >= 3)
        return LowFam::f113k;
    if (v == std::vector<int>{1, 2, 2, 3})
        return LowFam::f1223;
    if (v == std::vector<int>{2, 2, 2, 2, 3})
        return LowFam::f22223;
    if (v.size() == 6 && v[0] == 1 && v[1] == 2 && v[2] == 3 && v[3] == 4 && v[4] == 5 &&
        v[5] >= 6)
        return LowFam::f123456k;
    return std::nullopt;
}

LowCtx make_low_ctx(const SSequence& s)
{
    auto fam = low_family(s);
    if (!fam)
        fail(ErrorKind::bad_sequence, "unsupported sequence for color_low_saturation: " +
                                          to_string(s));
    LowCtx ctx;
    ctx.fam = *fam;
    ctx.s = s;
    switch (*fam) {
    case LowFam::f113k:
        ctx.base_scheme = {LinearKind::l11k, s.values[3]};
        ctx.base_map = {1, 2, 4};
        ctx.peel_classes = s.values[3] == 3 ? std::vector<int>{3, 4} : std::vector<int>{3};
        break;
    case LowFam::f1223:
        ctx.base_scheme = {LinearKind::l122, 0};
        ctx.base_map = {1, 2, 3};
        ctx.peel_classes = {4};
        break;
    case LowFam::f22223:
        ctx.base_scheme = {LinearKind::l2222, 0};
        ctx.base_map = {1, 2, 3, 4};
        ctx.peel_classes = {5};
        break;
    case LowFam::f123456k:
        ctx.base_scheme = {LinearKind::l1245k, s.values[5]};
        ctx.base_map = {1, 2, 4, 5, 6};
        ctx.peel_classes = {3};
        break;
    }
    return ctx;
}

// stored colorings for the exception graphs (catalog vertex numbering)
struct LowSpecial {
    std::vector<int> cls;
    bool good;
};

std::optional<LowSpecial> low_special_for(LowFam fam, const char* name)
{
    std::string key = name;
    if (key == "c5") {
        if (fam == LowFam::f1223)
            return LowSpecial{{1, 2, 1, 3, 4}, false};
        if (fam == LowFam::f22223)
            return LowSpecial{{1, 2, 3, 4, 5}, false};
        return std::nullopt; // the cycle schemes cover the other families
    }
    if (key == "g1") {
        if (fam == LowFam::f1223)
            return LowSpecial{{1, 2, 3, 1, 4, 1}, false};
        return std::nullopt;
    }
    if (key == "g2") {
        if (fam == LowFam::f1223)
            return LowSpecial{{1, 2, 1, 4, 1, 3}, false};
        if (fam == LowFam::f22223)
            return LowSpecial{{3, 1, 2, 5, 4, 2}, false};
        return std::nullopt;
    }
    if (key == "g3") {
        switch (fam) {
        case LowFam::f113k:
            return LowSpecial{{3, 2, 1, 2, 1, 4}, true};
        case LowFam::f1223:
            return LowSpecial{{2, 3, 1, 4, 2, 3}, false};
        case LowFam::f22223:
            return LowSpecial{{5, 1, 2, 3, 1, 4}, true};
        case LowFam::f123456k:
            return LowSpecial{{2, 4, 1, 5, 1, 2}, true};
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> low_special(const Graph& cg, const LowCtx& ctx, bool input_level)
{
    if (cg.n() != 5 && cg.n() != 6)
        return std::nullopt;
    for (const char* name : {"c5", "g1", "g2", "g3"}) {
        if (!is_catalog(cg, name))
            continue;
        if (std::string(name) == "g1" && ctx.fam == LowFam::f22223)
            fail(ErrorKind::excluded_graph,
                 "this graph admits no (2,2,2,2,3)-packing coloring");
        auto sp = low_special_for(ctx.fam, name);
        if (!sp)
            return std::nullopt; // the regular machinery handles this family
        auto mapped = match_catalog(cg, name, sp->cls);
        if (!mapped)
            fail(ErrorKind::internal_structure, "catalog size matched but mapping failed");
        if (ctx.trace)
            ctx.trace->push_back(std::string("exception graph ") + name + (input_level ? "" :
                                 " (inner)"));
        return mapped;
    }
    return std::nullopt;
}

std::vector<int> low_sat_graph(const Graph& g, const LowCtx& ctx, bool input_level);

std::vector<int> low_sat_component(const Graph& cg, const LowCtx& ctx, bool input_level)
{
    if (auto sp = low_special(cg, ctx, input_level)) {
        if (input_level && ctx.special_vertices) {
            // exempted from the goodness scan; ids are translated by the caller
            for (int v = 0; v < cg.n(); ++v)
                ctx.special_vertices->insert(v);
        }
        return *sp;
    }
    if (cg.max_degree() <= 2)
        return remap_classes(color_delta2(cg, ctx.base_scheme).cls, ctx.base_map);

    int x = -1;
    for (int v = 0; v < cg.n() && x == -1; ++v)
        if (cg.degree(v) == 3)
            x = v;
    // the two cycle neighbors realizing g(x)
    int best = kInfDist, na = -1, nb = -1;
    {
        auto rest = delete_vertices(cg, {x});
        DistanceMatrix dmr(rest.graph);
        auto nbrs = cg.neighbors(x);
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                int d = dmr.at(rest.from_orig[nbrs[i]], rest.from_orig[nbrs[j]]);
                if (d != kInfDist && d + 2 < best) {
                    best = d + 2;
                    na = nbrs[i];
                    nb = nbrs[j];
                }
            }
    }
    if (best > 4)
        fail(ErrorKind::out_of_class, "3-vertex with local girth above 4");
    int x1 = -1;
    if (cg.degree(na) == 2)
        x1 = na;
    if (cg.degree(nb) == 2 && (x1 == -1 || nb < x1))
        x1 = nb;
    if (x1 == -1)
        fail(ErrorKind::internal_structure, "short cycle through x without a 2-vertex neighbor");

    auto sub = delete_vertices(cg, {x1});
    auto inner = low_sat_graph(sub.graph, ctx, false);
    std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
    paste(cls, sub, inner);

    DistanceMatrix dm(cg);
    std::vector<int> candidates = ctx.peel_classes;
    for (int c : all_classes(ctx.s.k()))
        if (std::find(candidates.begin(), candidates.end(), c) == candidates.end())
            candidates.push_back(c);
    int c = first_fit(dm, ctx.s, cls, x1, candidates);
    if (c == -1)
        fail(ErrorKind::internal_structure, "peeled vertex has no admissible class");
    cls[x1] = c;
    return cls;
}

std::vector<int> low_sat_graph(const Graph& g, const LowCtx& ctx, bool input_level)
{
    std::vector<int> cls(static_cast<size_t>(g.n()), 0);
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        std::set<int> local_special;
        LowCtx inner = ctx;
        inner.special_vertices = input_level ? &local_special : nullptr;
        auto part = low_sat_component(sub.graph, inner, input_level);
        paste(cls, sub, part);
        if (input_level && ctx.special_vertices)
            for (int v : local_special)
                ctx.special_vertices->insert(sub.to_orig[v]);
    }
    return cls;
}

bool scan_good_low(const Graph& g, const ClassProfile& profile, const SSequence& s,
                   const std::vector<int>& cls, const std::set<int>& exempt)
{
    int bound = std::max(3, profile.g3 == kInfDist ? 3 : profile.g3);
    for (int v = 0; v < g.n(); ++v) {
        if (s.at(cls[v]) != 3 || exempt.count(v))
            continue;
        if (g.degree(v) != 2)
            return false;
        bool next_to_three = false;
        for (int w : g.neighbors(v))
            if (g.degree(w) == 3)
                next_to_three = true;
        if (!next_to_three)
            return false;
        if (profile.girth_profile[v] == kInfDist || profile.girth_profile[v] > bound)
            return false;
    }
    return true;
}

} // namespace

ColorerResult color_low_saturation(const Graph& g, const SSequence& s)
{
    auto ctx = make_low_ctx(s);
    auto profile = classify(g);
    bool class_a = in_class(profile, ClassConstraint{.saturation_max = 0, .g3_max = 4});
    bool class_b = in_class(profile, ClassConstraint{.saturation_max = 1, .g3_equals = 3});
    if (!class_a && !class_b)
        fail(ErrorKind::out_of_class,
             "color_low_saturation needs 0-saturated with g3 <= 4 or 1-saturated with g3 = 3");

    ColorerResult res;
    res.seq = s;
    std::set<int> special;
    LowCtx run = ctx;
    run.trace = &res.trace;
    run.special_vertices = &special;
    auto cls = low_sat_graph(g, run, true);
    res.coloring = finish(g, s, std::move(cls), "color_low_saturation");
    res.exempt.assign(special.begin(), special.end());
    res.good = scan_good_low(g, profile, s, res.coloring.cls, special);
    return res;
}

// ---------------------------------------------------------------------------
// 1-saturated, g3 <= 4: (1,2,2,2)
// ---------------------------------------------------------------------------

namespace {

const SSequence kSeq1222 = SSequence{{1, 2, 2, 2}};

std::vector<int> sat1g4_graph(const Graph& g, std::vector<std::string>& trace,
                              std::set<int>* special);

std::vector<int> sat1g4_component(const Graph& cg, std::vector<std::string>& trace,
                                  std::set<int>* special)
{
    if (cg.n() == 6) {
        if (auto mapped = match_catalog(cg, "g1", {1, 2, 3, 1, 4, 1})) {
            trace.push_back("exception graph g1");
            if (special)
                for (int v = 0; v < cg.n(); ++v)
                    special->insert(v);
            return *mapped;
        }
    }
    if (cg.max_degree() <= 2) {
        auto comps = connected_components(cg);
        if (comps.size() == 1 && cg.n() == 5 && cg.min_degree() == 2) {
            auto trail = trace_component(cg, comps[0]);
            std::vector<int> cls(5, 0);
            const int pattern[5] = {1, 2, 1, 3, 4};
            for (int i = 0; i < 5; ++i)
                cls[trail.verts[i]] = pattern[i];
            if (special)
                for (int v = 0; v < cg.n(); ++v)
                    special->insert(v);
            return cls;
        }
        return color_delta2(cg, {LinearKind::l122, 0}).cls;
    }

    // peel a 2-vertex on a short cycle through some 3-vertex
    int x = -1;
    for (int v = 0; v < cg.n(); ++v)
        if (cg.degree(v) == 3 && shortest_cycle_through(cg, v) == 3) {
            x = v;
            break;
        }
    DistanceMatrix dm(cg);
    if (x != -1) {
        int y = -1;
        for (int w : cg.neighbors(x)) {
            if (cg.degree(w) != 2)
                continue;
            // w on a triangle through x
            for (int w2 : cg.neighbors(x))
                if (w2 != w && cg.has_edge(w, w2) && (y == -1 || w < y))
                    y = w;
        }
        if (y == -1)
            fail(ErrorKind::internal_structure, "triangle through x without a 2-vertex");
        auto sub = delete_vertices(cg, {y});
        auto inner = sat1g4_graph(sub.graph, trace, nullptr);
        std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
        paste(cls, sub, inner);
        int c = first_fit(dm, kSeq1222, cls, y, {4, 1, 2, 3});
        if (c == -1)
            fail(ErrorKind::internal_structure, "triangle peel found no admissible class");
        cls[y] = c;
        return cls;
    }

    // every 3-vertex sits on a 4-cycle
    for (int v = 0; v < cg.n(); ++v)
        if (cg.degree(v) == 3) {
            x = v;
            break;
        }
    if (x == -1 || shortest_cycle_through(cg, x) != 4)
        fail(ErrorKind::out_of_class, "3-vertex without a cycle of order <= 4");
    // recover a 4-cycle x, y1, y3, y2
    int y1 = -1, y2 = -1, y3 = -1;
    auto nbrs = cg.neighbors(x);
    for (size_t i = 0; i < nbrs.size() && y3 == -1; ++i)
        for (size_t j = i + 1; j < nbrs.size() && y3 == -1; ++j)
            for (int mid = 0; mid < cg.n(); ++mid)
                if (mid != x && cg.has_edge(nbrs[i], mid) && cg.has_edge(nbrs[j], mid)) {
                    y1 = nbrs[i];
                    y2 = nbrs[j];
                    y3 = mid;
                    break;
                }
    if (y3 == -1)
        fail(ErrorKind::internal_structure, "local girth 4 but no 4-cycle recovered");

    if (cg.degree(y1) == 2 && cg.degree(y2) == 2) {
        auto sub = delete_vertices(cg, {y1});
        auto inner = sat1g4_graph(sub.graph, trace, nullptr);
        std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
        paste(cls, sub, inner);
        int c = first_fit(dm, kSeq1222, cls, y1, {4, 1, 2, 3});
        if (c == -1)
            fail(ErrorKind::internal_structure, "4-cycle peel found no admissible class");
        cls[y1] = c;
        return cls;
    }
    if (cg.degree(y1) == 2)
        std::swap(y1, y2);
    if (cg.degree(y1) != 3 || cg.degree(y2) != 2 || cg.degree(y3) != 2)
        fail(ErrorKind::out_of_class, "4-cycle degrees violate 1-saturation");

    auto sub = delete_vertices(cg, {y2, y3});
    auto inner = sat1g4_graph(sub.graph, trace, nullptr);
    std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
    paste(cls, sub, inner);
    // one of x, y1 avoids class 1; give the 4-cycle pair the classes 1 and 2c
    for (auto [one, cc] : {std::pair{y2, y3}, std::pair{y3, y2}}) {
        auto attempt = cls;
        if (!fits(dm, kSeq1222, attempt, one, 1))
            continue;
        attempt[one] = 1;
        int c = first_fit(dm, kSeq1222, attempt, cc, {4, 2, 3});
        if (c == -1)
            continue;
        attempt[cc] = c;
        return attempt;
    }
    // validated fallback on both vertices
    for (int ca : {4, 1, 2, 3}) {
        if (!fits(dm, kSeq1222, cls, y2, ca))
            continue;
        auto attempt = cls;
        attempt[y2] = ca;
        int cb = first_fit(dm, kSeq1222, attempt, y3, {4, 1, 2, 3});
        if (cb == -1)
            continue;
        attempt[y3] = cb;
        return attempt;
    }
    trace.push_back("4-cycle peel fell back to the exact solver");
    return solve_component(cg, kSeq1222, "1-saturated (1,2,2,2) component");
}

std::vector<int> sat1g4_graph(const Graph& g, std::vector<std::string>& trace,
                              std::set<int>* special)
{
    std::vector<int> cls(static_cast<size_t>(g.n()), 0);
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        std::set<int> local;
        auto part = sat1g4_component(sub.graph, trace, special ? &local : nullptr);
        paste(cls, sub, part);
        if (special)
            for (int v : local)
                special->insert(sub.to_orig[v]);
    }
    return cls;
}

} // namespace

ColorerResult color_1sat_g4(const Graph& g)
{
    auto profile = classify(g);
    if (!in_class(profile, ClassConstraint{.saturation_max = 1, .g3_max = 4}))
        fail(ErrorKind::out_of_class, "color_1sat_g4 needs 1-saturated with g3 <= 4");

    ColorerResult res;
    res.seq = kSeq1222;
    std::set<int> special;
    auto cls = sat1g4_graph(g, res.trace, &special);
    res.coloring = finish(g, res.seq, std::move(cls), "color_1sat_g4");
    res.exempt.assign(special.begin(), special.end());
    res.good = true;
    for (int v = 0; v < g.n(); ++v) {
        if (res.coloring.cls[v] != 4 || special.count(v))
            continue;
        if (g.degree(v) != 2 || profile.girth_profile[v] == kInfDist ||
            profile.girth_profile[v] > 4)
            res.good = false;
    }
    return res;
}

// ---------------------------------------------------------------------------
// 2-saturated, g3 = 3
// ---------------------------------------------------------------------------

namespace {

enum class Sat2 { v112, v1222, v22222 };

SSequence sat2_seq(Sat2 v)
{
    switch (v) {
    case Sat2::v112: return SSequence{{1, 1, 2}};
    case Sat2::v1222: return SSequence{{1, 2, 2, 2}};
    case Sat2::v22222: return SSequence{{2, 2, 2, 2, 2}};
    }
    fail(ErrorKind::internal_structure, "unknown variant");
}

std::vector<int> sat2_graph(const Graph& g, Sat2 variant, std::vector<std::string>& trace);

std::vector<int> sat2_delta2(const Graph& cg, Sat2 variant)
{
    auto comps = connected_components(cg);
    if (comps.size() == 1 && cg.n() == 5 && cg.min_degree() == 2) {
        auto trail = trace_component(cg, comps[0]);
        std::vector<int> cls(5, 0);
        const int* pattern = nullptr;
        static const int p112[5] = {1, 2, 1, 2, 3};
        static const int p1222[5] = {1, 2, 1, 3, 4};
        static const int p22222[5] = {1, 2, 3, 4, 5};
        pattern = variant == Sat2::v112 ? p112 : variant == Sat2::v1222 ? p1222 : p22222;
        for (int i = 0; i < 5; ++i)
            cls[trail.verts[i]] = pattern[i];
        return cls;
    }
    switch (variant) {
    case Sat2::v112:
        return color_delta2(cg, {LinearKind::l11k, 2}).cls;
    case Sat2::v1222:
        return color_delta2(cg, {LinearKind::l122, 0}).cls;
    case Sat2::v22222:
        return color_delta2(cg, {LinearKind::l2222, 0}).cls;
    }
    fail(ErrorKind::internal_structure, "unknown variant");
}

// Direct coloring when N[C] = V for a cycle C.
std::vector<int> sat2_dominated(const Graph& cg, Sat2 variant, const CyclePath& cycle,
                                std::vector<std::string>& trace)
{
    const SSequence s = sat2_seq(variant);
    DistanceMatrix dm(cg);
    std::vector<char> on_cycle(static_cast<size_t>(cg.n()), 0);
    for (int v : cycle.verts)
        on_cycle[v] = 1;
    std::vector<int> outside;
    for (int v = 0; v < cg.n(); ++v)
        if (!on_cycle[v])
            outside.push_back(v);

    auto try_full = [&](const std::vector<int>& cls) -> bool {
        for (int c : cls)
            if (c == 0)
                return false;
        PackingColoring pc{cls};
        return verify(cg, dm, s, pc).valid;
    };

    int n = cycle.order();
    if (variant == Sat2::v112) {
        if (n % 2 == 0) {
            std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
            for (int i = 0; i < n; ++i)
                cls[cycle.verts[i]] = 1 + (i % 2);
            for (int v : outside)
                cls[v] = 3;
            if (try_full(cls))
                return cls;
        } else {
            for (int idx = 0; idx < n; ++idx) {
                int v1 = cycle.verts[idx];
                int v2 = cycle.verts[(idx + 1) % n];
                for (int x1 : outside) {
                    if (!cg.has_edge(x1, v1) || !cg.has_edge(x1, v2))
                        continue;
                    std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
                    cls[v2] = 3;
                    for (int v : outside)
                        if (v != x1)
                            cls[v] = 3;
                    // the rest is a path v3..vk v1 x1; 2-color it by position
                    int pos = 0;
                    for (int step = 2; step < n; ++step) {
                        cls[cycle.verts[(idx + step) % n]] = 1 + (pos % 2);
                        ++pos;
                    }
                    cls[v1] = 1 + (pos % 2);
                    ++pos;
                    cls[x1] = 1 + (pos % 2);
                    if (try_full(cls))
                        return cls;
                }
            }
        }
    } else {
        if (n != 5) {
            LinearScheme scheme = variant == Sat2::v1222 ? LinearScheme{LinearKind::l122, 0}
                                                         : LinearScheme{LinearKind::l2222, 0};
            auto pattern = color_cycle(n, scheme).cls;
            int reserved = s.k();
            for (int flip = 0; flip < 2; ++flip) {
                for (int rot = 0; rot < n; ++rot) {
                    std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
                    for (int i = 0; i < n; ++i) {
                        int src = flip ? (rot + n - i) % n : (rot + i) % n;
                        cls[cycle.verts[i]] = pattern[src];
                    }
                    for (int v : outside)
                        cls[v] = reserved;
                    if (try_full(cls))
                        return cls;
                }
            }
        }
    }
    trace.push_back("dominated cycle resolved by the exact solver");
    return solve_component(cg, s, "dominated-cycle component");
}

std::vector<int> sat2_component(const Graph& cg, Sat2 variant, std::vector<std::string>& trace)
{
    const SSequence s = sat2_seq(variant);
    if (cg.max_degree() <= 2)
        return sat2_delta2(cg, variant);

    // strip degree-<=1 vertices
    {
        int v1 = -1;
        for (int v = 0; v < cg.n(); ++v)
            if (cg.degree(v) <= 1) {
                v1 = v;
                break;
            }
        if (v1 != -1) {
            auto sub = delete_vertices(cg, {v1});
            auto inner = sat2_graph(sub.graph, variant, trace);
            std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
            paste(cls, sub, inner);
            DistanceMatrix dm(cg);
            int c = first_fit(dm, s, cls, v1, all_classes(s.k()));
            if (c == -1)
                fail(ErrorKind::internal_structure, "stripped vertex has no admissible class");
            cls[v1] = c;
            return cls;
        }
    }

    if (auto dia = find_diamond(cg)) {
        auto [x1, x2, x3, x4] = *dia;
        DistanceMatrix dm(cg);
        auto outside_nbr = [&](int v) {
            for (int w : cg.neighbors(v))
                if (w != x1 && w != x2 && w != x3 && w != x4)
                    return w;
            return -1;
        };
        if (outside_nbr(x2) == -1 && outside_nbr(x4) != -1)
            std::swap(x2, x4);
        int y = outside_nbr(x2);
        if (y == -1) {
            // the component is the diamond itself
            std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
            if (variant == Sat2::v112) {
                cls[x1] = 1, cls[x2] = 2, cls[x3] = 3, cls[x4] = 2;
            } else if (variant == Sat2::v1222) {
                cls[x1] = 2, cls[x2] = 1, cls[x3] = 3, cls[x4] = 1;
            } else {
                cls[x1] = 1, cls[x2] = 2, cls[x3] = 3, cls[x4] = 4;
            }
            return cls;
        }
        if (cg.degree(x4) != 2 || cg.degree(y) != 2)
            fail(ErrorKind::out_of_class, "diamond attachments violate 2-saturation");

        if (variant == Sat2::v22222) {
            auto sub = delete_vertices(cg, {x1, x2, x3, x4});
            auto inner = sat2_graph(sub.graph, variant, trace);
            std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
            paste(cls, sub, inner);
            int cy = cls[y];
            int z = -1;
            for (int w : cg.neighbors(y))
                if (w != x2)
                    z = w;
            int cz = z == -1 ? 0 : cls[z];
            std::vector<int> rest;
            for (int c = 1; c <= 5; ++c)
                if (c != cy && c != cz)
                    rest.push_back(c);
            auto attempt = cls;
            attempt[x1] = rest[0];
            attempt[x2] = rest[1];
            attempt[x3] = rest[2];
            attempt[x4] = cz != 0 ? cz : rest[0];
            PackingColoring pc{attempt};
            if (verify(cg, dm, s, pc).valid)
                return attempt;
            fail(ErrorKind::internal_structure, "diamond extension failed under (2,2,2,2,2)");
        }

        auto sub = delete_vertices(cg, {x1, x2, x3, x4, y});
        auto inner = sat2_graph(sub.graph, variant, trace);
        std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
        paste(cls, sub, inner);
        int z = -1;
        for (int w : cg.neighbors(y))
            if (w != x2)
                z = w;
        int cz = cls[z];
        if (variant == Sat2::v112) {
            int a = (cz == 1) ? 2 : 1;
            int b = (a == 1) ? 2 : 1;
            auto attempt = cls;
            attempt[y] = a;
            attempt[x1] = a;
            attempt[x2] = b;
            attempt[x3] = 3;
            attempt[x4] = b;
            if (verify(cg, dm, s, PackingColoring{attempt}).valid)
                return attempt;
            fail(ErrorKind::internal_structure, "diamond extension failed under (1,1,2)");
        }
        // (1,2,2,2)
        if (cz == 1) {
            for (int a = 2; a <= 4; ++a) {
                if (!fits(dm, s, cls, y, a))
                    continue;
                std::vector<int> two;
                for (int c = 2; c <= 4; ++c)
                    if (c != a)
                        two.push_back(c);
                auto attempt = cls;
                attempt[y] = a;
                attempt[x1] = two[0];
                attempt[x2] = 1;
                attempt[x3] = two[1];
                attempt[x4] = 1;
                if (verify(cg, dm, s, PackingColoring{attempt}).valid)
                    return attempt;
            }
            fail(ErrorKind::internal_structure, "diamond extension failed under (1,2,2,2)");
        }
        std::vector<int> two;
        for (int c = 2; c <= 4; ++c)
            if (c != cz)
                two.push_back(c);
        auto attempt = cls;
        attempt[y] = 1;
        attempt[x1] = 1;
        attempt[x2] = two[0];
        attempt[x3] = two[1];
        attempt[x4] = cz;
        if (verify(cg, dm, s, PackingColoring{attempt}).valid)
            return attempt;
        fail(ErrorKind::internal_structure, "diamond extension failed under (1,2,2,2)");
    }

    auto result = decompose_2sat(cg);
    if (std::holds_alternative<DominatingCycle>(result))
        return sat2_dominated(cg, variant, std::get<DominatingCycle>(result).cycle, trace);

    const auto& dec = std::get<PathDecomposition>(result);
    std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
    std::vector<char> tri2(static_cast<size_t>(cg.n()), 0);
    for (const auto& t : enumerate_triangles(cg))
        for (int v : t.verts)
            if (cg.degree(v) == 2)
                tri2[v] = 1;

    for (const auto& p : dec.paths) {
        int n = p.order();
        switch (variant) {
        case Sat2::v112:
            for (int i = 0; i < n; ++i)
                cls[p.verts[i]] = 1 + (i % 2);
            break;
        case Sat2::v1222: {
            auto pattern = n >= 3 ? color_path_ends1(n).cls
                                  : (n == 2 ? std::vector<int>{1, 2} : std::vector<int>{1});
            for (int i = 0; i < n; ++i)
                cls[p.verts[i]] = pattern[i];
            break;
        }
        case Sat2::v22222: {
            if (n >= 4) {
                auto pattern = color_path_equal_ends(n).cls;
                for (int i = 0; i < n; ++i)
                    cls[p.verts[i]] = pattern[i];
            } else if (n == 3) {
                int front = p.verts.front(), back = p.verts.back();
                int tri_end = tri2[front] ? front : back;
                int free_end = tri_end == front ? back : front;
                if (!tri2[front] && !tri2[back])
                    fail(ErrorKind::internal_structure,
                         "order-3 path without a triangle 2-vertex end");
                cls[free_end] = 1;
                cls[tri_end] = 2;
                cls[p.verts[1]] = 3;
            } else {
                fail(ErrorKind::internal_structure, "path below the admissible order");
            }
            break;
        }
        }
    }
    int reserved = s.k();
    for (int v : dec.y)
        cls[v] = reserved;
    return cls;
}

std::vector<int> sat2_graph(const Graph& g, Sat2 variant, std::vector<std::string>& trace)
{
    return over_components(
        g, [&](const Graph& cg) { return sat2_component(cg, variant, trace); });
}

ColorerResult run_sat2(const Graph& g, Sat2 variant, const char* who)
{
    auto profile = classify(g);
    if (!in_class(profile, ClassConstraint{.saturation_max = 2, .g3_equals = 3}))
        fail(ErrorKind::out_of_class,
             std::string(who) + " needs a 2-saturated graph with g3 = 3");
    ColorerResult res;
    res.seq = sat2_seq(variant);
    auto cls = sat2_graph(g, variant, res.trace);
    res.coloring = finish(g, res.seq, std::move(cls), who);
    return res;
}

} // namespace

ColorerResult color_2sat_112(const Graph& g) { return run_sat2(g, Sat2::v112, "color_2sat_112"); }
ColorerResult color_2sat_1222(const Graph& g)
{
    return run_sat2(g, Sat2::v1222, "color_2sat_1222");
}
ColorerResult color_2sat_22222(const Graph& g)
{
    return run_sat2(g, Sat2::v22222, "color_2sat_22222");
}

// ---------------------------------------------------------------------------
// (3,0)-saturated: strip one 2-vertex near each heavy vertex, then 2-sat
// ---------------------------------------------------------------------------

ColorerResult color_30sat(const Graph& g, ThirtyVariant variant)
{
    auto profile = classify(g);
    if (!in_class(profile, ClassConstraint{.three_k_max = 0, .g3_equals = 3}))
        fail(ErrorKind::out_of_class, "color_30sat needs a (3,0)-saturated graph with g3 = 3");

    ColorerResult res;
    res.seq = variant == ThirtyVariant::v12222 ? SSequence{{1, 2, 2, 2, 2}}
                                               : SSequence{{2, 2, 2, 2, 2, 2}};

    std::set<int> ys;
    for (int x : profile.heavy) {
        // neighbors x1, x2 adjacent (the triangle), x3 the remaining one
        auto nbrs = g.neighbors(x);
        int x3 = -1;
        for (size_t i = 0; i < nbrs.size(); ++i) {
            size_t j = (i + 1) % 3, l = (i + 2) % 3;
            if (g.has_edge(nbrs[j], nbrs[l]) && (x3 == -1 || nbrs[i] < x3))
                x3 = nbrs[i];
        }
        if (x3 == -1)
            fail(ErrorKind::internal_structure, "heavy vertex without a triangle");
        int y = -1;
        for (int w : g.neighbors(x3))
            if (w != x && g.degree(w) == 2 && (y == -1 || w < y))
                y = w;
        if (y == -1)
            fail(ErrorKind::internal_structure,
                 "heavy vertex without a removable 2-vertex nearby");
        ys.insert(y);
    }
    std::vector<int> ys_list(ys.begin(), ys.end());
    DistanceMatrix dm(g);
    for (size_t i = 0; i < ys_list.size(); ++i)
        for (size_t j = i + 1; j < ys_list.size(); ++j)
            if (dm.at(ys_list[i], ys_list[j]) < 3)
                fail(ErrorKind::internal_structure, "removable 2-vertices too close");

    auto sub = delete_vertices(g, ys_list);
    std::vector<int> cls(static_cast<size_t>(g.n()), 0);
    if (variant == ThirtyVariant::v12222) {
        auto inner = color_2sat_1222(sub.graph);
        paste(cls, sub, remap_classes(inner.coloring.cls, {1, 3, 4, 5}));
        for (int y : ys_list)
            cls[y] = 2;
        for (auto& t : inner.trace)
            res.trace.push_back(std::move(t));
    } else {
        auto inner = color_2sat_22222(sub.graph);
        paste(cls, sub, remap_classes(inner.coloring.cls, {2, 3, 4, 5, 6}));
        for (int y : ys_list)
            cls[y] = 1;
        for (auto& t : inner.trace)
            res.trace.push_back(std::move(t));
    }
    res.coloring = finish(g, res.seq, std::move(cls), "color_30sat");
    return res;
}

// ---------------------------------------------------------------------------
// (3,i)-saturated, i in {0,1}: packing pair and bipartite remainder
// ---------------------------------------------------------------------------

ColorerResult color_3isat(const Graph& g, int i)
{
    if (i != 0 && i != 1)
        fail(ErrorKind::precondition_violated, "color_3isat needs i in {0,1}");
    auto profile = classify(g);
    if (!in_class(profile, ClassConstraint{.three_k_max = i, .g3_equals = 3}))
        fail(ErrorKind::out_of_class, "color_3isat needs a (3,i)-saturated graph with g3 = 3");

    ColorerResult res;
    res.seq = i == 0 ? SSequence{{1, 1, 2, 4}} : SSequence{{1, 1, 2, 3}};

    auto cls = over_components(g, [&](const Graph& cg) -> std::vector<int> {
        if (cg.max_degree() <= 2)
            return color_delta2(cg, {LinearKind::l11k, 2}).cls;
        auto result = packing_pair_search(cg, i);
        if (std::holds_alternative<DominatedOddCycle>(result)) {
            res.trace.push_back("odd-cycle-dominated component resolved by the exact solver");
            return solve_component(cg, res.seq, "odd-cycle-dominated component");
        }
        const auto& pair = std::get<ExtensionPair>(result);
        std::vector<int> part(static_cast<size_t>(cg.n()), 0);
        for (int v : pair.yt)
            part[v] = 4;
        for (int v : pair.xt)
            part[v] = 3;
        for (int v = 0; v < cg.n(); ++v)
            if (part[v] == 0)
                part[v] = pair.side[v] == 0 ? 1 : 2;
        return part;
    });
    res.coloring = finish(g, res.seq, std::move(cls), "color_3isat");
    return res;
}

// ---------------------------------------------------------------------------
// (3,2)-saturated: triangle transversal, Brooks coloring, odd-cycle repair
// ---------------------------------------------------------------------------

namespace {

const SSequence kSeq11333 = SSequence{{1, 1, 3, 3, 3}};

std::vector<int> sat32_graph(const Graph& g, std::vector<std::string>& trace);

// bounded re-selection when the transversal power graph is K4
std::vector<int> sat32_k4_branch(const Graph& cg, std::vector<std::string>& trace)
{
    DistanceMatrix dm(cg);
    auto triangles = enumerate_triangles(cg);
    if (triangles.size() > 8) {
        trace.push_back("K4 branch resolved by the exact solver (too many triangles)");
        return solve_component(cg, kSeq11333, "K4 transversal branch");
    }
    size_t tn = triangles.size();
    std::vector<int> pick(tn, 0);
    while (true) {
        std::set<int> t_set;
        for (size_t m = 0; m < tn; ++m)
            t_set.insert(triangles[m].verts[pick[m]]);
        bool exact = true;
        for (const auto& t : triangles) {
            int hits = 0;
            for (int v : t.verts)
                if (t_set.count(v))
                    ++hits;
            if (hits != 1)
                exact = false;
        }
        if (exact) {
            std::vector<int> t_list(t_set.begin(), t_set.end());
            std::vector<int> assign(t_list.size(), 0);
            std::function<bool(size_t, std::vector<int>&)> go =
                [&](size_t idx, std::vector<int>& cls) -> bool {
                if (idx == t_list.size()) {
                    // remainder must split into a bipartite part plus odd-cycle
                    // representatives taking leftover distance-3 classes
                    std::vector<int> rest;
                    for (int v = 0; v < cg.n(); ++v)
                        if (!t_set.count(v))
                            rest.push_back(v);
                    auto sub = induced_subgraph(cg, rest);
                    if (sub.graph.max_degree() > 2)
                        return false;
                    std::vector<int> reps;
                    for (const auto& comp : connected_components(sub.graph)) {
                        auto trail = trace_component(sub.graph, comp);
                        if (trail.is_cycle && trail.order() % 2 == 1) {
                            int rep = -1;
                            for (int v : trail.verts) {
                                int ov = sub.to_orig[v];
                                if (cg.degree(ov) == 2 && (rep == -1 || ov < rep))
                                    rep = ov;
                            }
                            if (rep == -1)
                                return false;
                            reps.push_back(rep);
                        }
                    }
                    auto full = cls;
                    for (int r : reps) {
                        int c = first_fit(dm, kSeq11333, full, r, {3, 4, 5});
                        if (c == -1)
                            return false;
                        full[r] = c;
                    }
                    std::vector<int> rest2;
                    for (int v = 0; v < cg.n(); ++v)
                        if (full[v] == 0)
                            rest2.push_back(v);
                    auto sub2 = induced_subgraph(cg, rest2);
                    auto bip = is_bipartite(sub2.graph);
                    if (!bip.bipartite)
                        return false;
                    for (int v = 0; v < sub2.graph.n(); ++v)
                        full[sub2.to_orig[v]] = bip.side[v] == 0 ? 1 : 2;
                    if (!verify(cg, dm, kSeq11333, PackingColoring{full}).valid)
                        return false;
                    cls = full;
                    return true;
                }
                for (int c : {3, 4, 5}) {
                    bool ok = true;
                    for (size_t p = 0; p < idx; ++p)
                        if (assign[p] == c) {
                            int d = dm.at(t_list[p], t_list[idx]);
                            if (d != kInfDist && d <= 3)
                                ok = false;
                        }
                    if (!ok)
                        continue;
                    assign[idx] = c;
                    cls[t_list[idx]] = c;
                    if (go(idx + 1, cls))
                        return true;
                    cls[t_list[idx]] = 0;
                }
                return false;
            };
            std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
            if (go(0, cls))
                return cls;
        }
        size_t m = 0;
        while (m < tn && pick[m] == 2) {
            pick[m] = 0;
            ++m;
        }
        if (m == tn)
            break;
        ++pick[m];
    }
    trace.push_back("K4 branch resolved by the exact solver");
    return solve_component(cg, kSeq11333, "K4 transversal branch");
}

std::vector<int> sat32_component(const Graph& cg, std::vector<std::string>& trace)
{
    if (cg.max_degree() <= 2)
        return color_delta2(cg, {LinearKind::l11k, 3}).cls;

    // strip degree-<=1 vertices
    for (int v = 0; v < cg.n(); ++v) {
        if (cg.degree(v) > 1)
            continue;
        auto sub = delete_vertices(cg, {v});
        auto inner = sat32_graph(sub.graph, trace);
        std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
        paste(cls, sub, inner);
        DistanceMatrix dm(cg);
        int c = first_fit(dm, kSeq11333, cls, v, {1, 2, 3, 4, 5});
        if (c == -1)
            fail(ErrorKind::internal_structure, "stripped vertex has no admissible class");
        cls[v] = c;
        return cls;
    }

    // contract adjacent 2-vertices
    for (int u = 0; u < cg.n(); ++u) {
        if (cg.degree(u) != 2)
            continue;
        int v = -1;
        for (int w : cg.neighbors(u))
            if (cg.degree(w) == 2) {
                v = w;
                break;
            }
        if (v == -1)
            continue;
        int u1 = -1;
        for (int w : cg.neighbors(u))
            if (w != v)
                u1 = w;
        DistanceMatrix dm(cg);

        if (u1 == -1 || cg.has_edge(u1, v)) {
            // degenerate little component or a triangle of 2-vertices
            auto sub = delete_vertices(cg, {u});
            auto inner = sat32_graph(sub.graph, trace);
            std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
            paste(cls, sub, inner);
            int c = first_fit(dm, kSeq11333, cls, u, {1, 2, 3, 4, 5});
            if (c == -1) {
                trace.push_back("2-vertex contraction fell back to the exact solver");
                return solve_component(cg, kSeq11333, "adjacent 2-vertices");
            }
            cls[u] = c;
            return cls;
        }

        // delete u, join u1 to v, recurse, then re-insert u
        auto sub = delete_vertices(cg, {u});
        auto edges = sub.graph.edges();
        edges.emplace_back(sub.from_orig[u1], sub.from_orig[v]);
        Graph contracted(sub.graph.n(), edges);
        auto inner = sat32_graph(contracted, trace);
        std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
        paste(cls, sub, inner);

        auto whole_ok = [&](const std::vector<int>& attempt) {
            return verify(cg, dm, kSeq11333, PackingColoring{attempt}).valid;
        };
        // direct value-1 placement
        for (int c : {1, 2}) {
            auto attempt = cls;
            attempt[u] = c;
            if (whole_ok(attempt))
                return attempt;
        }
        // recolor ladder around u1
        int cu1 = cls[u1];
        int other1 = cu1 == 1 ? 2 : 1;
        {
            auto attempt = cls;
            attempt[u1] = other1;
            attempt[u] = cu1;
            if ((cu1 == 1 || cu1 == 2) && whole_ok(attempt))
                return attempt;
        }
        std::vector<int> u23;
        for (int w : cg.neighbors(u1))
            if (w != u)
                u23.push_back(w);
        // swap u1 with one of its other neighbors, then reuse the freed class
        for (int w : u23) {
            auto attempt = cls;
            attempt[w] = cls[u1];
            attempt[u1] = cls[w];
            attempt[u] = attempt[w];
            if (whole_ok(attempt))
                return attempt;
        }
        // a distance-3 class directly on u
        for (int c : {3, 4, 5}) {
            auto attempt = cls;
            attempt[u] = c;
            if (whole_ok(attempt))
                return attempt;
        }
        for (int c : {1, 2, 3, 4, 5}) {
            auto attempt = cls;
            attempt[u] = c;
            if (whole_ok(attempt))
                return attempt;
        }
        trace.push_back("2-vertex contraction fell back to the exact solver");
        return solve_component(cg, kSeq11333, "adjacent 2-vertices");
    }

    TriangleTransversal tt;
    try {
        tt = triangle_transversal(cg);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::k4_component)
            return sat32_k4_branch(cg, trace);
        throw;
    }

    std::vector<int> cls(static_cast<size_t>(cg.n()), 0);
    auto tcol = brooks_3color(tt.g3t.graph);
    for (int i = 0; i < tt.g3t.graph.n(); ++i)
        cls[tt.g3t.to_orig[i]] = 2 + tcol[i];

    std::vector<int> rest;
    for (int v = 0; v < cg.n(); ++v)
        if (cls[v] == 0)
            rest.push_back(v);
    auto reps = odd_cycle_reps(cg, rest);
    DistanceMatrix dm(cg);
    for (int r : reps) {
        int c = first_fit(dm, kSeq11333, cls, r, {3, 4, 5});
        if (c == -1)
            fail(ErrorKind::internal_structure,
                 "odd-cycle representative has no free distance-3 class");
        cls[r] = c;
    }
    std::vector<int> rest2;
    for (int v = 0; v < cg.n(); ++v)
        if (cls[v] == 0)
            rest2.push_back(v);
    auto sub2 = induced_subgraph(cg, rest2);
    auto bip = is_bipartite(sub2.graph);
    if (!bip.bipartite)
        fail(ErrorKind::internal_structure, "remainder minus representatives is not bipartite");
    for (int v = 0; v < sub2.graph.n(); ++v)
        cls[sub2.to_orig[v]] = bip.side[v] == 0 ? 1 : 2;
    return cls;
}

std::vector<int> sat32_graph(const Graph& g, std::vector<std::string>& trace)
{
    return over_components(g, [&](const Graph& cg) { return sat32_component(cg, trace); });
}

} // namespace

ColorerResult color_32sat(const Graph& g)
{
    auto profile = classify(g);
    if (!in_class(profile, ClassConstraint{.three_k_max = 2, .g3_equals = 3}))
        fail(ErrorKind::out_of_class, "color_32sat needs a (3,2)-saturated graph with g3 = 3");
    ColorerResult res;
    res.seq = kSeq11333;
    auto cls = sat32_graph(g, res.trace);
    res.coloring = finish(g, res.seq, std::move(cls), "color_32sat");
    return res;
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

namespace {

std::optional<ColorerResult> try_candidate(const std::function<ColorerResult()>& run)
{
    try {
        return run();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::exceptional_graph || e.kind() == ErrorKind::excluded_graph)
            return std::nullopt;
        throw;
    }
}

} // namespace

ColorerResult auto_color(const Graph& g, const SSequence& s, const SolveConfig& cfg)
{
    auto profile = classify(g);
    auto repackage = [&](ColorerResult r) {
        if (!verify(g, s, r.coloring).valid)
            fail(ErrorKind::internal_structure, "dispatch produced a coloring invalid under s");
        r.seq = s;
        return r;
    };

    const auto& v = s.values;

    if (!profile.had_three_vertex) {
        std::optional<ColorerResult> r;
        auto run_scheme = [&](LinearScheme scheme) -> std::optional<ColorerResult> {
            return try_candidate([&] {
                ColorerResult res;
                res.seq = scheme_sequence(scheme);
                res.coloring = color_delta2(g, scheme);
                res.trace.push_back("linear scheme");
                return res;
            });
        };
        if (v.size() == 3 && v[0] == 1 && v[1] == 1)
            r = run_scheme({LinearKind::l11k, v[2]});
        if (!r && v.size() == 3 && refines(SSequence{{1, 2, 2}}, s))
            r = run_scheme({LinearKind::l122, 0});
        if (!r && v.size() == 4 && refines(SSequence{{2, 2, 2, 2}}, s))
            r = run_scheme({LinearKind::l2222, 0});
        if (!r && v.size() == 5) {
            int k = std::max(6, v[4]);
            if (refines(SSequence{{1, 2, 4, 5, k}}, s))
                r = run_scheme({LinearKind::l1245k, k});
        }
        if (r)
            return repackage(std::move(*r));
    }

    bool low_class = in_class(profile, ClassConstraint{.saturation_max = 0, .g3_max = 4}) ||
                     in_class(profile, ClassConstraint{.saturation_max = 1, .g3_equals = 3});
    if (low_class) {
        std::vector<SSequence> templates;
        if (v.size() == 4 && refines(SSequence{{1, 1, 3, std::max(3, v[3])}}, s))
            templates.push_back(SSequence{{1, 1, 3, std::max(3, v[3])}});
        if (v.size() == 4 && refines(SSequence{{1, 2, 2, 3}}, s))
            templates.push_back(SSequence{{1, 2, 2, 3}});
        if (v.size() == 5 && refines(SSequence{{2, 2, 2, 2, 3}}, s))
            templates.push_back(SSequence{{2, 2, 2, 2, 3}});
        if (v.size() == 6 && refines(SSequence{{1, 2, 3, 4, 5, std::max(6, v[5])}}, s))
            templates.push_back(SSequence{{1, 2, 3, 4, 5, std::max(6, v[5])}});
        for (const auto& st : templates)
            if (auto r = try_candidate([&] { return color_low_saturation(g, st); }))
                return repackage(std::move(*r));
    }

    if (in_class(profile, ClassConstraint{.saturation_max = 1, .g3_max = 4}) &&
        refines(SSequence{{1, 2, 2, 2}}, s))
        if (auto r = try_candidate([&] { return color_1sat_g4(g); }))
            return repackage(std::move(*r));

    if (in_class(profile, ClassConstraint{.saturation_max = 2, .g3_equals = 3})) {
        if (v.size() == 3 && refines(SSequence{{1, 1, 2}}, s))
            if (auto r = try_candidate([&] { return color_2sat_112(g); }))
                return repackage(std::move(*r));
        if (v.size() == 4 && refines(SSequence{{1, 2, 2, 2}}, s))
            if (auto r = try_candidate([&] { return color_2sat_1222(g); }))
                return repackage(std::move(*r));
        if (v.size() == 5 && refines(SSequence{{2, 2, 2, 2, 2}}, s))
            if (auto r = try_candidate([&] { return color_2sat_22222(g); }))
                return repackage(std::move(*r));
    }

    if (in_class(profile, ClassConstraint{.three_k_max = 0, .g3_equals = 3})) {
        if (v.size() == 4 && refines(SSequence{{1, 1, 2, 4}}, s))
            if (auto r = try_candidate([&] { return color_3isat(g, 0); }))
                return repackage(std::move(*r));
        if (v.size() == 5 && refines(SSequence{{1, 2, 2, 2, 2}}, s))
            if (auto r = try_candidate([&] { return color_30sat(g, ThirtyVariant::v12222); }))
                return repackage(std::move(*r));
        if (v.size() == 6 && refines(SSequence{{2, 2, 2, 2, 2, 2}}, s))
            if (auto r = try_candidate([&] { return color_30sat(g, ThirtyVariant::v222222); }))
                return repackage(std::move(*r));
    }
    if (in_class(profile, ClassConstraint{.three_k_max = 1, .g3_equals = 3}) &&
        v.size() == 4 && refines(SSequence{{1, 1, 2, 3}}, s))
        if (auto r = try_candidate([&] { return color_3isat(g, 1); }))
            return repackage(std::move(*r));
    if (in_class(profile, ClassConstraint{.three_k_max = 2, .g3_equals = 3}) &&
        v.size() == 5 && refines(SSequence{{1, 1, 3, 3, 3}}, s))
        if (auto r = try_candidate([&] { return color_32sat(g); }))
            return repackage(std::move(*r));

    auto out = decide(g, s, cfg);
    if (out.status == SolveOutcome::Status::timeout)
        fail(ErrorKind::timeout, "exact solver ran out of budget");
    if (out.status == SolveOutcome::Status::not_colorable)
        fail(ErrorKind::not_colorable, "no such packing coloring exists");
    ColorerResult res;
    res.seq = s;
    res.coloring = *out.witness;
    res.trace.push_back("exact solver");
    return res;
}

} // namespace spc
