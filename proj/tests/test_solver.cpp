#include <doctest.h>

#include <random>

#include "spc/catalog.hpp"
#include "spc/errors.hpp"
#include "spc/solver.hpp"
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

} // namespace

TEST_CASE("decide on small known instances")
{
    CHECK(decide(cycle(5), make_sequence({1, 2, 2})).status ==
          SolveOutcome::Status::not_colorable);
    CHECK(decide(catalog_get("g5").graph, make_sequence({1, 1, 3})).status ==
          SolveOutcome::Status::not_colorable);
    CHECK(decide(catalog_get("g2").graph, make_sequence({2, 2, 2, 2, 3})).colorable());
    CHECK(decide(Graph(1, {}), make_sequence({1})).colorable());
}

TEST_CASE("decide_all_small bounds")
{
    CHECK_THROWS_AS(decide_all_small(catalog_get("g5").graph, make_sequence({1, 1, 3})), Error);
    CHECK(decide_all_small(Graph(3, {{0, 1}, {1, 2}}), make_sequence({1, 1})).colorable());
    CHECK(decide_all_small(cycle(3), make_sequence({2, 2})).status ==
          SolveOutcome::Status::not_colorable);
    CHECK(decide_all_small(cycle(5), make_sequence({1, 2, 2})).status ==
          SolveOutcome::Status::not_colorable);
}

TEST_CASE("oracle equivalence on random small instances")
{
    std::mt19937_64 rng(53);
    std::vector<SSequence> sequences = {
        make_sequence({1, 1, 2}),     make_sequence({1, 2, 2}),
        make_sequence({1, 1, 2, 2}),  make_sequence({1, 2, 2, 3}),
        make_sequence({2, 2, 2, 2}),  make_sequence({1, 1, 3, 3}),
    };
    for (int round = 0; round < 40; ++round) {
        auto g = oracle::random_subcubic(rng, 3 + static_cast<int>(rng() % 7));
        for (const auto& s : sequences) {
            auto fast = decide(g, s);
            auto slow = decide_all_small(g, s);
            REQUIRE(fast.status != SolveOutcome::Status::timeout);
            CHECK(fast.colorable() == slow.colorable());
        }
    }
}

TEST_CASE("determinism")
{
    auto g = catalog_get("g10").graph;
    auto s = make_sequence({1, 1, 2});
    auto a = decide(g, s);
    auto b = decide(g, s);
    REQUIRE(a.colorable());
    REQUIRE(b.colorable());
    CHECK(a.witness->cls == b.witness->cls);
    CHECK(a.nodes == b.nodes);
}

TEST_CASE("timeout reporting")
{
    SolveConfig cfg;
    cfg.node_budget = 1;
    auto out = decide(catalog_get("g11").graph, make_sequence({1, 1, 3, 3, 3}), cfg);
    CHECK(out.status == SolveOutcome::Status::timeout);
}

TEST_CASE("monotone refinement of witnesses")
{
    std::mt19937_64 rng(59);
    auto s_strong = make_sequence({1, 2, 2, 3});
    auto s_weak = make_sequence({1, 1, 2, 2});
    REQUIRE(refines(s_strong, s_weak));
    for (int round = 0; round < 30; ++round) {
        auto g = oracle::random_subcubic(rng, 3 + static_cast<int>(rng() % 7));
        auto strong = decide(g, s_strong);
        if (strong.colorable())
            CHECK(verify(g, s_weak, *strong.witness).valid);
    }
}

TEST_CASE("restricted classes are honored")
{
    auto g = cycle(6);
    SolveConfig cfg;
    cfg.allowed.assign(6, 0x7); // classes 1..3 of (1,2,2)
    cfg.allowed[0] = 0x1;       // vertex 0 must take class 1
    auto out = decide(g, make_sequence({1, 2, 2}), cfg);
    REQUIRE(out.colorable());
    CHECK(out.witness->cls[0] == 1);
}
