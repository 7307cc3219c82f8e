#include <doctest.h>

#include <random>

#include "spc/catalog.hpp"
#include "spc/classify.hpp"
#include "spc/errors.hpp"
#include "oracles.hpp"

using namespace spc;

TEST_CASE("classify on the catalog graphs")
{
    auto g1 = classify(catalog_get("g1").graph);
    CHECK(g1.saturation == 0);
    CHECK(g1.g3 == 4);

    auto g9 = classify(catalog_get("g9").graph);
    CHECK(g9.saturation == 2);
    CHECK(g9.g3 == 4);

    auto g11 = classify(catalog_get("g11").graph);
    CHECK(g11.three_k == 3);
    CHECK(g11.g3 == 3);
    CHECK(g11.claw_free);

    auto c5 = classify(catalog_get("c5").graph);
    CHECK(c5.saturation == 0);
    CHECK(c5.g3 == 0);
    CHECK_FALSE(c5.had_three_vertex);
    CHECK(c5.claw_free);
}

TEST_CASE("classify rejects non-subcubic graphs")
{
    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK_THROWS_AS(classify(star), Error);
}

TEST_CASE("find_diamond")
{
    auto k4_minus = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    auto d = find_diamond(k4_minus);
    REQUIRE(d.has_value());
    auto [x1, x2, x3, x4] = *d;
    CHECK(k4_minus.has_edge(x1, x3)); // the chord
    CHECK(k4_minus.has_edge(x1, x2));
    CHECK(k4_minus.has_edge(x2, x3));
    CHECK(k4_minus.has_edge(x3, x4));
    CHECK(k4_minus.has_edge(x4, x1));

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_FALSE(find_diamond(c4).has_value());
    CHECK_FALSE(find_diamond(catalog_get("g1").graph).has_value());
}

TEST_CASE("in_class")
{
    CHECK(in_class(catalog_get("g2").graph, {.saturation_max = 1, .g3_equals = 3}));
    CHECK_FALSE(in_class(catalog_get("g9").graph, {.saturation_max = 1}));
    CHECK(in_class(Graph(0, {}), {.saturation_max = 0, .g3_equals = 3}));
    // vacuous g3 on graphs without 3-vertices
    CHECK(in_class(catalog_get("c5").graph, {.saturation_max = 2, .g3_equals = 3}));
}

TEST_CASE("in_class monotonicity in the saturation bound")
{
    std::mt19937_64 rng(41);
    for (int round = 0; round < 50; ++round) {
        auto g = oracle::random_subcubic(rng, 4 + static_cast<int>(rng() % 24));
        for (int j = 0; j < 3; ++j)
            if (in_class(g, {.saturation_max = j}))
                CHECK(in_class(g, {.saturation_max = j + 1}));
    }
}

TEST_CASE("classify agrees with direct definition scans")
{
    std::mt19937_64 rng(43);
    for (int round = 0; round < 60; ++round) {
        auto g = oracle::random_subcubic(rng, 4 + static_cast<int>(rng() % 30));
        auto profile = classify(g);
        auto brute = oracle::profile_bruteforce(g);
        CHECK(profile.saturation == brute.saturation);
        CHECK(profile.three_k == brute.three_k);
        CHECK(profile.claw_free == brute.claw_free);
        for (int v = 0; v < g.n(); ++v)
            CHECK(profile.girth_profile[v] == oracle::shortest_cycle_through_bruteforce(g, v));
    }
}

TEST_CASE("claw-free subcubic graphs have every 3-vertex on a triangle")
{
    std::mt19937_64 rng(47);
    int claw_free_seen = 0;
    for (int round = 0; round < 200; ++round) {
        auto g = oracle::random_subcubic(rng, 4 + static_cast<int>(rng() % 16));
        auto profile = classify(g);
        if (!profile.claw_free)
            continue;
        ++claw_free_seen;
        auto triangles = enumerate_triangles(g);
        for (int v = 0; v < g.n(); ++v) {
            if (g.degree(v) != 3)
                continue;
            bool on_triangle = false;
            for (const auto& t : triangles)
                for (int w : t.verts)
                    if (w == v)
                        on_triangle = true;
            CHECK(on_triangle);
            CHECK(profile.girth_profile[v] == 3);
        }
    }
    CHECK(claw_free_seen > 0);
}

TEST_CASE("constraint parsing round trip")
{
    auto c = parse_constraint("sat<=2,g3=3");
    CHECK(c.saturation_max == 2);
    CHECK(c.g3_equals == 3);
    CHECK(to_string(c) == "sat<=2,g3=3");
    auto c2 = parse_constraint("3k<=1, g3<=4, clawfree");
    CHECK(c2.three_k_max == 1);
    CHECK(c2.g3_max == 4);
    CHECK(c2.require_claw_free);
    CHECK_THROWS_AS(parse_constraint("bogus"), Error);
}
