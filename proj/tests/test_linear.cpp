#include <doctest.h>

#include "spc/errors.hpp"
#include "spc/linear.hpp"

using namespace spc;

namespace {

Graph cycle(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph path(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e);
}

} // namespace

TEST_CASE("cycle schemes verify for every order up to 200")
{
    // color_cycle verifies internally; this exercises every case split
    for (int n = 3; n <= 200; ++n) {
        for (int k : {3, 6, 7})
            CHECK(color_cycle(n, {LinearKind::l11k, k}).n() == n);
        if (n != 5) {
            CHECK(color_cycle(n, {LinearKind::l122, 0}).n() == n);
            CHECK(color_cycle(n, {LinearKind::l2222, 0}).n() == n);
        }
        for (int k : {6, 7})
            CHECK(color_cycle(n, {LinearKind::l1245k, k}).n() == n);
    }
}

TEST_CASE("the known fixed patterns")
{
    CHECK(color_cycle(6, {LinearKind::l122, 0}).cls == std::vector<int>{1, 2, 3, 1, 2, 3});
    CHECK_THROWS_AS(color_cycle(5, {LinearKind::l122, 0}), Error);
    CHECK_THROWS_AS(color_cycle(5, {LinearKind::l2222, 0}), Error);

    auto c5 = color_cycle(5, {LinearKind::l11k, 3});
    int threes = 0;
    for (int c : c5.cls)
        if (c == 3)
            ++threes;
    CHECK(threes == 1);

    CHECK(color_cycle(17, {LinearKind::l122, 0}).n() == 17); // the long exceptional prefix
}

TEST_CASE("path with ends in class 1")
{
    CHECK(color_path_ends1(3).cls == std::vector<int>{1, 2, 1});
    CHECK(color_path_ends1(4).cls == std::vector<int>{1, 2, 3, 1});
    CHECK(color_path_ends1(7).cls == std::vector<int>{1, 2, 3, 1, 2, 3, 1});
    CHECK_THROWS_AS(color_path_ends1(2), Error);
    for (int n = 3; n <= 200; ++n) {
        auto c = color_path_ends1(n);
        CHECK(c.cls.front() == 1);
        CHECK(c.cls.back() == 1);
    }
}

TEST_CASE("path with matching unique end class")
{
    CHECK(color_path_equal_ends(4).cls == std::vector<int>{1, 2, 3, 1});
    CHECK(color_path_equal_ends(5).cls == std::vector<int>{1, 2, 3, 4, 1});
    CHECK_THROWS_AS(color_path_equal_ends(3), Error);
    for (int n = 4; n <= 200; ++n) {
        auto c = color_path_equal_ends(n);
        CHECK(c.cls.front() == c.cls.back());
        for (int i = 1; i + 1 < n; ++i)
            CHECK(c.cls[i] != c.cls.front());
    }
}

TEST_CASE("the four-class cycle scheme recolors the ones of the three-class one")
{
    // same positions for the two value-2 classes, fresh classes elsewhere
    for (int n : {3, 4, 6, 7, 8, 11, 12, 14, 17, 29, 100}) {
        auto base = color_cycle(n, {LinearKind::l122, 0});
        auto lifted = color_cycle(n, {LinearKind::l2222, 0});
        for (int i = 0; i < n; ++i) {
            if (base.cls[i] == 1)
                CHECK((lifted.cls[i] == 3 || lifted.cls[i] == 4));
            else
                CHECK(lifted.cls[i] == base.cls[i] - 1);
        }
    }
}

TEST_CASE("color_delta2 handles unions of paths and cycles")
{
    // C6 plus P4
    std::vector<Edge> e;
    for (int i = 0; i < 6; ++i)
        e.emplace_back(i, (i + 1) % 6);
    for (int i = 6; i < 9; ++i)
        e.emplace_back(i, i + 1);
    Graph g(10, e);
    auto c = color_delta2(g, {LinearKind::l122, 0});
    CHECK(verify(g, make_sequence({1, 2, 2}), c).valid);

    CHECK_THROWS_AS(color_delta2(cycle(5), {LinearKind::l2222, 0}), Error);

    auto empty = color_delta2(Graph(0, {}), {LinearKind::l122, 0});
    CHECK(empty.n() == 0);

    auto one = color_delta2(Graph(1, {}), {LinearKind::l1245k, 6});
    CHECK(one.cls == std::vector<int>{1});

    for (int n = 1; n <= 40; ++n) {
        auto p = path(n);
        for (auto kind : {LinearKind::l11k, LinearKind::l122, LinearKind::l2222,
                          LinearKind::l1245k}) {
            LinearScheme scheme{kind, kind == LinearKind::l11k ? 3 : 6};
            auto c2 = color_delta2(p, scheme);
            CHECK(verify(p, scheme_sequence(scheme), c2).valid);
        }
    }
}
