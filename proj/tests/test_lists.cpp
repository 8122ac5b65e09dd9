#include <doctest.h>

#include <random>

#include "gcol/lists.hpp"
#include "gcol/pipeline.hpp"

using namespace gcol;

namespace {

Graph rnd_graph(std::mt19937_64& rng, int n, double p)
{
    VSet vs;
    for (int i = 0; i < n; ++i)
        vs.push_back(i);
    std::vector<std::pair<int, int>> es;
    std::uniform_real_distribution<double> coin(0, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p)
                es.emplace_back(i, j);
    return Graph(vs, es);
}

ListAssignment rnd_lists(std::mt19937_64& rng, const Graph& g)
{
    ListAssignment l;
    for (int v : g.vertices())
        l.set(v, std::uint8_t(1 + rng() % 7));
    return l;
}

} // namespace

TEST_CASE("x0 picks singleton lists")
{
    Graph g = Graph::path(3);
    ListAssignment l = ListAssignment::full(g);
    CHECK(x0(l).empty());
    l.set(1, mask::of(2));
    CHECK(x0(l) == VSet{1});

    std::mt19937_64 rng(3);
    for (int it = 0; it < 50; ++it) {
        Graph h = rnd_graph(rng, 8, 0.3);
        ListAssignment lh = rnd_lists(rng, h);
        VSet expect;
        for (int v : h.vertices())
            if (lh.list_size(v) == 1)
                expect.push_back(v);
        CHECK(x0(lh) == expect);
    }
}

TEST_CASE("update_from")
{
    Graph g({0, 1}, {{0, 1}});
    ListAssignment l;
    l.set(0, mask::of(1));
    l.set(1, mask::from_colors({1, 2}));
    auto l2 = update_from(g, l, {0}, {1});
    CHECK(l2.get(1) == mask::of(2));
    CHECK(l2.get(0) == mask::of(1));

    // x empty: identity
    auto l3 = update_from(g, l, {}, {0, 1});
    CHECK(l3 == l);

    // non-adjacent vertices unaffected
    Graph g2({0, 1}, {});
    auto l4 = update_from(g2, l, {0}, {1});
    CHECK(l4.get(1) == mask::from_colors({1, 2}));

    CHECK_THROWS_AS(update_from(g, l, {1}, {0}), ContractError);
}

TEST_CASE("update_exhaustively forced chain")
{
    Graph tri = Graph::complete(3);
    ListAssignment l;
    l.set(0, mask::of(1));
    l.set(1, mask::from_colors({1, 2}));
    l.set(2, mask::ALL);
    auto res = update_exhaustively(tri, l);
    CHECK(res.feasible);
    CHECK(res.lists.get(0) == mask::of(1));
    CHECK(res.lists.get(1) == mask::of(2));
    CHECK(res.lists.get(2) == mask::of(3));
}

TEST_CASE("update_exhaustively infeasible")
{
    Graph p3 = Graph::path(3); // 0-1-2
    ListAssignment l;
    l.set(0, mask::of(1));
    l.set(1, mask::from_colors({1, 2}));
    l.set(2, mask::of(2));
    auto res = update_exhaustively(p3, l);
    CHECK_FALSE(res.feasible);
    CHECK(res.lists.get(1) == 0);
}

TEST_CASE("update_exhaustively idempotent and bounded")
{
    std::mt19937_64 rng(4);
    for (int it = 0; it < 100; ++it) {
        Graph g = rnd_graph(rng, 8, 0.35);
        ListAssignment l = rnd_lists(rng, g);
        auto r1 = update_exhaustively(g, l);
        CHECK(r1.rounds <= 3 * g.num_vertices());
        auto r2 = update_exhaustively(g, r1.lists);
        CHECK(r2.lists == r1.lists);
        CHECK(r2.rounds == 0);
    }
}

TEST_CASE("propagation preserves colorability")
{
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        Graph g = rnd_graph(rng, 8, 0.3);
        ListAssignment l = rnd_lists(rng, g);
        auto upd = update_exhaustively(g, l);
        bool before = oracle_solve(g, l).has_value();
        bool after = upd.feasible && oracle_solve(g, upd.lists).has_value();
        CHECK(before == after);
    }
}

TEST_CASE("convention holds after feasible update")
{
    Graph e;
    CHECK(assert_convention(e, ListAssignment::full(e)));

    Graph g({0, 1}, {{0, 1}});
    ListAssignment bad;
    bad.set(0, mask::of(1));
    bad.set(1, mask::from_colors({1, 2}));
    CHECK_FALSE(assert_convention(g, bad));

    std::mt19937_64 rng(6);
    for (int it = 0; it < 100; ++it) {
        Graph h = rnd_graph(rng, 8, 0.35);
        ListAssignment lh = rnd_lists(rng, h);
        auto upd = update_exhaustively(h, lh);
        if (upd.feasible)
            CHECK(assert_convention(h, upd.lists));
    }
}
