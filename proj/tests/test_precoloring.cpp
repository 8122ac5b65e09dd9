#include <doctest.h>

#include "gcol/pipeline.hpp"
#include "helpers.hpp"

using namespace gcol;

namespace {

// P6 seeded 1,2,3,1,2,3 with a pendant 2-list vertex 6 and a 3-list tail 7
SeededPrecoloring p8_fixture()
{
    Graph g = Graph::path(8);
    ListAssignment l = ListAssignment::full(g);
    int c = 1;
    for (int v = 0; v < 6; ++v) {
        l.set(v, mask::of(c));
        c = c % 3 + 1;
    }
    auto built = build_precoloring(g, l, {0, 1, 2, 3, 4, 5}, 1);
    REQUIRE(built.pre.has_value());
    return *built.pre;
}

} // namespace

TEST_CASE("build accepts the canonical instance")
{
    Graph g = Graph::disjoint_union(Graph::path(6), Graph::path(3));
    ListAssignment l = ListAssignment::full(g);
    int c = 1;
    for (int v = 0; v < 6; ++v) {
        l.set(v, mask::of(c));
        c = c % 3 + 1;
    }
    auto built = build_precoloring(g, l, {0, 1, 2, 3, 4, 5}, 1);
    REQUIRE(built.pre.has_value());
    CHECK(built.pre->seed == VSet{0, 1, 2, 3, 4, 5});
}

TEST_CASE("build rejects violated conditions by name")
{
    Graph g = Graph::path(6);
    ListAssignment l = ListAssignment::full(g);
    for (int v = 0; v < 6; ++v)
        l.set(v, mask::of(1)); // adjacent seed vertices share a color
    auto bad2 = build_precoloring(g, l, {0, 1, 2, 3, 4, 5}, 1);
    CHECK_FALSE(bad2.pre.has_value());
    CHECK(bad2.error.find("condition 2") != std::string::npos);

    Graph small = Graph::path(4);
    ListAssignment ls = ListAssignment::full(small);
    int c = 1;
    for (int v = 0; v < 4; ++v) {
        ls.set(v, mask::of(c));
        c = c % 3 + 1;
    }
    auto bad3 = build_precoloring(small, ls, {0, 1, 2, 3}, 1);
    CHECK_FALSE(bad3.pre.has_value());
    CHECK(bad3.error.find("condition 3") != std::string::npos);

    Graph g1 = Graph::path(6);
    ListAssignment l1 = ListAssignment::full(g1);
    auto bad1 = build_precoloring(g1, l1, {0}, 1);
    CHECK_FALSE(bad1.pre.has_value());
    CHECK(bad1.error.find("condition 1") != std::string::npos);
}

TEST_CASE("boundary view of the P8 fixture")
{
    SeededPrecoloring p = p8_fixture();
    // vertex 6 saw color 3 from seed vertex 5
    CHECK(p.lists.get(6) == mask::from_colors({1, 2}));
    BoundaryView v = boundary_view(p);
    CHECK(v.boundary == VSet{6});
    CHECK(vset::contains(v.by_pair[1][2], 6));
    CHECK(v.wilderness == VSet{7});
    CHECK(v.tilde_w == VSet{7});
    CHECK(v.tilde_b == VSet{6});
    CHECK(v.x0 == VSet{0, 1, 2, 3, 4, 5});

    SeedType t = type_of(p, 6);
    CHECK(t.members == VSet{5});
    CHECK(t.color == 3);
}

TEST_CASE("boundary view agrees with a definition scan on random instances")
{
    Rng rng(41);
    int done = 0;
    while (done < 40) {
        auto p = testing::random_seeded_instance(rng, 10, 0.3, 1, true);
        if (!p)
            continue;
        ++done;
        BoundaryView v = boundary_view(*p);
        for (int u : p->g.vertices()) {
            bool in_b = false;
            if (p->lists.list_size(u) == 2) {
                std::uint8_t missing = std::uint8_t(mask::ALL & ~p->lists.get(u));
                for (int s : vset::intersect(p->g.neighbors(u), p->seed))
                    if (p->lists.get(s) == missing)
                        in_b = true;
            }
            CHECK(vset::contains(v.boundary, u) == in_b);
            bool in_w = !in_b && p->lists.list_size(u) >= 2;
            CHECK(vset::contains(v.wilderness, u) == in_w);
        }
        // partition
        CHECK(v.x0.size() + v.boundary.size() + v.wilderness.size() ==
              std::size_t(p->g.num_vertices()));
        for (int b : v.boundary)
            CHECK_NOTHROW(type_of(*p, b));
    }
}

TEST_CASE("move_to_seed")
{
    SeededPrecoloring p = p8_fixture();
    auto same = move_to_seed(p, {}, {});
    REQUIRE(same.has_value());
    CHECK(same->lists == p.lists);
    CHECK(same->seed == p.seed);

    Coloring c{{6, 1}};
    auto moved = move_to_seed(p, {6}, c);
    REQUIRE(moved.has_value());
    CHECK(vset::contains(moved->seed, 6));
    CHECK(moved->lists.get(6) == mask::of(1));
    CHECK_FALSE(mask::has(moved->lists.get(7), 1));

    Coloring off{{6, 3}};
    CHECK_THROWS_AS(move_to_seed(p, {6}, off), ContractError);
}

TEST_CASE("move_to_seed preserves extendability when the color fits")
{
    Rng rng(42);
    int done = 0;
    while (done < 30) {
        auto p = testing::random_seeded_instance(rng, 9, 0.3, 1, false);
        if (!p)
            continue;
        auto ext = oracle_solve(p->g, p->lists);
        if (!ext)
            continue;
        ++done;
        BoundaryView v = boundary_view(*p);
        if (v.boundary.empty())
            continue;
        int b = v.boundary[0];
        Coloring c{{b, ext->at(b)}};
        auto moved = move_to_seed(*p, {b}, c);
        REQUIRE(moved.has_value());
        CHECK(oracle_solve(moved->g, moved->lists).has_value());
    }
}

TEST_CASE("nice easy stable predicates")
{
    SeededPrecoloring p = p8_fixture();
    // W(P) = {7} with no internal edges: nice holds vacuously
    CHECK(is_nice(p));
    // B u W = {6,7}: far too small for a P6
    CHECK(is_easy(p));
    // vertex 7 has a 3-list and degree 1
    CHECK_FALSE(is_stable(p));

    // a long pendant chain makes B u W contain a P6
    Graph g = Graph::path(12);
    ListAssignment l = ListAssignment::full(g);
    int c = 1;
    for (int v = 0; v < 6; ++v) {
        l.set(v, mask::of(c));
        c = c % 3 + 1;
    }
    auto built = build_precoloring(g, l, {0, 1, 2, 3, 4, 5}, 1);
    REQUIRE(built.pre.has_value());
    CHECK_FALSE(is_easy(*built.pre));
}

TEST_CASE("wilderness components are small cliques (Theorem-3.1 shape)")
{
    Rng rng(43);
    int done = 0;
    while (done < 60) {
        auto p = testing::random_seeded_instance(rng, 12, 0.3, 1, true);
        if (!p)
            continue;
        ++done;
        CHECK(check_wilderness_structure(*p));
    }
}

TEST_CASE("realized types are monochromatic subsets of the seed")
{
    Rng rng(44);
    int done = 0;
    while (done < 20) {
        auto p = testing::random_seeded_instance(rng, 10, 0.35, 1, true);
        if (!p)
            continue;
        ++done;
        BoundaryView v = boundary_view(*p);
        auto types = realized_types(*p, v);
        CHECK(types.size() <= std::size_t(1) << p->seed.size());
        for (auto& t : types) {
            CHECK(!t.members.empty());
            CHECK(vset::subset(t.members, p->seed));
            for (int s : t.members)
                CHECK(p->seed_color(s) == t.color);
            CHECK(!boundary_of_type(*p, v, t.members).empty());
        }
    }
}
