#ifndef GCOL_TEST_HELPERS_HPP
#define GCOL_TEST_HELPERS_HPP

#include <random>

#include "gcol/corpus.hpp"
#include "gcol/precoloring.hpp"

namespace gcol::testing {

// Seeds the first P6+(r-1)P3 witness with a proper coloring (colors cycle
// along each path), leaves all other lists full, and builds.
inline std::optional<SeededPrecoloring> seed_first_witness(const Graph& g, int r)
{
    auto w = find_p6_rp3(g, r - 1);
    if (!w)
        return std::nullopt;
    ListAssignment l = ListAssignment::full(g);
    auto color_path = [&](const PathWitness& p) {
        int c = 1;
        for (int v : p.vertices) {
            l.set(v, mask::of(c));
            c = c % 3 + 1;
        }
    };
    color_path(w->p6);
    for (auto& p : w->p3s)
        color_path(p);
    auto built = build_precoloring(g, l, w->all_vertices(), r);
    if (!built.pre)
        return std::nullopt;
    return built.pre;
}

// Random K4-free (P6+rP3)-free graph that does contain the seed witness,
// seeded with a random proper coloring and random non-seed lists.
inline std::optional<SeededPrecoloring> random_seeded_instance(Rng& rng, int n, double p, int r,
                                                               bool random_lists_elsewhere)
{
    for (int tries = 0; tries < 400; ++tries) {
        Graph g = random_graph(rng, n, p);
        if (g.has_clique4() || find_p6_rp3(g, r))
            continue;
        auto w = find_p6_rp3(g, r - 1);
        if (!w)
            continue;
        VSet seed = w->all_vertices();
        ListAssignment l = ListAssignment::full(g);
        if (random_lists_elsewhere)
            for (int v : vset::minus(g.vertices(), seed))
                l.set(v, std::uint8_t(1 + rng() % 7));
        // random proper seed coloring by greedy with random preference
        bool ok = true;
        for (int v : seed) {
            std::uint8_t avail = mask::ALL;
            for (int u : vset::intersect(g.neighbors(v), seed))
                if (u < v && l.list_size(u) == 1)
                    avail &= std::uint8_t(~l.get(u));
            if (!avail) {
                ok = false;
                break;
            }
            auto cs = mask::colors(avail);
            l.set(v, mask::of(cs[rng() % cs.size()]));
        }
        if (!ok)
            continue;
        auto built = build_precoloring(g, l, seed, r);
        if (built.pre)
            return built.pre;
    }
    return std::nullopt;
}

} // namespace gcol::testing

#endif
