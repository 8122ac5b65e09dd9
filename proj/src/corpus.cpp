#include "gcol/corpus.hpp"

#include <algorithm>
#include <numeric>

namespace gcol {

Graph random_graph(Rng& rng, int n, double edge_prob)
{
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    VSet vs;
    for (int i = 0; i < n; ++i)
        vs.push_back(i);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < edge_prob)
                es.emplace_back(i, j);
    return Graph(std::move(vs), std::move(es));
}

Graph random_free_graph(Rng& rng, int n, double edge_prob, int r, bool also_k4_free,
                        int max_tries)
{
    for (int t = 0; t < max_tries; ++t) {
        Graph g = random_graph(rng, n, edge_prob);
        if (find_p6_rp3(g, r))
            continue;
        if (also_k4_free && g.has_clique4())
            continue;
        return g;
    }
    throw std::runtime_error("random_free_graph: rejection sampling exhausted");
}

Graph random_pt_free_graph(Rng& rng, int n, double edge_prob, int t, int max_tries)
{
    for (int k = 0; k < max_tries; ++k) {
        Graph g = random_graph(rng, n, edge_prob);
        if (!find_induced_path(g, t))
            return g;
    }
    throw std::runtime_error("random_pt_free_graph: rejection sampling exhausted");
}

Graph random_p6_anchored_graph(Rng& rng, int n, double edge_prob, int r, int max_tries)
{
    if (n < 6)
        throw ContractError("random_p6_anchored_graph: need n >= 6");
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int k = 0; k < max_tries; ++k) {
        VSet vs;
        for (int i = 0; i < n; ++i)
            vs.push_back(i);
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < 5; ++i)
            es.emplace_back(i, i + 1);
        for (int v = 6; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (coin(rng) < edge_prob)
                    es.emplace_back(u, v);
        Graph g(std::move(vs), std::move(es));
        if (!find_p6_rp3(g, r))
            return g;
    }
    throw std::runtime_error("random_p6_anchored_graph: rejection sampling exhausted");
}

ListAssignment random_lists(Rng& rng, const Graph& g, bool allow_full)
{
    std::uniform_int_distribution<int> pick(1, 7);
    ListAssignment l;
    for (int v : g.vertices()) {
        std::uint8_t m;
        do {
            m = std::uint8_t(pick(rng));
        } while (!allow_full && m == mask::ALL);
        l.set(v, m);
    }
    return l;
}

std::vector<LabelledInstance> make_corpus(Rng& rng, int count, int n, double edge_prob, int r)
{
    std::vector<LabelledInstance> out;
    while (int(out.size()) < count) {
        LabelledInstance ins;
        ins.g = random_free_graph(rng, n, edge_prob, r);
        ins.lists = random_lists(rng, ins.g);
        ins.colorable = oracle_solve(ins.g, ins.lists).has_value();
        out.push_back(std::move(ins));
    }
    return out;
}

namespace {

// adjacency bitstring under a permutation (perm[i] = original vertex at slot i)
std::vector<std::uint8_t> adjacency_bits(const Graph& g, const std::vector<int>& perm)
{
    int n = int(perm.size());
    std::vector<std::uint8_t> bits;
    bits.reserve(std::size_t(n * (n - 1) / 2));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            bits.push_back(g.adjacent(perm[std::size_t(i)], perm[std::size_t(j)]) ? 1 : 0);
    return bits;
}

void canon_search(const Graph& g, const std::vector<VSet>& classes, std::size_t ci,
                  std::vector<int>& perm, std::vector<std::uint8_t>& best)
{
    if (ci == classes.size()) {
        auto bits = adjacency_bits(g, perm);
        if (best.empty() || bits < best)
            best = bits;
        return;
    }
    VSet cls = classes[ci];
    std::sort(cls.begin(), cls.end());
    do {
        for (int v : cls)
            perm.push_back(v);
        canon_search(g, classes, ci + 1, perm, best);
        perm.resize(perm.size() - cls.size());
    } while (std::next_permutation(cls.begin(), cls.end()));
}

} // namespace

std::vector<std::uint8_t> canonical_form(const Graph& g)
{
    // group vertices by (degree, sorted neighbor degrees) to prune the
    // permutation search
    std::map<std::pair<int, std::vector<int>>, VSet> buckets;
    for (int v : g.vertices()) {
        std::vector<int> nd;
        for (int u : g.neighbors(v))
            nd.push_back(g.degree(u));
        std::sort(nd.begin(), nd.end());
        buckets[{g.degree(v), nd}].push_back(v);
    }
    std::vector<VSet> classes;
    for (auto& [key, cls] : buckets)
        classes.push_back(cls);
    std::vector<int> perm;
    std::vector<std::uint8_t> best;
    canon_search(g, classes, 0, perm, best);
    return best;
}

std::vector<Graph> all_graphs_up_to_iso(int n)
{
    if (n < 1)
        throw ContractError("all_graphs_up_to_iso: n must be >= 1");
    std::vector<Graph> level{Graph::edgeless(1)};
    for (int sz = 2; sz <= n; ++sz) {
        std::vector<Graph> next;
        std::vector<std::vector<std::uint8_t>> seen;
        for (const Graph& g : level) {
            int v_new = sz - 1;
            for (std::uint32_t nb = 0; nb < (1u << (sz - 1)); ++nb) {
                VSet vs = g.vertices();
                vs.push_back(v_new);
                auto es = g.edges();
                for (int i = 0; i < sz - 1; ++i)
                    if (nb & (1u << i))
                        es.emplace_back(i, v_new);
                Graph cand(std::move(vs), std::move(es));
                auto form = canonical_form(cand);
                auto it = std::lower_bound(seen.begin(), seen.end(), form);
                if (it == seen.end() || *it != form) {
                    seen.insert(it, form);
                    next.push_back(std::move(cand));
                }
            }
        }
        level = std::move(next);
    }
    return level;
}

} // namespace gcol
