#ifndef GCOL_CORPUS_HPP
#define GCOL_CORPUS_HPP

#include <random>

#include "gcol/pipeline.hpp"

namespace gcol {

using Rng = std::mt19937_64;

// G(n, p) conditioned on freeness by rejection sampling.
Graph random_graph(Rng& rng, int n, double edge_prob);
Graph random_free_graph(Rng& rng, int n, double edge_prob, int r, bool also_k4_free = false,
                        int max_tries = 10000);
Graph random_pt_free_graph(Rng& rng, int n, double edge_prob, int t, int max_tries = 10000);

// (P6+rP3)-free graph that is guaranteed to contain an induced P6: vertices
// 0..5 form a clean path, the rest attach at random. Drives the staged
// pipeline rather than the base-case fallback.
Graph random_p6_anchored_graph(Rng& rng, int n, double edge_prob, int r, int max_tries = 10000);

ListAssignment random_lists(Rng& rng, const Graph& g, bool allow_full = true);

struct LabelledInstance {
    Graph g;
    ListAssignment lists;
    bool colorable = false;
};

// Rejection-sampled (P6+rP3)-free instances with oracle labels.
std::vector<LabelledInstance> make_corpus(Rng& rng, int count, int n, double edge_prob, int r);

// All graphs on exactly n vertices up to isomorphism (vertex ids 0..n-1),
// by incremental extension with canonical-form deduplication.
std::vector<Graph> all_graphs_up_to_iso(int n);

// Canonical form: the lexicographically smallest adjacency bitstring over
// all vertex permutations (degree-class pruned).
std::vector<std::uint8_t> canonical_form(const Graph& g);

} // namespace gcol

#endif
