#ifndef GCOL_HARDNESS_HPP
#define GCOL_HARDNESS_HPP

#include "gcol/io.hpp"

namespace gcol {

// Exact small-graph coloring tools (saturation order, canonical color
// pruning, so non-colorability proofs stay fast at gadget scale).
bool k_colorable(const Graph& g, int k);
std::optional<Coloring> k_coloring(const Graph& g, int k);
int chromatic_number(const Graph& g);
int clique_number(const Graph& g);

// A k-critical graph with a stable triple whose removal keeps omega = k-1.
struct NiceCriticalGraph {
    Graph graph;
    int k = 0;
    std::array<int, 3> triple{};
};

// The 7-vertex nice 4-critical graph from the hardness construction.
NiceCriticalGraph h_star();

// Odd cycles of length >= 7 are nice 3-critical.
NiceCriticalGraph odd_cycle_nice(int len);

bool is_nice_k_critical(const Graph& g, int k, const std::array<int, 3>& triple);

enum class Role { X, D, C, U };

struct GadgetGraph {
    Graph graph;
    std::map<int, Role> roles;
    std::vector<std::pair<int, int>> literal_edges; // (C-type vertex, literal vertex)
    // id helpers for the fixed layout
    int n_vars = 0, n_clauses = 0, h_size = 0;
    int x_pos(int var) const { return 3 * (var - 1); }
    int x_neg(int var) const { return 3 * (var - 1) + 1; }
    int d(int var) const { return 3 * (var - 1) + 2; }
};

// The reduction graph: variable edges x_i - not(x_i), vertices d_i, one copy
// of H per clause with its stable triple wired to literal vertices and d_i,
// U-type vertices complete to X u D.
GadgetGraph build_gadget(const NiceCriticalGraph& h, const CnfInstance& f);

// Post-build structural validation of the construction bullets.
bool validate_gadget(const GadgetGraph& g, const NiceCriticalGraph& h, const CnfInstance& f);

bool cnf_satisfiable(const CnfInstance& f);

// Satisfiability of f versus (k+1)-colorability of the gadget, both decided
// exhaustively; true iff the two sides agree.
bool verify_reduction(const NiceCriticalGraph& h, const CnfInstance& f);

// No induced P5+P2.
bool check_p5p2_free(const Graph& g);

} // namespace gcol

#endif
