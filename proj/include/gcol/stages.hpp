#ifndef GCOL_STAGES_HPP
#define GCOL_STAGES_HPP

#include <functional>
#include <iosfwd>
#include <variant>

#include "gcol/hypergraph.hpp"
#include "gcol/seagull.hpp"
#include "gcol/two_sat.hpp"

namespace gcol {

// Enumeration parameters for the three staged reductions. Paper-faithful
// mode computes every cap from the cited formulas (astronomically large, so
// small-guess enumeration degenerates to "all subsets" and big guesses are
// empty at desk scale); capped mode replaces each by min(formula, cap).
struct StageParams {
    int r = 1;
    bool paper_faithful = true;
    std::uint64_t cap = 0;

    static StageParams paper(int r);
    static StageParams capped(int r, std::uint64_t k);

    std::uint64_t apply_cap(const BigInt& formula) const;

    // stage 1 (general -> nice/easy), f = f_{r,3,2}
    std::uint64_t m_param(int seed_size) const;    // 2^{|S|} (r+6)
    std::uint64_t f_of_m(int seed_size) const;     // f(M)
    std::uint64_t f_of_2() const;                  // f(2); big type flocks have size 2
    // stage 3 layers, f = f_{r,1,1}
    std::uint64_t r_flock_size() const;            // M = r+6
    std::uint64_t f_r() const;                     // f_R(M)
    std::uint64_t s_flock_size(int seed_size) const; // N = max(2^{|S(Q)|+1}, r+6)
    std::uint64_t f_s(int seed_size) const;        // f_S(N)
    std::uint64_t hetero_cap() const;              // T = r+6
    std::uint64_t pair_flock_size() const;         // B = r+2
    std::uint64_t f_pair() const;                  // f(B)
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded() : std::runtime_error("branch budget exceeded") {}
};

struct StageStats {
    std::uint64_t branches = 0;
    std::uint64_t stage1_members = 0;
    std::uint64_t stage2_members = 0;
    std::uint64_t stage3_members = 0;
    std::uint64_t seeds_tried = 0;
    int max_seed_size = 0;
};

struct StageContext {
    StageParams params;
    std::uint64_t budget = 5'000'000;
    StageStats stats;
    std::ostream* trace = nullptr;

    void charge(std::uint64_t n = 1);
    void trace_line(const char* layer, const char* kind, const SeededPrecoloring& p);
};

// The certificate a precoloring extension induces: a small hitting set, a
// big flock, or (heterogeneous layer) a key.
struct Characteristic {
    enum class Kind { Small, Big, KeyKind };
    Kind kind;
    VSet small;
    Flock big;
    Key key;
};

// Test-side certification for stage 1: builds H(P,i,c) and returns the true
// M-characteristic of the extension c (big flock when nu >= flock_size, else
// an exact minimum hitting set).
Characteristic find_characteristic_general(const SeededPrecoloring& p, int i, const Coloring& c,
                                           std::uint64_t flock_size);

// H(P,i,c) itself (exposed for the certification tests).
Hypergraph general_hypergraph(const SeededPrecoloring& p, int i, const Coloring& c);

// ---- stage 1: general -> nice or easy ---------------------------------

// Streams an equivalent collection; every member is nice or easy (shape
// asserted by the acceptance suite). visit returns false to stop early; the
// function returns false iff stopped.
bool general_to_nice_or_easy(StageContext& ctx, const SeededPrecoloring& p,
                             const std::function<bool(const SeededPrecoloring&)>& visit);

// ---- stage 2: nice -> stable -------------------------------------------

struct VertexReduction {
    Graph g;
    ListAssignment lists;
    int v;            // the reduced vertex
    int a1, a2;       // replacement vertices
    VSet class1, class2;
    Coloring unreduce(const Coloring& reduced) const;
};

// Replaces {v} u N(v) by an edge a1a2 (lists intersected per side);
// preconditions |L(v)|=3, N(v) connected and bipartite. A non-bipartite
// neighborhood returns the odd cycle as not-3-colorable evidence.
std::variant<VertexReduction, VSet> reduce_vertex(const Graph& g, const ListAssignment& l, int v);

struct StableCollection {
    bool infeasible = false;               // input shown to have no extension
    std::vector<SeededPrecoloring> members; // AND-semantics, one per component
    // lift: merge per-member colorings (same order as members) and undo the
    // deletions/reductions back to a coloring of the stage input's graph
    std::vector<std::function<Coloring(Coloring)>> undo_chain;
};

StableCollection nice_to_stable(StageContext& ctx, const SeededPrecoloring& p);
Coloring stable_lift(const StableCollection& c, const std::vector<Coloring>& per_member);

// ---- stage 3: stable -> tractable augmented precolorings -----------------

struct AugmentedPrecoloring {
    SeededPrecoloring reduced;  // over G' = G \ (W1 u W2); all lists <= 2
    MonoConstraints mono;       // the sets N(w) cap B_{ij} for w in W2
    VSet removed_w1, removed_w2;
    SeededPrecoloring full;     // terminal precoloring on the full graph
    bool is_tractable() const;
};

bool stable_to_tractable(StageContext& ctx, const SeededPrecoloring& p,
                         const std::function<bool(const AugmentedPrecoloring&)>& visit);

// Colors the removed W1/W2 vertices greedily (a free color always exists);
// throws on an internal invariant violation.
Coloring extend_from_augmented(const AugmentedPrecoloring& a, const Coloring& c);

// shared helper: all proper list-colorings of G|verts extending `forced`
bool for_each_consistent_coloring(const Graph& g, const ListAssignment& l, const VSet& verts,
                                  const Coloring& forced,
                                  const std::function<bool(const Coloring&)>& visit);

// shared helper: subsets of pool with size <= max_size, by size then lex
bool for_each_subset_up_to(const VSet& pool, std::uint64_t max_size,
                           const std::function<bool(const VSet&)>& visit);

} // namespace gcol

#endif
