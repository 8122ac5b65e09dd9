#ifndef GCOL_PIPELINE_HPP
#define GCOL_PIPELINE_HPP

#include "gcol/stages.hpp"

namespace gcol {

struct SolveOutcome {
    enum class Status { Colorable, Uncolorable, BudgetExceeded };
    Status status = Status::Uncolorable;
    Coloring coloring;
    std::string witness; // "clique4" | "subset" | "exhausted" (uncolorable)
    VSet witness_set;
    StageStats stats;
};

struct SolveOptions {
    bool verify_class = true;          // check (P6+rP3)-freeness up front
    int subset_scan_ceiling = 12;      // effective cap: min(4r+8, ceiling, n)
    std::uint64_t budget = 5'000'000;
    std::ostream* trace = nullptr;
};

// The staged pipeline: class check, small-subset infeasibility scan, K4
// scan, then seeded precolorings carried to tractable form. The exact
// backtracking solver stands in for the known P7-free subroutine on easy
// precolorings and for the r=0 base case.
SolveOutcome solve(const Graph& g, const ListAssignment& l, int r, const StageParams& params,
                   const SolveOptions& opts = {});

// Independent ground-truth oracle: exact backtracking over list-respecting
// proper colorings, most-constrained vertex first.
std::optional<Coloring> oracle_solve(const Graph& g, const ListAssignment& l);

// c(v) in L(v) everywhere and no monochromatic edge; c must be total.
bool verify_coloring(const Graph& g, const ListAssignment& l, const Coloring& c);

} // namespace gcol

#endif
