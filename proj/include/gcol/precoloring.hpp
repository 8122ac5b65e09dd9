#ifndef GCOL_PRECOLORING_HPP
#define GCOL_PRECOLORING_HPP

#include <optional>
#include <string>

#include "gcol/lists.hpp"

namespace gcol {

// An r-seeded precoloring (G, L, S): singleton lists on the seed, the seed
// properly colored, G|S containing P6+(r-1)P3 when r >= 1, lists kept at the
// update_exhaustively fixpoint. Immutable; transformations return new values
// carrying a provenance note.
struct SeededPrecoloring {
    Graph g;
    ListAssignment lists;
    VSet seed;
    int r = 1;
    std::string note;

    int seed_color(int s) const { return mask::only(lists.get(s)); }
};

// A non-empty monochromatic subset of the seed.
struct SeedType {
    VSet members;
    int color = 0;
};

// B(P)/W(P)/X0 decomposition plus the section-6 tilde sets.
struct BoundaryView {
    VSet x0;
    VSet boundary;
    VSet wilderness;
    VSet tilde_w; // 3-list wilderness vertices
    VSet tilde_b; // their attachments in the boundary

    VSet by_color[4];       // B(P,i), indexed 1..3
    VSet by_pair[4][4];     // B(P)_{ij}, indexed by {i,j}
    VSet tilde_by_color[4]; // B~(P,i)
    VSet tilde_by_pair[4][4];
};

struct BuildResult {
    std::optional<SeededPrecoloring> pre;
    std::string error; // names the violated condition when empty
};

BuildResult build_precoloring(Graph g, ListAssignment l, VSet seed, int r,
                              std::string note = "");

BoundaryView boundary_view(const SeededPrecoloring& p);

// N(b) cap S with its shared color; contract error if not monochromatic
// (cannot happen for boundary vertices of an updated precoloring).
SeedType type_of(const SeededPrecoloring& p, int b);

// B(P,T): boundary vertices whose type includes T.
VSet boundary_of_type(const SeededPrecoloring& p, const BoundaryView& view, const VSet& t);
VSet tilde_boundary_of_type(const SeededPrecoloring& p, const BoundaryView& view, const VSet& t);

// All types realized by at least one boundary vertex (monochromatic subsets
// T of the seed with B(P,T) nonempty), in deterministic order.
std::vector<SeedType> realized_types(const SeededPrecoloring& p, const BoundaryView& view,
                                     bool tilde_only = false);

// Seed grows by u colored with c; lists updated exhaustively. Absent when
// propagation empties a list. c must respect lists and be proper on G|u.
std::optional<SeededPrecoloring> move_to_seed(const SeededPrecoloring& p, const VSet& u,
                                              const Coloring& c, const std::string& note = "");

// No boundary vertex mixed on an edge of the wilderness.
bool is_nice(const SeededPrecoloring& p);

// G|(B union W) is P6-free.
bool is_easy(const SeededPrecoloring& p);

// The six stability bullets of the nice-to-stable stage.
bool is_stable(const SeededPrecoloring& p);

// Every component of W(P) is a clique of size at most three; guaranteed on
// K4-free (P6+rP3)-free instances.
bool check_wilderness_structure(const SeededPrecoloring& p);

// G|N(v) connected (and nonempty).
bool is_connected_vertex(const Graph& g, int v);

} // namespace gcol

#endif
