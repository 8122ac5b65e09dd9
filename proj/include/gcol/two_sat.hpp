#ifndef GCOL_TWO_SAT_HPP
#define GCOL_TWO_SAT_HPP

#include <optional>

#include "gcol/lists.hpp"

namespace gcol {

// Vertex sets required to be monochromatic in a coloring.
struct MonoConstraints {
    std::vector<VSet> groups;
};

// Merges overlapping groups until pairwise disjoint; a coloring satisfies the
// input iff it satisfies the output.
MonoConstraints normalize_mono(const MonoConstraints& x);

// List coloring when every list has size <= 2, by 2-SAT over the implication
// graph (one boolean per 2-list vertex; SCC-based assignment, lower color
// preferred for unconstrained vertices). Lists of size 3 are a contract error;
// empty lists yield an immediate "no coloring".
std::optional<Coloring> solve_lists_le2(const Graph& g, const ListAssignment& l);

// Same, with every group forced monochromatic. Groups are normalized, then
// contracted to super-vertices (list = intersection, neighborhood = union);
// a group spanning an edge makes the instance uncolorable.
std::optional<Coloring> solve_with_mono(const Graph& g, const ListAssignment& l,
                                        const MonoConstraints& x);

} // namespace gcol

#endif
