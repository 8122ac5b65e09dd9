#ifndef GCOL_IO_HPP
#define GCOL_IO_HPP

#include <array>
#include <iosfwd>
#include <string>

#include "gcol/hypergraph.hpp"
#include "gcol/lists.hpp"

namespace gcol {

// DIMACS-like graph format: comment lines `c ...`, header `p edge <n> <m>`,
// edge lines `e <u> <v>` with 1-based vertices. Internally vertices are
// 0-based; the shift lives here and nowhere else.
Graph parse_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

// List files: `l <vertex> <c1> [<c2> [<c3>]]`, 1-based vertices; unlisted
// vertices default to {1,2,3}.
ListAssignment parse_lists(std::istream& in, const Graph& g);
void write_lists(std::ostream& out, const ListAssignment& l);

// DIMACS CNF subset: `p cnf <n> <m>` plus clause lines with exactly three
// literals terminated by 0.
struct CnfInstance {
    int n_vars = 0;
    std::vector<std::array<int, 3>> clauses; // literals: +v / -v, 1-based
};
CnfInstance parse_cnf(std::istream& in);
void write_cnf(std::ostream& out, const CnfInstance& f);

// Coloring files: `v <vertex> <color>` per line, 1-based vertices.
Coloring parse_coloring(std::istream& in);
void write_coloring(std::ostream& out, const Coloring& c);

// Hypergraph text format: one hyperedge per line, space-separated vertex ids.
Hypergraph parse_hypergraph(std::istream& in);

} // namespace gcol

#endif
