#ifndef GCOL_LISTS_HPP
#define GCOL_LISTS_HPP

#include <cstdint>
#include <map>

#include "gcol/graph.hpp"
#include "gcol/util.hpp"

namespace gcol {

// Per-vertex allowed-color subsets of {1,2,3}, stored as 3-bit masks.
// Every vertex of the ambient graph has an entry; an empty list is a
// first-class "infeasible" signal, not an error.
class ListAssignment {
public:
    ListAssignment() = default;
    static ListAssignment full(const Graph& g);

    std::uint8_t get(int v) const;
    void set(int v, std::uint8_t m);
    bool covers(const Graph& g) const;

    // Restriction to the vertices of an induced subgraph.
    ListAssignment restricted_to(const Graph& g) const;

    bool has_empty() const;
    int list_size(int v) const { return mask::size(get(v)); }

    const std::map<int, std::uint8_t>& entries() const { return lists_; }

    bool operator==(const ListAssignment& o) const { return lists_ == o.lists_; }

private:
    std::map<int, std::uint8_t> lists_;
};

// X^0(L): vertices with a singleton list.
VSet x0(const ListAssignment& l);

// Updates Y from X: for v in y, remove from L(v) every color of a neighbor
// in x. x must consist of singleton-list vertices.
ListAssignment update_from(const Graph& g, const ListAssignment& l, const VSet& x, const VSet& y);

struct UpdateResult {
    ListAssignment lists;
    bool feasible; // false iff some list became empty
    int rounds;
};

// Round-based fixpoint of updating from X^0; reaches the fixpoint in at most
// 3|V(G)| rounds.
UpdateResult update_exhaustively(const Graph& g, const ListAssignment& l);

// True iff no vertex v has a singleton-list neighbor u with L(u) contained in
// L(v). Holds on every feasible output of update_exhaustively.
bool assert_convention(const Graph& g, const ListAssignment& l);

} // namespace gcol

#endif
