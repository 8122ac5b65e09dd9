#ifndef GCOL_SEAGULL_HPP
#define GCOL_SEAGULL_HPP

#include "gcol/precoloring.hpp"

namespace gcol {

// An induced P3 wing1-body-wing2. For (X,Y)-seagulls wing1 is the X-wing;
// for ij-typed seagulls wing1 lies in B~(P)_{ik} and wing2 in B~(P)_{jk}.
struct Seagull {
    int wing1, body, wing2;
    VSet vertices() const { return vset::normalized({wing1, body, wing2}); }
    bool operator==(const Seagull& o) const
    {
        return wing1 == o.wing1 && body == o.body && wing2 == o.wing2;
    }
    bool operator<(const Seagull& o) const
    {
        return std::tie(wing1, body, wing2) < std::tie(o.wing1, o.body, o.wing2);
    }
};

using Flock = std::vector<Seagull>;

bool is_seagull(const Graph& g, const Seagull& s);

// All (x,y)-seagulls: wing1 in x, body and wing2 in y.
std::vector<Seagull> enumerate_seagulls(const Graph& g, const VSet& x, const VSet& y);

// All ij-typed seagulls of p under the given view.
std::vector<Seagull> enumerate_ij_typed(const SeededPrecoloring& p, const BoundaryView& view,
                                        int i, int j);

// Pairwise vertex-disjoint and anticomplete (members re-validated as seagulls).
bool is_flock(const Graph& g, const Flock& f);

// Every flock of size exactly m drawn from candidates, in deterministic
// order; visit returns false to stop early.
bool for_each_flock(const Graph& g, const std::vector<Seagull>& candidates, int m,
                    const std::function<bool(const Flock&)>& visit);

std::optional<Flock> find_flock(const Graph& g, const std::vector<Seagull>& candidates, int m);

// Exactly the two cross edges wing1(s1)-wing2(s2) and wing2(s1)-wing1(s2)
// between the two (disjoint) seagulls.
bool related(const Graph& g, const Seagull& s1, const Seagull& s2);

// A potential key: a flock X1 of ij-typed seagulls plus, per member, an
// optional ij-typed seagull of the moved precoloring related to it.
struct Key {
    Flock x1;
    std::vector<std::optional<Seagull>> x2; // parallel to x1
    int order() const { return int(x1.size()); }
    VSet all_vertices() const;
};

// All potential (p,i,j)-keys of order < order_cap. The forced coloring
// (wing1 -> i, body -> k, wing2 -> j) is applied when moving X1 to the seed;
// branches whose move is infeasible carry no related-seagull options.
bool enumerate_keys(const SeededPrecoloring& p, int i, int j, int order_cap,
                    const std::function<bool(const Key&)>& visit);

std::vector<Key> collect_keys(const SeededPrecoloring& p, int i, int j, int order_cap);

} // namespace gcol

#endif
