#ifndef GCOL_HYPERGRAPH_HPP
#define GCOL_HYPERGRAPH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "gcol/graph.hpp"

namespace gcol {

using BigInt = boost::multiprecision::cpp_int;

// Finite hypergraph: ordered vertex ids plus non-empty hyperedges.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(VSet vertices, std::vector<VSet> hyperedges);

    const VSet& vertices() const { return verts_; }
    const std::vector<VSet>& hyperedges() const { return edges_; }

private:
    VSet verts_;
    std::vector<VSet> edges_;
};

// Maximum number of pairwise disjoint hyperedges (exact).
int nu(const Hypergraph& h);

// Indexes of m pairwise disjoint hyperedges, empty when none exist.
std::vector<int> nu_witness(const Hypergraph& h, int m);

// Minimum hitting-set size (exact); 0 for an edgeless hypergraph.
int tau(const Hypergraph& h);
VSet tau_witness(const Hypergraph& h);

// The private-witness parameter: the largest k >= 2 admitting edges
// e_1..e_k with, for each pair {i,j}, a vertex lying in e_i and e_j and in
// no other chosen edge; 2 when no such family exists.
int lambda(const Hypergraph& h);

BigInt binomial(unsigned long n, unsigned long k);

// tau(H) <= 11 lam^2 (lam+nu+3) C(lam+nu, nu)^2
BigInt tau_bound(unsigned long lam, unsigned long nu);

// lambda(H) <= C(p,q) * ceil((t+1)/2) for attachment hypergraphs in P_t-free
// graphs (the defined lambda floor of 2 is the caller's concern).
BigInt lambda_bound(unsigned long p, unsigned long q, unsigned long t);

// tau bound with lambda replaced by C = C(p,q)(2r+4), valid in
// (P6+rP3)-free graphs.
BigInt f_rpq(unsigned long r, unsigned long p, unsigned long q, unsigned long nu);

// Hypergraph on the stable set x whose hyperedges are the attachment sets
// X(Z) of connected q-subsets Z of y that attach to x.
Hypergraph attachment_hypergraph(const Graph& g, const VSet& x, const VSet& y, int q);

// min(bound, cap) as u64; values beyond u64 saturate (they act as "no cap").
std::uint64_t to_capped_u64(const BigInt& value, std::uint64_t cap);

} // namespace gcol

#endif
