#ifndef GCOL_GRAPH_HPP
#define GCOL_GRAPH_HPP

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "gcol/util.hpp"

namespace gcol {

// An induced path v_1-...-v_t: consecutive vertices adjacent, all other
// pairs non-adjacent.
struct PathWitness {
    std::vector<int> vertices;
    int size() const { return int(vertices.size()); }
};

// A vertex-disjoint, pairwise anticomplete embedding of P6 + r*P3.
struct P6rP3Witness {
    PathWitness p6;
    std::vector<PathWitness> p3s;
    VSet all_vertices() const;
};

enum class Relation { Complete, Anticomplete, Mixed };

// Immutable simple undirected graph. Vertex ids are arbitrary ints and stay
// stable under induced-subgraph extraction. Cheap to copy (shared storage).
class Graph {
public:
    Graph();
    Graph(VSet vertices, std::vector<std::pair<int, int>> edges);

    const VSet& vertices() const;
    int num_vertices() const;
    std::size_t num_edges() const;
    int max_id() const;

    bool has_vertex(int v) const;
    bool adjacent(int u, int v) const;
    const VSet& neighbors(int v) const;
    int degree(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    Graph induced(const VSet& keep) const;
    Graph without(const VSet& drop) const;

    // Maximal connected pieces of G|x, each sorted, ordered by smallest member.
    std::vector<VSet> components(const VSet& x) const;
    bool is_connected(const VSet& x) const;

    // Relation of a single vertex to a set it does not belong to.
    Relation relation(int a, const VSet& b) const;
    bool complete_to(int a, const VSet& b) const;
    bool anticomplete_to(int a, const VSet& b) const;
    bool mixed_on(int a, const VSet& b) const;

    // {v in b : v has a neighbor in a}; a and b must be disjoint.
    VSet attachments(const VSet& a, const VSet& b) const;

    bool is_stable_set(const VSet& x) const;
    bool has_clique4() const;
    std::optional<VSet> find_clique4() const;

    static Graph path(int t, int first_id = 0);
    static Graph cycle(int n, int first_id = 0);
    static Graph complete(int n, int first_id = 0);
    static Graph edgeless(int n, int first_id = 0);
    static Graph disjoint_union(const Graph& a, const Graph& b);

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    int pos(int v) const;
};

bool is_induced_path(const Graph& g, const PathWitness& w);
bool is_p6_rp3(const Graph& g, const P6rP3Witness& w, int r);

// First induced path on exactly t vertices in increasing-id DFS order.
std::optional<PathWitness> find_induced_path(const Graph& g, int t);

// Enumerates induced paths on t vertices whose vertex set lies in `allowed`
// (paths and their reversals reported once). `visit` returns false to stop;
// the function returns false iff stopped early.
bool for_each_induced_path(const Graph& g, int t, const VSet& allowed,
                           const std::function<bool(const PathWitness&)>& visit);

// Pairwise anticomplete induced paths with the given sizes, or nullopt.
std::optional<std::vector<PathWitness>> find_induced_linear_forest(const Graph& g,
                                                                   const std::vector<int>& sizes);

std::optional<P6rP3Witness> find_p6_rp3(const Graph& g, int r);

} // namespace gcol

#endif
