#include "gcol/graph.hpp"

#include <map>

namespace gcol {

struct Graph::Impl {
    VSet verts;
    std::vector<VSet> adj; // parallel to verts
    std::map<int, int> index;
    std::size_t num_edges = 0;
};

Graph::Graph() : impl_(std::make_shared<Impl>()) {}

Graph::Graph(VSet vertices, std::vector<std::pair<int, int>> edges)
{
    auto impl = std::make_shared<Impl>();
    impl->verts = vset::normalized(std::move(vertices));
    for (std::size_t i = 0; i < impl->verts.size(); ++i)
        impl->index[impl->verts[i]] = int(i);
    impl->adj.resize(impl->verts.size());
    for (auto& [u, v] : edges) {
        if (u == v)
            throw ContractError("self-loop forbidden");
        auto iu = impl->index.find(u), iv = impl->index.find(v);
        if (iu == impl->index.end() || iv == impl->index.end())
            throw ContractError("edge endpoint is not a vertex");
        impl->adj[iu->second].push_back(v);
        impl->adj[iv->second].push_back(u);
    }
    for (auto& nb : impl->adj) {
        nb = vset::normalized(std::move(nb));
        impl->num_edges += nb.size();
    }
    impl->num_edges /= 2;
    impl_ = std::move(impl);
}

int Graph::pos(int v) const
{
    auto it = impl_->index.find(v);
    if (it == impl_->index.end())
        throw ContractError("unknown vertex id " + std::to_string(v));
    return it->second;
}

const VSet& Graph::vertices() const { return impl_->verts; }
int Graph::num_vertices() const { return int(impl_->verts.size()); }
std::size_t Graph::num_edges() const { return impl_->num_edges; }

int Graph::max_id() const
{
    return impl_->verts.empty() ? -1 : impl_->verts.back();
}

bool Graph::has_vertex(int v) const { return impl_->index.count(v) != 0; }

bool Graph::adjacent(int u, int v) const
{
    return vset::contains(impl_->adj[pos(u)], v);
}

const VSet& Graph::neighbors(int v) const { return impl_->adj[pos(v)]; }

int Graph::degree(int v) const { return int(impl_->adj[pos(v)].size()); }

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u : impl_->verts)
        for (int v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const VSet& keep) const
{
    VSet ks = vset::normalized(keep);
    std::vector<std::pair<int, int>> es;
    for (int u : ks) {
        if (!has_vertex(u))
            throw ContractError("induced: vertex not in graph");
        for (int v : neighbors(u))
            if (u < v && vset::contains(ks, v))
                es.emplace_back(u, v);
    }
    return Graph(ks, std::move(es));
}

Graph Graph::without(const VSet& drop) const
{
    return induced(vset::minus(impl_->verts, vset::normalized(drop)));
}

std::vector<VSet> Graph::components(const VSet& x) const
{
    VSet xs = vset::normalized(x);
    std::vector<VSet> out;
    VSet seen;
    for (int start : xs) {
        if (vset::contains(seen, start))
            continue;
        VSet comp{start};
        vset::insert(seen, start);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : neighbors(u)) {
                if (vset::contains(xs, v) && !vset::contains(seen, v)) {
                    vset::insert(seen, v);
                    vset::insert(comp, v);
                    stack.push_back(v);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::is_connected(const VSet& x) const
{
    return components(x).size() <= 1;
}

Relation Graph::relation(int a, const VSet& b) const
{
    if (vset::contains(b, a))
        throw ContractError("relation: vertex belongs to the set");
    bool all = true, none = true;
    for (int v : b) {
        if (adjacent(a, v))
            none = false;
        else
            all = false;
    }
    if (b.empty() || none)
        return Relation::Anticomplete;
    if (all)
        return Relation::Complete;
    return Relation::Mixed;
}

bool Graph::complete_to(int a, const VSet& b) const
{
    return !b.empty() && relation(a, b) == Relation::Complete;
}

bool Graph::anticomplete_to(int a, const VSet& b) const
{
    return relation(a, b) == Relation::Anticomplete;
}

bool Graph::mixed_on(int a, const VSet& b) const
{
    return relation(a, b) == Relation::Mixed;
}

VSet Graph::attachments(const VSet& a, const VSet& b) const
{
    if (!vset::disjoint(a, b))
        throw ContractError("attachments: sets not disjoint");
    VSet out;
    for (int v : b)
        for (int u : neighbors(v))
            if (vset::contains(a, u)) {
                out.push_back(v);
                break;
            }
    return out;
}

bool Graph::is_stable_set(const VSet& x) const
{
    for (int u : x)
        for (int v : x)
            if (u < v && adjacent(u, v))
                return false;
    return true;
}

std::optional<VSet> Graph::find_clique4() const
{
    const VSet& vs = impl_->verts;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!adjacent(vs[i], vs[j]))
                continue;
            VSet common = vset::intersect(neighbors(vs[i]), neighbors(vs[j]));
            for (std::size_t a = 0; a < common.size(); ++a)
                for (std::size_t b = a + 1; b < common.size(); ++b)
                    if (adjacent(common[a], common[b]))
                        return vset::normalized({vs[i], vs[j], common[a], common[b]});
        }
    return std::nullopt;
}

bool Graph::has_clique4() const { return find_clique4().has_value(); }

Graph Graph::path(int t, int first_id)
{
    VSet vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < t; ++i) {
        vs.push_back(first_id + i);
        if (i > 0)
            es.emplace_back(first_id + i - 1, first_id + i);
    }
    return Graph(std::move(vs), std::move(es));
}

Graph Graph::cycle(int n, int first_id)
{
    if (n < 3)
        throw ContractError("cycle needs at least 3 vertices");
    VSet vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        vs.push_back(first_id + i);
        es.emplace_back(first_id + i, first_id + (i + 1) % n);
    }
    return Graph(std::move(vs), std::move(es));
}

Graph Graph::complete(int n, int first_id)
{
    VSet vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        vs.push_back(first_id + i);
        for (int j = 0; j < i; ++j)
            es.emplace_back(first_id + j, first_id + i);
    }
    return Graph(std::move(vs), std::move(es));
}

Graph Graph::edgeless(int n, int first_id)
{
    VSet vs;
    for (int i = 0; i < n; ++i)
        vs.push_back(first_id + i);
    return Graph(std::move(vs), {});
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b)
{
    int shift = a.max_id() + 1;
    VSet vs = a.vertices();
    std::vector<std::pair<int, int>> es = a.edges();
    for (int v : b.vertices())
        vs.push_back(v + shift);
    for (auto& [u, v] : b.edges())
        es.emplace_back(u + shift, v + shift);
    return Graph(std::move(vs), std::move(es));
}

VSet P6rP3Witness::all_vertices() const
{
    VSet out = p6.vertices;
    for (auto& p : p3s)
        out.insert(out.end(), p.vertices.begin(), p.vertices.end());
    return vset::normalized(out);
}

bool is_induced_path(const Graph& g, const PathWitness& w)
{
    const auto& vs = w.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!g.has_vertex(vs[i]))
            return false;
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            bool want = (j == i + 1);
            if (g.adjacent(vs[i], vs[j]) != want)
                return false;
        }
    }
    return vset::normalized(vs).size() == vs.size();
}

bool is_p6_rp3(const Graph& g, const P6rP3Witness& w, int r)
{
    if (w.p6.size() != 6 || int(w.p3s.size()) != r)
        return false;
    std::vector<PathWitness> parts{w.p6};
    parts.insert(parts.end(), w.p3s.begin(), w.p3s.end());
    for (auto& p : parts)
        if (!is_induced_path(g, p))
            return false;
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i].size() != 3)
            return false;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (int u : parts[i].vertices)
                for (int v : parts[j].vertices)
                    if (u == v || g.adjacent(u, v))
                        return false;
    return true;
}

namespace {

// DFS path extension; non-consecutive adjacency pruned as we go.
bool extend_path(const Graph& g, const VSet& allowed, std::vector<int>& cur, int t,
                 const std::function<bool(const PathWitness&)>& visit)
{
    if (int(cur.size()) == t) {
        // report each path once (not its reversal)
        if (t >= 2 && cur.front() > cur.back())
            return true;
        return visit(PathWitness{cur});
    }
    int tail = cur.back();
    for (int u : g.neighbors(tail)) {
        if (!vset::contains(allowed, u))
            continue;
        bool ok = true;
        for (std::size_t i = 0; ok && i + 1 < cur.size(); ++i)
            if (cur[i] == u || g.adjacent(cur[i], u))
                ok = false;
        if (ok && u != tail) {
            cur.push_back(u);
            if (!extend_path(g, allowed, cur, t, visit))
                return false;
            cur.pop_back();
        }
    }
    return true;
}

} // namespace

bool for_each_induced_path(const Graph& g, int t, const VSet& allowed,
                           const std::function<bool(const PathWitness&)>& visit)
{
    if (t < 1)
        throw ContractError("path length must be >= 1");
    for (int s : allowed) {
        if (!g.has_vertex(s))
            continue;
        std::vector<int> cur{s};
        if (!extend_path(g, allowed, cur, t, visit))
            return false;
    }
    return true;
}

std::optional<PathWitness> find_induced_path(const Graph& g, int t)
{
    std::optional<PathWitness> found;
    for_each_induced_path(g, t, g.vertices(), [&](const PathWitness& w) {
        found = w;
        return false;
    });
    return found;
}

namespace {

bool forest_search(const Graph& g, const std::vector<int>& sizes, std::size_t idx,
                   const VSet& allowed, std::vector<PathWitness>& acc)
{
    if (idx == sizes.size())
        return true;
    bool done = false;
    for_each_induced_path(g, sizes[idx], allowed, [&](const PathWitness& w) {
        VSet blocked = w.vertices;
        for (int v : w.vertices)
            for (int u : g.neighbors(v))
                blocked.push_back(u);
        acc.push_back(w);
        if (forest_search(g, sizes, idx + 1, vset::minus(allowed, vset::normalized(blocked)), acc)) {
            done = true;
            return false;
        }
        acc.pop_back();
        return true;
    });
    return done;
}

} // namespace

std::optional<std::vector<PathWitness>> find_induced_linear_forest(const Graph& g,
                                                                   const std::vector<int>& sizes)
{
    std::vector<PathWitness> acc;
    if (forest_search(g, sizes, 0, g.vertices(), acc))
        return acc;
    return std::nullopt;
}

std::optional<P6rP3Witness> find_p6_rp3(const Graph& g, int r)
{
    if (r < 0)
        throw ContractError("r must be >= 0");
    std::vector<int> sizes{6};
    for (int i = 0; i < r; ++i)
        sizes.push_back(3);
    auto forest = find_induced_linear_forest(g, sizes);
    if (!forest)
        return std::nullopt;
    P6rP3Witness w;
    w.p6 = (*forest)[0];
    for (std::size_t i = 1; i < forest->size(); ++i)
        w.p3s.push_back((*forest)[i]);
    return w;
}

} // namespace gcol
