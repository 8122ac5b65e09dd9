#include "gcol/stages.hpp"

namespace gcol {

namespace {

// Shortest odd cycle through BFS layers; exists iff the graph is not
// bipartite, and a shortest one is induced.
std::optional<VSet> find_odd_cycle(const Graph& g)
{
    std::optional<VSet> best;
    for (int s : g.vertices()) {
        std::map<int, int> dist, par;
        dist[s] = 0;
        par[s] = -1;
        std::vector<int> queue{s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int w : g.neighbors(u)) {
                if (!dist.count(w)) {
                    dist[w] = dist[u] + 1;
                    par[w] = u;
                    queue.push_back(w);
                } else if (dist[w] == dist[u]) {
                    // odd cycle via the two BFS paths
                    VSet cyc;
                    int a = u, b = w;
                    while (a != b) {
                        cyc.push_back(a);
                        cyc.push_back(b);
                        a = par[a];
                        b = par[b];
                    }
                    cyc.push_back(a);
                    cyc = vset::normalized(cyc);
                    if (!best || cyc.size() < best->size())
                        best = cyc;
                }
            }
        }
    }
    return best;
}

} // namespace

Coloring VertexReduction::unreduce(const Coloring& reduced) const
{
    Coloring c = reduced;
    int c1 = c.at(a1), c2 = c.at(a2);
    c.erase(a1);
    c.erase(a2);
    for (int u : class1)
        c[u] = c1;
    for (int u : class2)
        c[u] = c2;
    c[v] = 6 - c1 - c2;
    return c;
}

std::variant<VertexReduction, VSet> reduce_vertex(const Graph& g, const ListAssignment& l, int v)
{
    if (l.list_size(v) != 3)
        throw ContractError("reduce_vertex: |L(v)| must be 3");
    const VSet& nb = g.neighbors(v);
    Graph gn = g.induced(nb);
    if (nb.empty() || !gn.is_connected(nb))
        throw ContractError("reduce_vertex: N(v) must be connected");

    // 2-color the connected neighborhood; failure yields an odd cycle
    std::map<int, int> side;
    side[nb[0]] = 0;
    std::vector<int> queue{nb[0]};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int w : gn.neighbors(u)) {
            if (!side.count(w)) {
                side[w] = 1 - side[u];
                queue.push_back(w);
            } else if (side[w] == side[u]) {
                auto cyc = find_odd_cycle(gn);
                if (!cyc)
                    throw ContractError("reduce_vertex: inconsistent bipartition state");
                return *cyc;
            }
        }
    }

    VertexReduction red;
    red.v = v;
    for (auto& [u, s] : side)
        (s == 0 ? red.class1 : red.class2).push_back(u);
    red.class1 = vset::normalized(red.class1);
    red.class2 = vset::normalized(red.class2);
    red.a1 = g.max_id() + 1;
    red.a2 = g.max_id() + 2;

    VSet removed = vset::unite({v}, nb);
    VSet verts = vset::minus(g.vertices(), removed);
    std::vector<std::pair<int, int>> edges;
    for (int u : verts)
        for (int w : g.neighbors(u))
            if (u < w && vset::contains(verts, w))
                edges.emplace_back(u, w);
    edges.emplace_back(red.a1, red.a2);
    for (int u : verts) {
        if (!vset::disjoint(g.neighbors(u), red.class1))
            edges.emplace_back(red.a1, u);
        if (!vset::disjoint(g.neighbors(u), red.class2))
            edges.emplace_back(red.a2, u);
    }
    verts.push_back(red.a1);
    verts.push_back(red.a2);
    red.g = Graph(vset::normalized(verts), std::move(edges));

    ListAssignment l2;
    for (int u : red.g.vertices())
        if (u != red.a1 && u != red.a2)
            l2.set(u, l.get(u));
    std::uint8_t m1 = mask::ALL, m2 = mask::ALL;
    for (int u : red.class1)
        m1 &= l.get(u);
    for (int u : red.class2)
        m2 &= l.get(u);
    l2.set(red.a1, m1);
    l2.set(red.a2, m2);
    red.lists = std::move(l2);
    return red;
}

namespace {

struct RuleOutcome {
    bool applied = false;
    bool infeasible = false;
};

// First 3-list vertex that is deletable (degree <= 2) or reducible
// (connected neighborhood).
RuleOutcome try_reduce_rule(SeededPrecoloring& cur,
                            std::vector<std::function<Coloring(Coloring)>>& undo)
{
    for (int v : cur.g.vertices()) {
        if (cur.lists.list_size(v) != 3)
            continue;
        if (cur.g.degree(v) <= 2) {
            VSet nbrs = cur.g.neighbors(v);
            std::uint8_t lv = cur.lists.get(v);
            undo.push_back([v, nbrs, lv](Coloring c) {
                std::uint8_t free = lv;
                for (int u : nbrs)
                    free &= std::uint8_t(~mask::of(c.at(u)));
                c[v] = mask::only(mask::of(mask::colors(free)[0]));
                return c;
            });
            Graph g2 = cur.g.without({v});
            ListAssignment l2;
            for (int u : g2.vertices())
                l2.set(u, cur.lists.get(u));
            cur = SeededPrecoloring{std::move(g2), std::move(l2), cur.seed, cur.r, "s2:delete"};
            return {true, false};
        }
        if (is_connected_vertex(cur.g, v)) {
            auto res = reduce_vertex(cur.g, cur.lists, v);
            if (std::holds_alternative<VSet>(res))
                return {true, true}; // odd wheel: no 3-coloring at all
            VertexReduction red = std::get<VertexReduction>(std::move(res));
            auto upd = update_exhaustively(red.g, red.lists);
            if (!upd.feasible)
                return {true, true};
            undo.push_back([red](Coloring c) { return red.unreduce(c); });
            cur = SeededPrecoloring{red.g, std::move(upd.lists), cur.seed, cur.r, "s2:reduce"};
            return {true, false};
        }
    }
    return {false, false};
}

RuleOutcome try_stableboundary_rule(SeededPrecoloring& cur)
{
    BoundaryView view = boundary_view(cur);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j)
                continue;
            int k = 6 - i - j;
            for (int b : view.by_pair[i][j]) {
                VSet cand = vset::intersect(cur.g.neighbors(b), view.by_pair[i][k]);
                for (int n : cand)
                    for (int n2 : cand) {
                        if (n >= n2 || !cur.g.adjacent(n, n2))
                            continue;
                        // one of n, n2 receives color i, so b cannot
                        ListAssignment l2 = cur.lists;
                        l2.set(b, mask::of(j));
                        auto upd = update_exhaustively(cur.g, l2);
                        if (!upd.feasible)
                            return {true, true};
                        cur.lists = std::move(upd.lists);
                        cur.note = "s2:stableboundary";
                        return {true, false};
                    }
            }
        }
    return {false, false};
}

RuleOutcome try_nosquare_rule(SeededPrecoloring& cur)
{
    BoundaryView view = boundary_view(cur);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j)
                continue;
            int k = 6 - i - j;
            for (int w : view.tilde_w)
                for (int n : vset::intersect(cur.g.neighbors(w), view.by_pair[i][j]))
                    for (int n2 : vset::intersect(cur.g.neighbors(w), view.by_pair[j][k]))
                        for (int u : view.by_pair[i][k]) {
                            if (!cur.g.adjacent(u, n) || !cur.g.adjacent(u, n2))
                                continue;
                            ListAssignment l2 = cur.lists;
                            l2.set(w, std::uint8_t(mask::ALL & ~mask::of(j)));
                            auto upd = update_exhaustively(cur.g, l2);
                            if (!upd.feasible)
                                return {true, true};
                            cur.lists = std::move(upd.lists);
                            cur.note = "s2:nosquare";
                            return {true, false};
                        }
        }
    return {false, false};
}

} // namespace

StableCollection nice_to_stable(StageContext& ctx, const SeededPrecoloring& p)
{
    StableCollection out;
    SeededPrecoloring cur = p;

    for (;;) {
        ctx.charge();
        RuleOutcome r = try_reduce_rule(cur, out.undo_chain);
        if (!r.applied)
            r = try_stableboundary_rule(cur);
        if (!r.applied)
            r = try_nosquare_rule(cur);
        if (r.infeasible) {
            out.infeasible = true;
            return out;
        }
        if (!r.applied)
            break;
    }

    VSet fixed = x0(cur.lists);
    std::vector<VSet> comps = cur.g.components(vset::minus(cur.g.vertices(), fixed));
    if (comps.size() <= 1) {
        out.members.push_back(cur);
    } else {
        for (const VSet& c : comps) {
            Graph part = cur.g.induced(vset::unite(fixed, c));
            ListAssignment lp = cur.lists.restricted_to(part);
            out.members.push_back(
                SeededPrecoloring{std::move(part), std::move(lp), cur.seed, cur.r, "s2:split"});
        }
    }
    ctx.stats.stage2_members += out.members.size();
    for (auto& m : out.members)
        ctx.trace_line("stage2", "member", m);
    return out;
}

Coloring stable_lift(const StableCollection& col, const std::vector<Coloring>& per_member)
{
    if (per_member.size() != col.members.size())
        throw ContractError("stable_lift: wrong number of member colorings");
    Coloring merged;
    for (const Coloring& c : per_member)
        for (auto& [v, col_v] : c) {
            auto it = merged.find(v);
            if (it != merged.end() && it->second != col_v)
                throw std::logic_error("stable_lift: members disagree on a shared vertex");
            merged[v] = col_v;
        }
    for (auto it = col.undo_chain.rbegin(); it != col.undo_chain.rend(); ++it)
        merged = (*it)(merged);
    return merged;
}

} // namespace gcol
