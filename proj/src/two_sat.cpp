#include "gcol/two_sat.hpp"

#include <functional>
#include <numeric>

namespace gcol {

namespace {

// Implication-graph 2-SAT with Tarjan SCC. Literal 2i means "variable i
// true", 2i+1 its negation. Variable i true <=> vertex takes the lower of
// its two colors; DFS order then makes unconstrained vertices pick the
// lower color.
class TwoSat {
public:
    explicit TwoSat(int n) : n_(n), adj_(2 * n) {}

    static int lit(int var, bool truth) { return 2 * var + (truth ? 0 : 1); }

    void add_clause(int a, int b) // a OR b
    {
        adj_[a ^ 1].push_back(b);
        adj_[b ^ 1].push_back(a);
    }

    void add_unit(int a) { add_clause(a, a); }

    std::optional<std::vector<bool>> solve()
    {
        int nodes = 2 * n_;
        comp_.assign(nodes, -1);
        low_.assign(nodes, 0);
        num_.assign(nodes, -1);
        on_stack_.assign(nodes, false);
        int timer = 0, comps = 0;
        std::vector<int> stack;
        for (int s = 0; s < nodes; ++s)
            if (num_[s] < 0)
                dfs(s, timer, comps, stack);
        std::vector<bool> out(n_);
        for (int v = 0; v < n_; ++v) {
            if (comp_[2 * v] == comp_[2 * v + 1])
                return std::nullopt;
            // smaller component id completes first = later in topological order
            out[v] = comp_[2 * v] < comp_[2 * v + 1];
        }
        return out;
    }

private:
    void dfs(int u, int& timer, int& comps, std::vector<int>& stack)
    {
        num_[u] = low_[u] = timer++;
        stack.push_back(u);
        on_stack_[u] = true;
        for (int w : adj_[u]) {
            if (num_[w] < 0) {
                dfs(w, timer, comps, stack);
                low_[u] = std::min(low_[u], low_[w]);
            } else if (on_stack_[w]) {
                low_[u] = std::min(low_[u], num_[w]);
            }
        }
        if (low_[u] == num_[u]) {
            for (;;) {
                int w = stack.back();
                stack.pop_back();
                on_stack_[w] = false;
                comp_[w] = comps;
                if (w == u)
                    break;
            }
            ++comps;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> comp_, low_, num_;
    std::vector<bool> on_stack_;
};

} // namespace

std::optional<Coloring> solve_lists_le2(const Graph& g, const ListAssignment& l)
{
    for (int v : g.vertices()) {
        int sz = l.list_size(v);
        if (sz > 2)
            throw ContractError("solve_lists_le2: vertex " + std::to_string(v) +
                                " has a 3-list");
        if (sz == 0)
            return std::nullopt;
    }

    // variables for 2-list vertices only
    std::map<int, int> var;
    std::vector<int> lo, hi;
    for (int v : g.vertices()) {
        if (l.list_size(v) == 2) {
            auto cs = mask::colors(l.get(v));
            var[v] = int(lo.size());
            lo.push_back(cs[0]);
            hi.push_back(cs[1]);
        }
    }
    TwoSat sat(int(lo.size()));

    auto literal = [&](int v, int color) {
        int id = var.at(v);
        return TwoSat::lit(id, lo[id] == color);
    };

    for (auto [u, v] : g.edges()) {
        std::uint8_t common = l.get(u) & l.get(v);
        bool fu = l.list_size(u) == 1, fv = l.list_size(v) == 1;
        if (fu && fv) {
            if (l.get(u) == l.get(v))
                return std::nullopt;
            continue;
        }
        for (int c : mask::colors(common)) {
            if (fu)
                sat.add_unit(literal(v, c) ^ 1);
            else if (fv)
                sat.add_unit(literal(u, c) ^ 1);
            else
                sat.add_clause(literal(u, c) ^ 1, literal(v, c) ^ 1);
        }
    }

    auto model = sat.solve();
    if (!model)
        return std::nullopt;
    Coloring c;
    for (int v : g.vertices()) {
        if (l.list_size(v) == 1) {
            c[v] = mask::only(l.get(v));
        } else {
            int id = var.at(v);
            c[v] = (*model)[id] ? lo[id] : hi[id];
        }
    }
    return c;
}

MonoConstraints normalize_mono(const MonoConstraints& x)
{
    for (auto& grp : x.groups)
        if (grp.empty())
            throw ContractError("normalize_mono: empty group");

    // union-find over the vertices appearing in groups
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int v) {
        if (parent[v] == v)
            return v;
        return parent[v] = find(parent[v]);
    };
    for (auto& grp : x.groups)
        for (int v : grp)
            if (!parent.count(v))
                parent[v] = v;
    for (auto& grp : x.groups)
        for (int v : grp)
            parent[find(grp[0])] = find(v);

    std::map<int, VSet> classes;
    for (auto& [v, p] : parent)
        classes[find(v)].push_back(v);
    MonoConstraints out;
    for (auto& [root, members] : classes)
        out.groups.push_back(vset::normalized(members));
    return out;
}

std::optional<Coloring> solve_with_mono(const Graph& g, const ListAssignment& l,
                                        const MonoConstraints& x)
{
    for (int v : g.vertices())
        if (l.list_size(v) > 2)
            throw ContractError("solve_with_mono: vertex has a 3-list");

    MonoConstraints norm = normalize_mono(x);
    for (auto& grp : norm.groups) {
        for (int v : grp)
            if (!g.has_vertex(v))
                throw ContractError("solve_with_mono: group vertex not in graph");
        for (std::size_t i = 0; i < grp.size(); ++i)
            for (std::size_t j = i + 1; j < grp.size(); ++j)
                if (g.adjacent(grp[i], grp[j]))
                    return std::nullopt; // adjacent vertices cannot share a color
    }

    // contract each group to its minimum-id member
    std::map<int, int> rep;
    for (auto& grp : norm.groups)
        for (int v : grp)
            rep[v] = grp[0];
    auto map_v = [&](int v) {
        auto it = rep.find(v);
        return it == rep.end() ? v : it->second;
    };

    VSet cverts;
    for (int v : g.vertices())
        cverts.push_back(map_v(v));
    cverts = vset::normalized(cverts);
    std::vector<std::pair<int, int>> cedges;
    for (auto [u, v] : g.edges()) {
        int mu = map_v(u), mv = map_v(v);
        if (mu != mv)
            cedges.emplace_back(mu, mv);
    }
    Graph cg(cverts, std::move(cedges));

    ListAssignment cl;
    for (int v : cverts)
        cl.set(v, mask::ALL);
    for (int v : g.vertices())
        cl.set(map_v(v), std::uint8_t(cl.get(map_v(v)) & l.get(v)));

    auto sol = solve_lists_le2(cg, cl);
    if (!sol)
        return std::nullopt;
    Coloring out;
    for (int v : g.vertices())
        out[v] = sol->at(map_v(v));
    return out;
}

} // namespace gcol
