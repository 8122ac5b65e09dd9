#include "gcol/hardness.hpp"

namespace gcol {

std::optional<Coloring> k_coloring(const Graph& g, int k)
{
    if (k < 0)
        throw ContractError("k_coloring: k must be >= 0");
    const VSet& vs = g.vertices();
    Coloring c;
    int used = 0;

    std::function<bool()> rec = [&]() {
        // most saturated uncolored vertex, then max degree, then min id
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v : vs) {
            if (c.count(v))
                continue;
            std::uint32_t seen = 0;
            int sat = 0;
            for (int u : g.neighbors(v)) {
                auto it = c.find(u);
                if (it != c.end()) {
                    std::uint32_t bit = 1u << ((it->second - 1) & 31);
                    if (!(seen & bit)) {
                        seen |= bit;
                        ++sat;
                    }
                }
            }
            if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = g.degree(v);
            }
        }
        if (best == -1)
            return true;
        int limit = std::min(k, used + 1); // canonical color order
        for (int col = 1; col <= limit; ++col) {
            bool ok = true;
            for (int u : g.neighbors(best)) {
                auto it = c.find(u);
                if (it != c.end() && it->second == col) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            c[best] = col;
            int prev_used = used;
            used = std::max(used, col);
            if (rec())
                return true;
            used = prev_used;
            c.erase(best);
        }
        return false;
    };
    if (rec())
        return c;
    return std::nullopt;
}

bool k_colorable(const Graph& g, int k) { return k_coloring(g, k).has_value(); }

int chromatic_number(const Graph& g)
{
    if (g.num_vertices() == 0)
        return 0;
    for (int k = 1;; ++k)
        if (k_colorable(g, k))
            return k;
}

namespace {

int clique_rec(const Graph& g, const VSet& cand, int have)
{
    if (cand.empty())
        return have;
    int best = have;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        if (have + int(cand.size() - i) <= best)
            break;
        VSet next = vset::intersect(
            VSet(cand.begin() + long(i) + 1, cand.end()), g.neighbors(cand[i]));
        best = std::max(best, clique_rec(g, next, have + 1));
    }
    return best;
}

} // namespace

int clique_number(const Graph& g) { return clique_rec(g, g.vertices(), 0); }

NiceCriticalGraph h_star()
{
    // v1=0 v2=1 v3=2 c1=3 c2=4 c3=5 u=6
    VSet vs{0, 1, 2, 3, 4, 5, 6};
    std::vector<std::pair<int, int>> es{{0, 1}, {1, 2}, {0, 2},          // inner triangle
                                        {3, 1}, {1, 4}, {4, 2}, {2, 5}, // outer 6-cycle
                                        {5, 0}, {0, 3},
                                        {6, 3}, {6, 4}, {6, 5}}; // hub to the triple
    return NiceCriticalGraph{Graph(vs, es), 4, {3, 4, 5}};
}

NiceCriticalGraph odd_cycle_nice(int len)
{
    if (len < 7 || len % 2 == 0)
        throw ContractError("odd_cycle_nice: length must be odd and >= 7");
    return NiceCriticalGraph{Graph::cycle(len), 3, {0, 2, 4}};
}

bool is_nice_k_critical(const Graph& g, int k, const std::array<int, 3>& triple)
{
    VSet t{triple[0], triple[1], triple[2]};
    t = vset::normalized(t);
    if (t.size() != 3)
        return false;
    for (int v : t)
        if (!g.has_vertex(v))
            return false;
    if (!g.is_stable_set(t))
        return false;
    if (k_colorable(g, k - 1) || !k_colorable(g, k))
        return false;
    for (int v : g.vertices())
        if (!k_colorable(g.without({v}), k - 1))
            return false;
    return clique_number(g) == k - 1 && clique_number(g.without(t)) == k - 1;
}

GadgetGraph build_gadget(const NiceCriticalGraph& h, const CnfInstance& f)
{
    for (auto& cl : f.clauses)
        for (int lit : cl)
            if (lit == 0 || std::abs(lit) > f.n_vars)
                throw ContractError("build_gadget: malformed clause");

    GadgetGraph gg;
    gg.n_vars = f.n_vars;
    gg.n_clauses = int(f.clauses.size());
    gg.h_size = h.graph.num_vertices();

    VSet verts;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= f.n_vars; ++i) {
        verts.push_back(gg.x_pos(i));
        verts.push_back(gg.x_neg(i));
        verts.push_back(gg.d(i));
        edges.emplace_back(gg.x_pos(i), gg.x_neg(i));
        gg.roles[gg.x_pos(i)] = Role::X;
        gg.roles[gg.x_neg(i)] = Role::X;
        gg.roles[gg.d(i)] = Role::D;
    }

    const VSet& hv = h.graph.vertices();
    std::map<int, int> hlocal; // h vertex id -> local index
    for (std::size_t i = 0; i < hv.size(); ++i)
        hlocal[hv[i]] = int(i);

    for (int j = 0; j < gg.n_clauses; ++j) {
        int base = 3 * f.n_vars + j * gg.h_size;
        for (int u : hv) {
            int id = base + hlocal[u];
            verts.push_back(id);
            bool is_c = u == h.triple[0] || u == h.triple[1] || u == h.triple[2];
            gg.roles[id] = is_c ? Role::C : Role::U;
        }
        for (auto [u, w] : h.graph.edges())
            edges.emplace_back(base + hlocal[u], base + hlocal[w]);

        for (int tpos = 0; tpos < 3; ++tpos) {
            int lit = f.clauses[std::size_t(j)][std::size_t(tpos)];
            int var = std::abs(lit);
            int c_vertex = base + hlocal[h.triple[std::size_t(tpos)]];
            int lit_vertex = lit > 0 ? gg.x_pos(var) : gg.x_neg(var);
            edges.emplace_back(c_vertex, lit_vertex);
            edges.emplace_back(c_vertex, gg.d(var));
            gg.literal_edges.emplace_back(c_vertex, lit_vertex);
        }
    }

    // U-type complete to X-type and D-type
    for (auto& [v, role] : gg.roles)
        if (role == Role::U)
            for (auto& [w, role2] : gg.roles)
                if (role2 == Role::X || role2 == Role::D)
                    edges.emplace_back(v, w);

    gg.graph = Graph(std::move(verts), std::move(edges));
    if (!validate_gadget(gg, h, f))
        throw std::logic_error("build_gadget: structural validation failed");
    return gg;
}

bool validate_gadget(const GadgetGraph& g, const NiceCriticalGraph& h, const CnfInstance& f)
{
    int n = f.n_vars, m = int(f.clauses.size()), hs = h.graph.num_vertices();
    if (g.graph.num_vertices() != 3 * n + m * hs)
        return false;

    int count_x = 0, count_d = 0, count_c = 0, count_u = 0;
    for (auto& [v, role] : g.roles)
        switch (role) {
        case Role::X: ++count_x; break;
        case Role::D: ++count_d; break;
        case Role::C: ++count_c; break;
        case Role::U: ++count_u; break;
        }
    if (count_x != 2 * n || count_d != n || count_c != 3 * m || count_u != m * (hs - 3))
        return false;

    // variable components are edges
    for (int i = 1; i <= n; ++i)
        if (!g.graph.adjacent(g.x_pos(i), g.x_neg(i)))
            return false;

    // U complete to X u D
    for (auto& [v, role] : g.roles)
        if (role == Role::U)
            for (auto& [w, role2] : g.roles)
                if (role2 == Role::X || role2 == Role::D)
                    if (!g.graph.adjacent(v, w))
                        return false;

    // every C-type vertex: outside its clause block, exactly its literal
    // vertex and its d_i
    for (int j = 0; j < m; ++j) {
        int base = 3 * n + j * hs;
        for (int tpos = 0; tpos < 3; ++tpos) {
            int lit = f.clauses[std::size_t(j)][std::size_t(tpos)];
            int var = std::abs(lit);
            // find the C vertex for this occurrence
            int c_vertex = -1;
            for (auto& [cv, lv] : g.literal_edges) {
                if (cv >= base && cv < base + hs &&
                    lv == (lit > 0 ? g.x_pos(var) : g.x_neg(var))) {
                    c_vertex = cv;
                    break;
                }
            }
            if (c_vertex < 0)
                return false;
            VSet outside;
            for (int u : g.graph.neighbors(c_vertex))
                if (u < base || u >= base + hs)
                    outside.push_back(u);
            VSet expect = vset::normalized(
                {lit > 0 ? g.x_pos(var) : g.x_neg(var), g.d(var)});
            // repeated literals may wire two C vertices to the same pair
            if (!vset::subset(outside, expect) && outside != expect)
                return false;
            if (!vset::subset(expect, outside))
                return false;
        }
    }
    return true;
}

bool cnf_satisfiable(const CnfInstance& f)
{
    if (f.n_vars > 25)
        throw ContractError("cnf_satisfiable: truth-table check limited to 25 variables");
    for (std::uint64_t a = 0; a < (std::uint64_t(1) << f.n_vars); ++a) {
        bool all = true;
        for (auto& cl : f.clauses) {
            bool sat = false;
            for (int lit : cl) {
                bool val = (a >> (std::abs(lit) - 1)) & 1;
                if ((lit > 0) == val) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all)
            return true;
    }
    return false;
}

bool verify_reduction(const NiceCriticalGraph& h, const CnfInstance& f)
{
    bool sat = cnf_satisfiable(f);
    GadgetGraph g = build_gadget(h, f);
    bool col = k_colorable(g.graph, h.k + 1);
    return sat == col;
}

bool check_p5p2_free(const Graph& g)
{
    return !find_induced_linear_forest(g, {5, 2}).has_value();
}

} // namespace gcol
