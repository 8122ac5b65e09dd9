#include "gcol/precoloring.hpp"

namespace gcol {

BuildResult build_precoloring(Graph g, ListAssignment l, VSet seed, int r, std::string note)
{
    seed = vset::normalized(seed);
    if (!l.covers(g))
        return {std::nullopt, "condition 1: missing list entries"};
    for (int s : seed) {
        if (!g.has_vertex(s))
            return {std::nullopt, "condition 1: seed vertex not in graph"};
        if (l.list_size(s) != 1)
            return {std::nullopt, "condition 1: seed vertex " + std::to_string(s) +
                                      " lacks a singleton list"};
    }
    for (int s : seed)
        for (int t : seed)
            if (s < t && g.adjacent(s, t) && l.get(s) == l.get(t))
                return {std::nullopt, "condition 2: seed coloring not proper on G|S"};
    if (r >= 1) {
        Graph gs = g.induced(seed);
        std::vector<int> sizes{6};
        for (int i = 0; i < r - 1; ++i)
            sizes.push_back(3);
        if (!find_induced_linear_forest(gs, sizes))
            return {std::nullopt, "condition 3: G|S does not contain P6+" +
                                      std::to_string(r - 1) + "P3"};
    }
    auto upd = update_exhaustively(g, l);
    if (!upd.feasible)
        return {std::nullopt, "propagation: updating emptied a list"};
    return {SeededPrecoloring{std::move(g), std::move(upd.lists), std::move(seed), r,
                              std::move(note)},
            ""};
}

BoundaryView boundary_view(const SeededPrecoloring& p)
{
    BoundaryView v;
    v.x0 = x0(p.lists);
    for (int u : p.g.vertices()) {
        if (p.lists.list_size(u) != 2)
            continue;
        std::uint8_t missing = std::uint8_t(mask::ALL & ~p.lists.get(u));
        bool is_boundary = false;
        for (int s : p.g.neighbors(u)) {
            if (vset::contains(p.seed, s) && p.lists.get(s) == missing) {
                is_boundary = true;
                break;
            }
        }
        if (is_boundary)
            v.boundary.push_back(u);
    }
    v.wilderness = vset::minus(vset::minus(p.g.vertices(), v.x0), v.boundary);
    for (int w : v.wilderness)
        if (p.lists.list_size(w) == 3)
            v.tilde_w.push_back(w);
    v.tilde_b = p.g.attachments(v.tilde_w, v.boundary);
    for (int b : v.boundary) {
        auto cs = mask::colors(p.lists.get(b));
        for (int c : cs)
            v.by_color[c].push_back(b);
        v.by_pair[cs[0]][cs[1]].push_back(b);
        v.by_pair[cs[1]][cs[0]].push_back(b);
        if (vset::contains(v.tilde_b, b)) {
            for (int c : cs)
                v.tilde_by_color[c].push_back(b);
            v.tilde_by_pair[cs[0]][cs[1]].push_back(b);
            v.tilde_by_pair[cs[1]][cs[0]].push_back(b);
        }
    }
    return v;
}

SeedType type_of(const SeededPrecoloring& p, int b)
{
    VSet t = vset::intersect(p.g.neighbors(b), p.seed);
    if (t.empty())
        throw ContractError("type_of: vertex has no seed neighbor");
    int color = p.seed_color(t[0]);
    for (int s : t)
        if (p.seed_color(s) != color)
            throw ContractError("type_of: type is not monochromatic");
    return SeedType{std::move(t), color};
}

VSet boundary_of_type(const SeededPrecoloring& p, const BoundaryView& view, const VSet& t)
{
    VSet out;
    for (int b : view.boundary)
        if (vset::subset(t, p.g.neighbors(b)))
            out.push_back(b);
    return out;
}

VSet tilde_boundary_of_type(const SeededPrecoloring& p, const BoundaryView& view, const VSet& t)
{
    return vset::intersect(boundary_of_type(p, view, t), view.tilde_b);
}

std::vector<SeedType> realized_types(const SeededPrecoloring& p, const BoundaryView& view,
                                     bool tilde_only)
{
    // subsets of the full type of each boundary vertex, deduplicated
    std::vector<VSet> seen;
    std::vector<SeedType> out;
    const VSet& pool = tilde_only ? view.tilde_b : view.boundary;
    for (int b : pool) {
        SeedType full = type_of(p, b);
        int n = int(full.members.size());
        for (int bits = 1; bits < (1 << n); ++bits) {
            VSet sub;
            for (int i = 0; i < n; ++i)
                if (bits & (1 << i))
                    sub.push_back(full.members[i]);
            if (std::find(seen.begin(), seen.end(), sub) == seen.end()) {
                seen.push_back(sub);
                out.push_back(SeedType{sub, full.color});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const SeedType& a, const SeedType& b) { return a.members < b.members; });
    return out;
}

std::optional<SeededPrecoloring> move_to_seed(const SeededPrecoloring& p, const VSet& u,
                                              const Coloring& c, const std::string& note)
{
    for (int v : u) {
        auto it = c.find(v);
        if (it == c.end())
            throw ContractError("move_to_seed: coloring missing a vertex of u");
        if (!mask::has(p.lists.get(v), it->second))
            throw ContractError("move_to_seed: color not in list");
    }
    for (int v : u)
        for (int w : u)
            if (v < w && p.g.adjacent(v, w) && c.at(v) == c.at(w))
                throw ContractError("move_to_seed: coloring not proper on G|u");

    ListAssignment l2 = p.lists;
    for (int v : u)
        l2.set(v, mask::of(c.at(v)));
    auto upd = update_exhaustively(p.g, l2);
    if (!upd.feasible)
        return std::nullopt;
    return SeededPrecoloring{p.g, std::move(upd.lists), vset::unite(p.seed, vset::normalized(u)),
                             p.r, note.empty() ? p.note : note};
}

namespace {

std::vector<std::pair<int, int>> wilderness_edges(const SeededPrecoloring& p,
                                                  const BoundaryView& v)
{
    std::vector<std::pair<int, int>> out;
    for (int w : v.wilderness)
        for (int u : p.g.neighbors(w))
            if (w < u && vset::contains(v.wilderness, u))
                out.emplace_back(w, u);
    return out;
}

} // namespace

bool is_nice(const SeededPrecoloring& p)
{
    BoundaryView v = boundary_view(p);
    auto wedges = wilderness_edges(p, v);
    for (int b : v.boundary)
        for (auto& [w1, w2] : wedges)
            if (p.g.adjacent(b, w1) != p.g.adjacent(b, w2))
                return false;
    return true;
}

bool is_easy(const SeededPrecoloring& p)
{
    BoundaryView v = boundary_view(p);
    Graph bw = p.g.induced(vset::unite(v.boundary, v.wilderness));
    return !find_induced_path(bw, 6).has_value();
}

bool is_connected_vertex(const Graph& g, int v)
{
    const VSet& nb = g.neighbors(v);
    return !nb.empty() && g.is_connected(nb);
}

bool is_stable(const SeededPrecoloring& p)
{
    if (!is_nice(p))
        return false;
    BoundaryView v = boundary_view(p);

    // components of W holding a 3-list vertex are singletons
    for (const VSet& comp : p.g.components(v.wilderness))
        for (int w : comp)
            if (p.lists.list_size(w) == 3 && comp.size() != 1)
                return false;

    // N(b) cap B_{ik} stable for b in B_{ij}
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j)
                continue;
            int k = 6 - i - j;
            for (int b : v.by_pair[i][j]) {
                VSet nb = vset::intersect(p.g.neighbors(b), v.by_pair[i][k]);
                if (!p.g.is_stable_set(nb))
                    return false;
            }
        }

    // no u in B_{ik} complete to {n, n'} for w, n in B_{ij}, n' in B_{jk}
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j)
                continue;
            int k = 6 - i - j;
            for (int w : v.tilde_w)
                for (int n : vset::intersect(p.g.neighbors(w), v.by_pair[i][j]))
                    for (int n2 : vset::intersect(p.g.neighbors(w), v.by_pair[j][k]))
                        for (int u : v.by_pair[i][k])
                            if (p.g.adjacent(u, n) && p.g.adjacent(u, n2))
                                return false;
        }

    for (int w : v.tilde_w)
        if (is_connected_vertex(p.g, w))
            return false;

    for (int u : p.g.vertices())
        if (p.lists.list_size(u) == 3 && p.g.degree(u) <= 2)
            return false;

    return true;
}

bool check_wilderness_structure(const SeededPrecoloring& p)
{
    BoundaryView v = boundary_view(p);
    for (const VSet& comp : p.g.components(v.wilderness)) {
        if (comp.size() > 3)
            return false;
        for (int a : comp)
            for (int b : comp)
                if (a < b && !p.g.adjacent(a, b))
                    return false;
    }
    return true;
}

} // namespace gcol
