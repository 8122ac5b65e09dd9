#include "gcol/seagull.hpp"

namespace gcol {

bool is_seagull(const Graph& g, const Seagull& s)
{
    if (s.wing1 == s.body || s.body == s.wing2 || s.wing1 == s.wing2)
        return false;
    return g.adjacent(s.wing1, s.body) && g.adjacent(s.body, s.wing2) &&
           !g.adjacent(s.wing1, s.wing2);
}

std::vector<Seagull> enumerate_seagulls(const Graph& g, const VSet& x, const VSet& y)
{
    if (!vset::disjoint(x, y))
        throw ContractError("enumerate_seagulls: x and y must be disjoint");
    std::vector<Seagull> out;
    for (int a : x)
        for (int b : vset::intersect(g.neighbors(a), y))
            for (int c : vset::intersect(g.neighbors(b), y))
                if (c != a && !g.adjacent(a, c))
                    out.push_back(Seagull{a, b, c});
    return out;
}

std::vector<Seagull> enumerate_ij_typed(const SeededPrecoloring& p, const BoundaryView& view,
                                        int i, int j)
{
    if (i == j)
        throw ContractError("enumerate_ij_typed: need distinct colors");
    int k = 6 - i - j;
    std::vector<Seagull> out;
    for (int a : view.tilde_by_pair[i][k])
        for (int b : vset::intersect(p.g.neighbors(a), view.tilde_w))
            for (int d : vset::intersect(p.g.neighbors(b), view.tilde_by_pair[j][k]))
                if (d != a && !p.g.adjacent(a, d))
                    out.push_back(Seagull{a, b, d});
    return out;
}

namespace {

bool compatible(const Graph& g, const Seagull& a, const Seagull& b)
{
    for (int u : a.vertices())
        for (int v : b.vertices())
            if (u == v || g.adjacent(u, v))
                return false;
    return true;
}

} // namespace

bool is_flock(const Graph& g, const Flock& f)
{
    for (auto& s : f)
        if (!is_seagull(g, s))
            return false;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (!compatible(g, f[i], f[j]))
                return false;
    return true;
}

namespace {

bool flock_search(const Graph& g, const std::vector<Seagull>& cands, int m, std::size_t from,
                  Flock& cur, const std::function<bool(const Flock&)>& visit)
{
    if (int(cur.size()) == m)
        return visit(cur);
    if (cands.size() - from < std::size_t(m) - cur.size())
        return true;
    for (std::size_t i = from; i < cands.size(); ++i) {
        bool ok = true;
        for (auto& s : cur)
            if (!compatible(g, s, cands[i])) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        cur.push_back(cands[i]);
        if (!flock_search(g, cands, m, i + 1, cur, visit))
            return false;
        cur.pop_back();
    }
    return true;
}

} // namespace

bool for_each_flock(const Graph& g, const std::vector<Seagull>& candidates, int m,
                    const std::function<bool(const Flock&)>& visit)
{
    if (m < 0)
        throw ContractError("for_each_flock: m must be >= 0");
    Flock cur;
    return flock_search(g, candidates, m, 0, cur, visit);
}

std::optional<Flock> find_flock(const Graph& g, const std::vector<Seagull>& candidates, int m)
{
    if (m < 1)
        throw ContractError("find_flock: m must be >= 1");
    // fewer conflicts first; ties by id order for determinism
    std::vector<Seagull> ordered = candidates;
    std::vector<int> conflicts(candidates.size(), 0);
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = 0; j < candidates.size(); ++j)
            if (i != j && !compatible(g, candidates[i], candidates[j]))
                ++conflicts[i];
    std::vector<std::size_t> idx(candidates.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (conflicts[a] != conflicts[b])
            return conflicts[a] < conflicts[b];
        return candidates[a] < candidates[b];
    });
    for (std::size_t i = 0; i < idx.size(); ++i)
        ordered[i] = candidates[idx[i]];

    std::optional<Flock> found;
    for_each_flock(g, ordered, m, [&](const Flock& f) {
        found = f;
        return false;
    });
    if (found)
        std::sort(found->begin(), found->end());
    return found;
}

bool related(const Graph& g, const Seagull& s1, const Seagull& s2)
{
    if (!vset::disjoint(s1.vertices(), s2.vertices()))
        throw ContractError("related: seagulls must be vertex-disjoint");
    for (int u : {s1.wing1, s1.body, s1.wing2})
        for (int v : {s2.wing1, s2.body, s2.wing2}) {
            bool want = (u == s1.wing1 && v == s2.wing2) || (u == s1.wing2 && v == s2.wing1);
            if (g.adjacent(u, v) != want)
                return false;
        }
    return true;
}

VSet Key::all_vertices() const
{
    VSet out;
    for (auto& s : x1)
        for (int v : s.vertices())
            out.push_back(v);
    for (auto& o : x2)
        if (o)
            for (int v : o->vertices())
                out.push_back(v);
    return vset::normalized(out);
}

namespace {

bool emit_key_variants(const SeededPrecoloring& p, int i, int j, const Flock& x1,
                       const std::function<bool(const Key&)>& visit)
{
    int k = 6 - i - j;
    Coloring forced;
    VSet moved;
    for (auto& s : x1) {
        forced[s.wing1] = i;
        forced[s.body] = k;
        forced[s.wing2] = j;
        for (int v : s.vertices())
            moved.push_back(v);
    }
    auto p2 = move_to_seed(p, vset::normalized(moved), forced, "key-move");
    if (!p2) {
        // no moved precoloring: only the all-empty X2 qualifies
        Key key;
        key.x1 = x1;
        key.x2.assign(x1.size(), std::nullopt);
        return visit(key);
    }

    BoundaryView view2 = boundary_view(*p2);
    auto typed2 = enumerate_ij_typed(*p2, view2, i, j);
    std::vector<std::vector<std::optional<Seagull>>> options(x1.size());
    for (std::size_t l = 0; l < x1.size(); ++l) {
        options[l].push_back(std::nullopt);
        for (auto& s : typed2)
            if (vset::disjoint(s.vertices(), x1[l].vertices()) && related(p.g, x1[l], s))
                options[l].push_back(s);
    }

    // odometer over the per-member options
    std::vector<std::size_t> pick(x1.size(), 0);
    for (;;) {
        Key key;
        key.x1 = x1;
        for (std::size_t l = 0; l < x1.size(); ++l)
            key.x2.push_back(options[l][pick[l]]);
        if (!visit(key))
            return false;
        std::size_t pos = 0;
        while (pos < pick.size()) {
            if (++pick[pos] < options[pos].size())
                break;
            pick[pos] = 0;
            ++pos;
        }
        if (pos == pick.size())
            break;
    }
    return true;
}

} // namespace

bool enumerate_keys(const SeededPrecoloring& p, int i, int j, int order_cap,
                    const std::function<bool(const Key&)>& visit)
{
    if (i == j)
        throw ContractError("enumerate_keys: need distinct colors");
    if (order_cap < 0)
        throw ContractError("enumerate_keys: cap must be >= 0");
    BoundaryView view = boundary_view(p);
    auto cands = enumerate_ij_typed(p, view, i, j);
    for (int m = 0; m < order_cap; ++m) {
        bool go_on = for_each_flock(p.g, cands, m, [&](const Flock& f) {
            return emit_key_variants(p, i, j, f, visit);
        });
        if (!go_on)
            return false;
    }
    return true;
}

std::vector<Key> collect_keys(const SeededPrecoloring& p, int i, int j, int order_cap)
{
    std::vector<Key> out;
    enumerate_keys(p, i, j, order_cap, [&](const Key& k) {
        out.push_back(k);
        return true;
    });
    return out;
}

} // namespace gcol
