#include "gcol/stages.hpp"

#include <ostream>

namespace gcol {

StageParams StageParams::paper(int r)
{
    StageParams p;
    p.r = r;
    p.paper_faithful = true;
    return p;
}

StageParams StageParams::capped(int r, std::uint64_t k)
{
    if (k < 1)
        throw ContractError("cap must be >= 1");
    StageParams p;
    p.r = r;
    p.paper_faithful = false;
    p.cap = k;
    return p;
}

std::uint64_t StageParams::apply_cap(const BigInt& formula) const
{
    std::uint64_t limit = paper_faithful ? UINT64_MAX : cap;
    return to_capped_u64(formula, limit);
}

std::uint64_t StageParams::m_param(int seed_size) const
{
    return apply_cap((BigInt(1) << seed_size) * (r + 6));
}

std::uint64_t StageParams::f_of_m(int seed_size) const
{
    BigInt m = (BigInt(1) << seed_size) * (r + 6);
    // M fits u64 whenever any enumeration is possible at all
    return apply_cap(f_rpq(r, 3, 2, to_capped_u64(m, UINT64_MAX)));
}

std::uint64_t StageParams::f_of_2() const { return apply_cap(f_rpq(r, 3, 2, 2)); }

std::uint64_t StageParams::r_flock_size() const { return apply_cap(BigInt(r + 6)); }

std::uint64_t StageParams::f_r() const { return apply_cap(f_rpq(r, 1, 1, r + 6)); }

std::uint64_t StageParams::s_flock_size(int seed_size) const
{
    BigInt n = BigInt(1) << (seed_size + 1);
    if (n < r + 6)
        n = r + 6;
    return apply_cap(n);
}

std::uint64_t StageParams::f_s(int seed_size) const
{
    BigInt n = BigInt(1) << (seed_size + 1);
    if (n < r + 6)
        n = r + 6;
    return apply_cap(f_rpq(r, 1, 1, to_capped_u64(n, UINT64_MAX)));
}

std::uint64_t StageParams::hetero_cap() const { return apply_cap(BigInt(r + 6)); }

std::uint64_t StageParams::pair_flock_size() const { return apply_cap(BigInt(r + 2)); }

std::uint64_t StageParams::f_pair() const { return apply_cap(f_rpq(r, 1, 1, r + 2)); }

void StageContext::charge(std::uint64_t n)
{
    stats.branches += n;
    if (stats.branches > budget)
        throw BudgetExceeded();
}

void StageContext::trace_line(const char* layer, const char* kind, const SeededPrecoloring& p)
{
    if (!trace)
        return;
    std::uint64_t mass = 0;
    for (auto& [v, m] : p.lists.entries())
        mass += mask::size(m);
    *trace << layer << '\t' << kind << '\t' << p.seed.size() << '\t' << mass << '\n';
}

bool for_each_subset_up_to(const VSet& pool, std::uint64_t max_size,
                           const std::function<bool(const VSet&)>& visit)
{
    std::uint64_t top = std::min<std::uint64_t>(max_size, pool.size());
    for (std::uint64_t size = 0; size <= top; ++size) {
        std::vector<int> idx(size);
        std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t d, std::size_t from) {
            if (d == size) {
                VSet subset;
                for (std::size_t i = 0; i < size; ++i)
                    subset.push_back(pool[idx[i]]);
                return visit(subset);
            }
            for (std::size_t i = from; i + (size - d - 1) < pool.size(); ++i) {
                idx[d] = int(i);
                if (!rec(d + 1, i + 1))
                    return false;
            }
            return true;
        };
        if (!rec(0, 0))
            return false;
    }
    return true;
}

bool for_each_consistent_coloring(const Graph& g, const ListAssignment& l, const VSet& verts,
                                  const Coloring& forced,
                                  const std::function<bool(const Coloring&)>& visit)
{
    for (auto& [v, c] : forced)
        if (!mask::has(l.get(v), c))
            return true; // no coloring extends the forced part
    VSet free;
    for (int v : verts)
        if (!forced.count(v))
            free.push_back(v);

    Coloring cur = forced;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == free.size()) {
            for (int u : verts)
                for (int w : verts)
                    if (u < w && g.adjacent(u, w) && cur.at(u) == cur.at(w))
                        return true; // improper, skip
            return visit(cur);
        }
        int v = free[i];
        for (int c : mask::colors(l.get(v))) {
            cur[v] = c;
            if (!rec(i + 1))
                return false;
        }
        cur.erase(v);
        return true;
    };
    return rec(0);
}

Hypergraph general_hypergraph(const SeededPrecoloring& p, int i, const Coloring& c)
{
    BoundaryView view = boundary_view(p);
    VSet vh;
    for (int b : view.by_color[i])
        if (c.at(b) == i)
            vh.push_back(b);
    std::vector<VSet> edges;
    for (int w1 : view.wilderness)
        for (int w2 : p.g.neighbors(w1)) {
            if (w2 <= w1 || !vset::contains(view.wilderness, w2))
                continue;
            VSet att;
            bool mixed = false;
            for (int b : vh) {
                bool a1 = p.g.adjacent(b, w1), a2 = p.g.adjacent(b, w2);
                if (a1 || a2)
                    att.push_back(b);
                if (a1 != a2)
                    mixed = true;
            }
            if (mixed)
                edges.push_back(att);
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Hypergraph(vh, std::move(edges));
}

Characteristic find_characteristic_general(const SeededPrecoloring& p, int i, const Coloring& c,
                                            std::uint64_t flock_size)
{
    BoundaryView view = boundary_view(p);
    VSet vh;
    for (int b : view.by_color[i])
        if (c.at(b) == i)
            vh.push_back(b);

    std::vector<VSet> edges;
    std::vector<std::pair<int, int>> wedges; // parallel to edges
    for (int w1 : view.wilderness)
        for (int w2 : p.g.neighbors(w1)) {
            if (w2 <= w1 || !vset::contains(view.wilderness, w2))
                continue;
            VSet att;
            bool mixed = false;
            for (int b : vh) {
                bool a1 = p.g.adjacent(b, w1), a2 = p.g.adjacent(b, w2);
                if (a1 || a2)
                    att.push_back(b);
                if (a1 != a2)
                    mixed = true;
            }
            if (mixed) {
                edges.push_back(att);
                wedges.emplace_back(w1, w2);
            }
        }
    Hypergraph h(vh, edges);

    Characteristic out;
    if (flock_size >= 1 && flock_size <= edges.size()) {
        auto match = nu_witness(h, int(flock_size));
        if (!match.empty()) {
            out.kind = Characteristic::Kind::Big;
            for (int j : match) {
                auto [w1, w2] = wedges[std::size_t(j)];
                for (int b : edges[std::size_t(j)]) {
                    bool a1 = p.g.adjacent(b, w1), a2 = p.g.adjacent(b, w2);
                    if (a1 != a2) {
                        out.big.push_back(a1 ? Seagull{b, w1, w2} : Seagull{b, w2, w1});
                        break;
                    }
                }
            }
            return out;
        }
    }
    out.kind = Characteristic::Kind::Small;
    out.small = tau_witness(h);
    return out;
}

namespace {

std::vector<std::pair<int, int>> wilderness_edges(const Graph& g, const BoundaryView& v)
{
    std::vector<std::pair<int, int>> out;
    for (int w : v.wilderness)
        for (int u : g.neighbors(w))
            if (w < u && vset::contains(v.wilderness, u))
                out.emplace_back(w, u);
    return out;
}

bool mixed_on_some_edge(const Graph& g, const std::vector<std::pair<int, int>>& wedges, int b)
{
    for (auto& [w1, w2] : wedges)
        if (g.adjacent(b, w1) != g.adjacent(b, w2))
            return true;
    return false;
}

// One per-color step of phase A: enumerate guesses for color i on the
// current precoloring, apply the move and the list surgery, and hand every
// surviving branch to cont.
bool phase_a_color(StageContext& ctx, const SeededPrecoloring& cur, int i, std::uint64_t m_size,
                   std::uint64_t f_m, const std::function<bool(const SeededPrecoloring&)>& cont)
{
    BoundaryView view = boundary_view(cur);
    const VSet b_i = view.by_color[i];
    const VSet w_cur = view.wilderness;
    const VSet boundary_before = view.boundary;

    auto apply_branch = [&](const VSet& moved, const Coloring& c, bool big,
                            const Flock& flock) -> bool {
        ctx.charge();
        auto moved_pre = move_to_seed(cur, moved, c, big ? "s1:big" : "s1:small");
        if (!moved_pre)
            return true;
        BoundaryView after = boundary_view(*moved_pre);
        auto wedges = wilderness_edges(moved_pre->g, after);
        ListAssignment l2 = moved_pre->lists;
        bool changed = false;
        for (int b : after.by_color[i]) {
            if (!vset::contains(boundary_before, b))
                continue;
            bool remove = false;
            if (!big) {
                remove = mixed_on_some_edge(moved_pre->g, wedges, b);
            } else {
                int hits = 0;
                for (auto& s : flock) {
                    if (moved_pre->g.adjacent(b, s.body) || moved_pre->g.adjacent(b, s.wing2))
                        ++hits;
                }
                remove = hits > 1;
            }
            if (remove) {
                l2.set(b, std::uint8_t(l2.get(b) & ~mask::of(i)));
                changed = true;
            }
        }
        SeededPrecoloring next = *moved_pre;
        if (changed) {
            auto upd = update_exhaustively(next.g, l2);
            if (!upd.feasible)
                return true;
            next.lists = std::move(upd.lists);
        }
        return cont(next);
    };

    // small guesses: subsets of B(P,i), all colored i (so internal edges kill
    // the branch before it starts)
    bool go = for_each_subset_up_to(b_i, f_m, [&](const VSet& x) {
        for (int u : x)
            for (int v : x)
                if (u < v && cur.g.adjacent(u, v))
                    return true;
        Coloring c;
        for (int v : x)
            c[v] = i;
        return apply_branch(x, c, false, {});
    });
    if (!go)
        return false;

    // big guesses: flocks of (B(P,i), W(P))-seagulls of size m_size
    if (m_size >= 1 && m_size <= w_cur.size()) {
        auto cands = enumerate_seagulls(cur.g, b_i, w_cur);
        go = for_each_flock(cur.g, cands, int(m_size), [&](const Flock& f) {
            Coloring forced;
            VSet moved;
            for (auto& s : f) {
                forced[s.wing1] = i;
                for (int v : s.vertices())
                    moved.push_back(v);
            }
            moved = vset::normalized(moved);
            return for_each_consistent_coloring(cur.g, cur.lists, moved, forced,
                                                [&](const Coloring& c) {
                                                    return apply_branch(moved, c, true, f);
                                                });
        });
        if (!go)
            return false;
    }
    return true;
}

struct TypePair {
    SeedType type;
    int color; // the guessed color i (not the type's color)
    VSet small_pool;
    std::vector<Seagull> big_cands;
};

struct TypeGuess {
    bool big;
    VSet small;
    Flock flock;
};

// Options for one (T,i) pair on the current precoloring.
std::vector<TypeGuess> pair_options(const TypePair& tp, std::uint64_t f2,
                                    const Graph& g, const VSet& w_now)
{
    std::vector<TypeGuess> out;
    for_each_subset_up_to(tp.small_pool, f2, [&](const VSet& x) {
        out.push_back(TypeGuess{false, x, {}});
        return true;
    });
    for_each_flock(g, tp.big_cands, 2, [&](const Flock& f) {
        out.push_back(TypeGuess{true, {}, f});
        return true;
    });
    (void)w_now;
    return out;
}

bool phase_b(StageContext& ctx, const SeededPrecoloring& p_orig, const BoundaryView& view_orig,
             const SeededPrecoloring& q, std::uint64_t f2,
             const std::function<bool(const SeededPrecoloring&)>& visit)
{
    BoundaryView view_q = boundary_view(q);

    std::vector<TypePair> pairs;
    for (const SeedType& t : realized_types(p_orig, view_orig)) {
        VSet pool = boundary_of_type(p_orig, view_orig, t.members);
        for (int i = 1; i <= 3; ++i) {
            if (i == t.color)
                continue;
            TypePair tp;
            tp.type = t;
            tp.color = i;
            tp.small_pool = pool;
            // wings must still lie in the current boundary with i available,
            // matching the characteristic they stand for
            VSet wings = vset::intersect(pool, view_q.by_color[i]);
            tp.big_cands = enumerate_seagulls(q.g, wings, view_q.wilderness);
            pairs.push_back(std::move(tp));
        }
    }

    std::vector<std::vector<TypeGuess>> options;
    for (auto& tp : pairs)
        options.push_back(pair_options(tp, f2, q.g, view_q.wilderness));

    std::vector<std::size_t> pick(pairs.size(), 0);
    for (;;) {
        ctx.charge();
        // assemble forced coloring; conflicts kill the combination
        bool ok = true;
        Coloring forced;
        VSet moved;
        for (std::size_t pi = 0; pi < pairs.size() && ok; ++pi) {
            const TypeGuess& tg = options[pi][pick[pi]];
            int i = pairs[pi].color;
            if (!tg.big) {
                for (int v : tg.small) {
                    auto it = forced.find(v);
                    if (it != forced.end() && it->second != i) {
                        ok = false;
                        break;
                    }
                    forced[v] = i;
                    moved.push_back(v);
                }
            } else {
                for (auto& s : tg.flock) {
                    auto it = forced.find(s.wing1);
                    if (it != forced.end() && it->second != i) {
                        ok = false;
                        break;
                    }
                    forced[s.wing1] = i;
                    for (int v : s.vertices())
                        moved.push_back(v);
                }
            }
        }
        if (ok) {
            moved = vset::normalized(moved);
            bool keep_going = for_each_consistent_coloring(
                q.g, q.lists, moved, forced, [&](const Coloring& c) {
                    ctx.charge();
                    auto p2 = move_to_seed(q, moved, c, "s1:types");
                    if (!p2)
                        return true;
                    BoundaryView after = boundary_view(*p2);
                    auto wedges = wilderness_edges(p2->g, after);
                    ListAssignment l2 = p2->lists;
                    bool changed = false;
                    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
                        const TypeGuess& tg = options[pi][pick[pi]];
                        if (tg.big)
                            continue;
                        int i = pairs[pi].color;
                        const VSet& t = pairs[pi].type.members;
                        for (int b : after.boundary) {
                            if (!mask::has(l2.get(b), i))
                                continue;
                            if (!vset::subset(t, p2->g.neighbors(b)))
                                continue;
                            if (mixed_on_some_edge(p2->g, wedges, b)) {
                                l2.set(b, std::uint8_t(l2.get(b) & ~mask::of(i)));
                                changed = true;
                            }
                        }
                    }
                    SeededPrecoloring out = *p2;
                    if (changed) {
                        auto upd = update_exhaustively(out.g, l2);
                        if (!upd.feasible)
                            return true;
                        out.lists = std::move(upd.lists);
                    }
                    ctx.stats.stage1_members++;
                    ctx.stats.max_seed_size = std::max(ctx.stats.max_seed_size,
                                                       int(out.seed.size()));
                    ctx.trace_line("stage1", "member", out);
                    return visit(out);
                });
            if (!keep_going)
                return false;
        }
        std::size_t pos = 0;
        while (pos < pick.size()) {
            if (++pick[pos] < options[pos].size())
                break;
            pick[pos] = 0;
            ++pos;
        }
        if (pos >= pick.size())
            break;
    }
    return true;
}

} // namespace

bool general_to_nice_or_easy(StageContext& ctx, const SeededPrecoloring& p,
                             const std::function<bool(const SeededPrecoloring&)>& visit)
{
    int s0 = int(p.seed.size());
    std::uint64_t m_size = ctx.params.m_param(s0);
    std::uint64_t f_m = ctx.params.f_of_m(s0);
    std::uint64_t f2 = ctx.params.f_of_2();
    BoundaryView view_orig = boundary_view(p);

    return phase_a_color(ctx, p, 1, m_size, f_m, [&](const SeededPrecoloring& p1) {
        return phase_a_color(ctx, p1, 2, m_size, f_m, [&](const SeededPrecoloring& p2) {
            return phase_a_color(ctx, p2, 3, m_size, f_m, [&](const SeededPrecoloring& q) {
                return phase_b(ctx, p, view_orig, q, f2, visit);
            });
        });
    });
}

} // namespace gcol
