#include "gcol/stages.hpp"

namespace gcol {

namespace {

struct GuessOpt {
    bool big = false;
    VSet small;
    Flock flock;
};

struct HetOpt {
    bool big = false;
    Key key;
    Flock flock;
};

// flocks whose seagulls have both wings in `wings` (interchangeable, so
// wing1 < wing2) and body in `bodies`
std::vector<Seagull> same_class_candidates(const Graph& g, const VSet& wings, const VSet& bodies)
{
    std::vector<Seagull> out;
    for (int a : wings)
        for (int b : vset::intersect(g.neighbors(a), bodies))
            for (int c : vset::intersect(g.neighbors(b), wings))
                if (c > a && !g.adjacent(a, c))
                    out.push_back(Seagull{a, b, c});
    return out;
}

std::vector<Seagull> two_class_candidates(const Graph& g, const VSet& wings1, const VSet& wings2,
                                          const VSet& bodies)
{
    std::vector<Seagull> out;
    for (int a : wings1)
        for (int b : vset::intersect(g.neighbors(a), bodies))
            for (int c : vset::intersect(g.neighbors(b), wings2))
                if (c != a && !g.adjacent(a, c))
                    out.push_back(Seagull{a, b, c});
    return out;
}

bool merge_forced(Coloring& forced, int v, int color)
{
    auto it = forced.find(v);
    if (it != forced.end())
        return it->second == color;
    forced[v] = color;
    return true;
}

// w sits in a seagull with one wing in a and the other in b
bool in_seagull_with_wings(const Graph& g, int w, const VSet& a, const VSet& b)
{
    for (int u : vset::intersect(g.neighbors(w), a))
        for (int v : vset::intersect(g.neighbors(w), b))
            if (u != v && !g.adjacent(u, v))
                return true;
    return false;
}

using Emit = std::function<bool(const SeededPrecoloring&)>;

// ---- layer R ------------------------------------------------------------

bool layer_r(StageContext& ctx, const SeededPrecoloring& p, const Emit& emit)
{
    BoundaryView view = boundary_view(p);
    std::uint64_t f_r = ctx.params.f_r();
    std::uint64_t m = ctx.params.r_flock_size();

    const std::pair<int, int> order[6] = {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};
    std::vector<std::vector<GuessOpt>> options(6);
    for (int pi = 0; pi < 6; ++pi) {
        auto [i, j] = order[pi];
        for_each_subset_up_to(view.tilde_by_color[i], f_r, [&](const VSet& x) {
            options[pi].push_back(GuessOpt{false, x, {}});
            return true;
        });
        if (m >= 1 && m <= view.tilde_w.size()) {
            auto cands = same_class_candidates(p.g, view.tilde_by_pair[i][j], view.tilde_w);
            for_each_flock(p.g, cands, int(m), [&](const Flock& f) {
                options[pi].push_back(GuessOpt{true, {}, f});
                return true;
            });
        }
    }

    std::vector<std::size_t> pick(6, 0);
    for (;;) {
        ctx.charge();
        Coloring forced;
        VSet moved;
        bool ok = true;
        for (int pi = 0; pi < 6 && ok; ++pi) {
            auto [i, j] = order[pi];
            const GuessOpt& o = options[pi][pick[pi]];
            if (!o.big) {
                for (int v : o.small) {
                    if (!merge_forced(forced, v, i)) {
                        ok = false;
                        break;
                    }
                    moved.push_back(v);
                }
            } else {
                for (auto& s : o.flock) {
                    if (!merge_forced(forced, s.wing1, i) || !merge_forced(forced, s.wing2, i)) {
                        ok = false;
                        break;
                    }
                    for (int v : s.vertices())
                        moved.push_back(v);
                }
            }
        }
        if (ok) {
            moved = vset::normalized(moved);
            bool keep = for_each_consistent_coloring(
                p.g, p.lists, moved, forced, [&](const Coloring& c) {
                    ctx.charge();
                    auto p2 = move_to_seed(p, moved, c, "s3:R");
                    if (!p2)
                        return true;
                    BoundaryView after = boundary_view(*p2);
                    ListAssignment l2 = p2->lists;
                    bool changed = false;
                    for (int pi = 0; pi < 6; ++pi) {
                        auto [i, j] = order[pi];
                        const GuessOpt& o = options[pi][pick[pi]];
                        if (!o.big) {
                            for (int w : after.tilde_w) {
                                VSet nb =
                                    vset::intersect(p2->g.neighbors(w), after.tilde_by_pair[i][j]);
                                if (nb.size() > 1 && mask::has(l2.get(w), j)) {
                                    l2.set(w, std::uint8_t(l2.get(w) & ~mask::of(j)));
                                    changed = true;
                                }
                            }
                        } else {
                            for (int b : after.tilde_by_color[i]) {
                                if (!vset::contains(view.tilde_b, b) || !mask::has(l2.get(b), i))
                                    continue;
                                int hits = 0;
                                for (auto& s : o.flock)
                                    if (p2->g.adjacent(b, s.body))
                                        ++hits;
                                if (hits > 1) {
                                    l2.set(b, std::uint8_t(l2.get(b) & ~mask::of(i)));
                                    changed = true;
                                }
                            }
                        }
                    }
                    SeededPrecoloring q = *p2;
                    if (changed) {
                        auto upd = update_exhaustively(q.g, l2);
                        if (!upd.feasible)
                            return true;
                        q.lists = std::move(upd.lists);
                    }
                    ctx.trace_line("stage3", "R", q);
                    return emit(q);
                });
            if (!keep)
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

// ---- layer S ------------------------------------------------------------

bool layer_s(StageContext& ctx, const SeededPrecoloring& q,
             const std::function<bool(const SeededPrecoloring&, const bool*)>& emit_with_big)
{
    BoundaryView view = boundary_view(q);
    std::uint64_t n = ctx.params.s_flock_size(int(q.seed.size()));
    std::uint64_t f_s = ctx.params.f_s(int(q.seed.size()));

    std::vector<std::vector<GuessOpt>> options(3);
    for (int k = 1; k <= 3; ++k) {
        int i = k == 1 ? 2 : 1;
        int j = k == 3 ? 2 : 3;
        for_each_subset_up_to(view.tilde_by_color[k], f_s, [&](const VSet& x) {
            options[k - 1].push_back(GuessOpt{false, x, {}});
            return true;
        });
        if (n >= 1 && n <= view.tilde_w.size()) {
            auto cands = enumerate_ij_typed(q, view, i, j);
            for_each_flock(q.g, cands, int(n), [&](const Flock& f) {
                options[k - 1].push_back(GuessOpt{true, {}, f});
                return true;
            });
        }
    }

    std::vector<std::size_t> pick(3, 0);
    for (;;) {
        ctx.charge();
        Coloring forced;
        VSet moved;
        bool ok = true;
        for (int k = 1; k <= 3 && ok; ++k) {
            const GuessOpt& o = options[k - 1][pick[k - 1]];
            if (!o.big) {
                for (int v : o.small) {
                    if (!merge_forced(forced, v, k)) {
                        ok = false;
                        break;
                    }
                    moved.push_back(v);
                }
            } else {
                for (auto& s : o.flock) {
                    if (!merge_forced(forced, s.wing1, k) || !merge_forced(forced, s.wing2, k)) {
                        ok = false;
                        break;
                    }
                    for (int v : s.vertices())
                        moved.push_back(v);
                }
            }
        }
        if (ok) {
            moved = vset::normalized(moved);
            bool keep = for_each_consistent_coloring(
                q.g, q.lists, moved, forced, [&](const Coloring& c) {
                    ctx.charge();
                    auto p2 = move_to_seed(q, moved, c, "s3:S");
                    if (!p2)
                        return true;
                    BoundaryView after = boundary_view(*p2);
                    ListAssignment l2 = p2->lists;
                    bool changed = false;
                    for (int i = 1; i <= 3; ++i)
                        for (int j = i + 1; j <= 3; ++j) {
                            int k = 6 - i - j;
                            const GuessOpt& oi = options[i - 1][pick[i - 1]];
                            const GuessOpt& oj = options[j - 1][pick[j - 1]];
                            if (!oi.big && !oj.big) {
                                for (int w : after.tilde_w) {
                                    if (!mask::has(l2.get(w), k))
                                        continue;
                                    bool all3 =
                                        !vset::intersect(p2->g.neighbors(w),
                                                         after.tilde_by_pair[i][j]).empty() &&
                                        !vset::intersect(p2->g.neighbors(w),
                                                         after.tilde_by_pair[i][k]).empty() &&
                                        !vset::intersect(p2->g.neighbors(w),
                                                         after.tilde_by_pair[j][k]).empty();
                                    if (all3) {
                                        l2.set(w, std::uint8_t(l2.get(w) & ~mask::of(k)));
                                        changed = true;
                                    }
                                }
                            }
                        }
                    for (int i = 1; i <= 3; ++i) {
                        const GuessOpt& oi = options[i - 1][pick[i - 1]];
                        if (!oi.big)
                            continue;
                        for (int b : after.tilde_by_color[i]) {
                            if (!vset::contains(view.tilde_b, b) || !mask::has(l2.get(b), i))
                                continue;
                            int hits = 0;
                            for (auto& s : oi.flock)
                                if (p2->g.adjacent(b, s.body))
                                    ++hits;
                            if (hits > 1) {
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
                    bool z_big[4] = {false, false, false, false};
                    for (int k = 1; k <= 3; ++k)
                        z_big[k] = options[k - 1][pick[k - 1]].big;
                    ctx.trace_line("stage3", "S", out);
                    return emit_with_big(out, z_big);
                });
            if (!keep)
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

// ---- layer T (heterogeneous characteristics) ------------------------------

bool layer_t(StageContext& ctx, const SeededPrecoloring& s, const Emit& emit)
{
    BoundaryView view = boundary_view(s);
    std::uint64_t t_cap = ctx.params.hetero_cap();

    const std::pair<int, int> order[3] = {{1, 2}, {1, 3}, {2, 3}};
    std::vector<std::vector<HetOpt>> options(3);
    for (int pi = 0; pi < 3; ++pi) {
        auto [i, j] = order[pi];
        enumerate_keys(s, i, j, int(t_cap), [&](const Key& key) {
            options[pi].push_back(HetOpt{false, key, {}});
            return true;
        });
        if (t_cap >= 1 && t_cap <= view.tilde_w.size()) {
            auto cands = enumerate_ij_typed(s, view, i, j);
            for_each_flock(s.g, cands, int(t_cap), [&](const Flock& f) {
                options[pi].push_back(HetOpt{true, {}, f});
                return true;
            });
        }
    }

    std::vector<std::size_t> pick(3, 0);
    for (;;) {
        ctx.charge();
        Coloring forced;
        VSet moved;
        VSet x2_free; // X2 vertices: colored freely, with the key wing rule
        bool ok = true;
        for (int pi = 0; pi < 3 && ok; ++pi) {
            auto [i, j] = order[pi];
            int k = 6 - i - j;
            const HetOpt& o = options[pi][pick[pi]];
            const Flock& x1 = o.big ? o.flock : o.key.x1;
            for (auto& s2 : x1) {
                if (!merge_forced(forced, s2.wing1, i) || !merge_forced(forced, s2.body, k) ||
                    !merge_forced(forced, s2.wing2, j)) {
                    ok = false;
                    break;
                }
                for (int v : s2.vertices())
                    moved.push_back(v);
            }
            if (!o.big)
                for (auto& opt : o.key.x2)
                    if (opt) {
                        for (int v : opt->vertices()) {
                            moved.push_back(v);
                            x2_free.push_back(v);
                        }
                    }
        }
        if (ok) {
            moved = vset::normalized(moved);
            bool keep = for_each_consistent_coloring(
                s.g, s.lists, moved, forced, [&](const Coloring& c) {
                    // every X2 seagull needs a wing colored k
                    for (int pi = 0; pi < 3; ++pi) {
                        auto [i, j] = order[pi];
                        int k = 6 - i - j;
                        const HetOpt& o = options[pi][pick[pi]];
                        if (o.big)
                            continue;
                        for (auto& opt : o.key.x2)
                            if (opt && c.at(opt->wing1) != k && c.at(opt->wing2) != k)
                                return true;
                    }
                    ctx.charge();
                    auto p2 = move_to_seed(s, moved, c, "s3:T");
                    if (!p2)
                        return true;
                    BoundaryView after = boundary_view(*p2);
                    ListAssignment l2 = p2->lists;
                    bool changed = false;
                    for (int pi = 0; pi < 3; ++pi) {
                        auto [i, j] = order[pi];
                        int k = 6 - i - j;
                        const HetOpt& o = options[pi][pick[pi]];
                        if (o.big)
                            continue;
                        auto typed_after = enumerate_ij_typed(*p2, after, i, j);
                        for (std::size_t l = 0; l < o.key.x1.size(); ++l) {
                            if (o.key.x2[l])
                                continue;
                            for (auto& sg : typed_after) {
                                if (!vset::disjoint(sg.vertices(), o.key.x1[l].vertices()))
                                    continue;
                                if (related(p2->g, o.key.x1[l], sg)) {
                                    for (int wv : {sg.wing1, sg.wing2})
                                        if (mask::has(l2.get(wv), k)) {
                                            l2.set(wv,
                                                   std::uint8_t(l2.get(wv) & ~mask::of(k)));
                                            changed = true;
                                        }
                                }
                            }
                        }
                        for (auto& sg : typed_after) {
                            Flock with = o.key.x1;
                            with.push_back(sg);
                            if (is_flock(p2->g, with) && mask::has(l2.get(sg.body), k)) {
                                l2.set(sg.body, std::uint8_t(l2.get(sg.body) & ~mask::of(k)));
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
                    ctx.trace_line("stage3", "T", out);
                    return emit(out);
                });
            if (!keep)
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

// ---- layer C (type pairs) -------------------------------------------------

bool layer_c(StageContext& ctx, const SeededPrecoloring& r_pre, const bool* z_big,
             const Emit& emit)
{
    BoundaryView view = boundary_view(r_pre);
    std::uint64_t b_cap = ctx.params.pair_flock_size();
    std::uint64_t f_b = ctx.params.f_pair();

    std::vector<SeedType> types = realized_types(r_pre, view, true);
    std::vector<VSet> pools;
    for (auto& t : types)
        pools.push_back(tilde_boundary_of_type(r_pre, view, t.members));

    struct Pair {
        std::size_t a, b;
        int i, j, k;
    };
    std::vector<Pair> pairs;
    for (std::size_t a = 0; a < types.size(); ++a)
        for (std::size_t b = a + 1; b < types.size(); ++b) {
            if (types[a].color == types[b].color)
                continue;
            pairs.push_back(Pair{a, b, types[a].color, types[b].color,
                                 6 - types[a].color - types[b].color});
        }

    std::vector<std::vector<GuessOpt>> options(pairs.size());
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        const Pair& pr = pairs[pi];
        if (!z_big[pr.k]) {
            options[pi].push_back(GuessOpt{false, {}, {}});
            continue;
        }
        VSet pool = vset::unite(pools[pr.a], pools[pr.b]);
        for_each_subset_up_to(pool, f_b, [&](const VSet& x) {
            options[pi].push_back(GuessOpt{false, x, {}});
            return true;
        });
        if (b_cap >= 1 && b_cap <= view.tilde_w.size()) {
            auto cands = two_class_candidates(r_pre.g, pools[pr.a], pools[pr.b], view.tilde_w);
            for_each_flock(r_pre.g, cands, int(b_cap), [&](const Flock& f) {
                options[pi].push_back(GuessOpt{true, {}, f});
                return true;
            });
        }
    }

    auto pick_is_small = [&](const std::vector<std::size_t>& pick, std::size_t a,
                             std::size_t b) {
        for (std::size_t pi = 0; pi < pairs.size(); ++pi)
            if ((pairs[pi].a == a && pairs[pi].b == b) ||
                (pairs[pi].a == b && pairs[pi].b == a))
                return !options[pi][pick[pi]].big;
        return true;
    };

    std::vector<std::size_t> pick(pairs.size(), 0);
    for (;;) {
        ctx.charge();
        Coloring forced;
        VSet moved;
        bool ok = true;
        for (std::size_t pi = 0; pi < pairs.size() && ok; ++pi) {
            const Pair& pr = pairs[pi];
            const GuessOpt& o = options[pi][pick[pi]];
            if (!o.big) {
                for (int v : o.small) {
                    if (!merge_forced(forced, v, pr.k)) {
                        ok = false;
                        break;
                    }
                    moved.push_back(v);
                }
            } else {
                for (auto& s : o.flock) {
                    if (!merge_forced(forced, s.wing1, pr.k) ||
                        !merge_forced(forced, s.wing2, pr.k)) {
                        ok = false;
                        break;
                    }
                    for (int v : s.vertices())
                        moved.push_back(v);
                }
            }
        }
        if (ok) {
            moved = vset::normalized(moved);
            bool keep = for_each_consistent_coloring(
                r_pre.g, r_pre.lists, moved, forced, [&](const Coloring& c) {
                    ctx.charge();
                    auto p2 = move_to_seed(r_pre, moved, c, "s3:C");
                    if (!p2)
                        return true;
                    BoundaryView after = boundary_view(*p2);
                    ListAssignment l2 = p2->lists;
                    bool changed = false;
                    // the paper's two type-triple surgeries, evaluated on the
                    // post-move snapshot with the classes of the layer input
                    for (std::size_t ta = 0; ta < types.size(); ++ta)
                        for (std::size_t tb = 0; tb < types.size(); ++tb)
                            for (std::size_t tc = 0; tc < types.size(); ++tc) {
                                if (ta == tb || ta == tc || tb == tc)
                                    continue;
                                int ci = types[ta].color, cj = types[tb].color,
                                    ck = types[tc].color;
                                if (ci == cj || ci == ck || cj == ck)
                                    continue;
                                bool ij_small = pick_is_small(pick, ta, tb);
                                bool ik_small = pick_is_small(pick, ta, tc);
                                for (int w : after.tilde_w) {
                                    if (!mask::has(l2.get(w), ci))
                                        continue;
                                    if (!in_seagull_with_wings(p2->g, w, pools[ta], pools[tb]))
                                        continue;
                                    bool fire = false;
                                    if (ij_small && ik_small &&
                                        in_seagull_with_wings(p2->g, w, pools[ta], pools[tc]))
                                        fire = true;
                                    if (!fire && ij_small) {
                                        VSet ni = vset::intersect(p2->g.neighbors(w), pools[ta]);
                                        VSet nk = vset::intersect(p2->g.neighbors(w), pools[tc]);
                                        if (!nk.empty()) {
                                            bool complete = true;
                                            for (int u : ni)
                                                for (int v2 : nk)
                                                    if (!p2->g.adjacent(u, v2))
                                                        complete = false;
                                            if (complete)
                                                fire = true;
                                        }
                                    }
                                    if (fire) {
                                        l2.set(w, std::uint8_t(l2.get(w) & ~mask::of(ci)));
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
                    ctx.trace_line("stage3", "C", out);
                    return emit(out);
                });
            if (!keep)
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

// ---- terminal construction -------------------------------------------------

bool terminal(StageContext& ctx, const SeededPrecoloring& d,
              const std::function<bool(const AugmentedPrecoloring&)>& visit)
{
    BoundaryView view = boundary_view(d);
    AugmentedPrecoloring aug;
    aug.full = d;

    if (view.tilde_w.empty()) {
        aug.reduced = d;
        ctx.stats.stage3_members++;
        ctx.trace_line("stage3", "member", d);
        return visit(aug);
    }

    VSet w1, w2, w3;
    std::vector<std::pair<int, VSet>> groups; // (w, N(w) cap B_{ij})
    for (int w : view.tilde_w) {
        int classes = 0;
        std::vector<VSet> sets;
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) {
                VSet nb = vset::intersect(d.g.neighbors(w), view.by_pair[i][j]);
                if (!nb.empty()) {
                    ++classes;
                    sets.push_back(nb);
                }
            }
        if (classes >= 3) {
            w3.push_back(w);
        } else if (classes == 2) {
            w2.push_back(w);
            for (auto& s : sets)
                groups.emplace_back(w, s);
        } else {
            w1.push_back(w);
        }
    }

    if (!w3.empty()) {
        // no extension can exist on this branch; emit the emptied marker
        SeededPrecoloring marker = d;
        ListAssignment l2 = marker.lists;
        for (int v : marker.g.vertices())
            if (!vset::contains(marker.seed, v))
                l2.set(v, 0);
        marker.lists = std::move(l2);
        marker.note = "s3:infeasible-marker";
        aug.reduced = marker;
        aug.full = marker;
        ctx.stats.stage3_members++;
        ctx.trace_line("stage3", "marker", marker);
        return visit(aug);
    }

    VSet removed = vset::unite(w1, w2);
    Graph g2 = d.g.without(removed);
    SeededPrecoloring reduced{g2, d.lists.restricted_to(g2), d.seed, d.r, "s3:member"};
    aug.reduced = std::move(reduced);
    aug.removed_w1 = w1;
    aug.removed_w2 = w2;
    for (auto& [w, s] : groups)
        aug.mono.groups.push_back(s);
    ctx.stats.stage3_members++;
    ctx.trace_line("stage3", "member", aug.reduced);
    return visit(aug);
}

} // namespace

bool AugmentedPrecoloring::is_tractable() const
{
    for (int v : reduced.g.vertices())
        if (reduced.lists.list_size(v) > 2)
            return false;
    return true;
}

bool stable_to_tractable(StageContext& ctx, const SeededPrecoloring& p,
                         const std::function<bool(const AugmentedPrecoloring&)>& visit)
{
    return layer_r(ctx, p, [&](const SeededPrecoloring& q) {
        return layer_s(ctx, q, [&](const SeededPrecoloring& s, const bool* z_big) {
            bool zb[4] = {z_big[0], z_big[1], z_big[2], z_big[3]};
            return layer_t(ctx, s, [&](const SeededPrecoloring& r) {
                return layer_c(ctx, r, zb, [&](const SeededPrecoloring& d2) {
                    return terminal(ctx, d2, visit);
                });
            });
        });
    });
}

Coloring extend_from_augmented(const AugmentedPrecoloring& a, const Coloring& c)
{
    Coloring out = c;
    for (int w : vset::unite(a.removed_w1, a.removed_w2)) {
        std::uint8_t free = a.full.lists.get(w);
        for (int u : a.full.g.neighbors(w)) {
            auto it = out.find(u);
            if (it != out.end())
                free &= std::uint8_t(~mask::of(it->second));
        }
        if (free == 0)
            throw std::logic_error("extend_from_augmented: no free color (stage bug)");
        out[w] = mask::colors(free)[0];
    }
    for (auto [u, v] : a.full.g.edges())
        if (out.count(u) && out.count(v) && out.at(u) == out.at(v))
            throw std::logic_error("extend_from_augmented: improper extension (stage bug)");
    return out;
}

} // namespace gcol
