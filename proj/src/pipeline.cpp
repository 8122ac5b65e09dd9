#include "gcol/pipeline.hpp"

namespace gcol {

std::optional<Coloring> oracle_solve(const Graph& g, const ListAssignment& l)
{
    std::map<int, std::uint8_t> remaining;
    for (int v : g.vertices())
        remaining[v] = l.get(v);

    Coloring c;
    std::function<bool()> rec = [&]() {
        int best = -1, best_count = 4;
        for (auto& [v, m] : remaining) {
            if (c.count(v))
                continue;
            int count = mask::size(m);
            if (count < best_count) {
                best = v;
                best_count = count;
            }
        }
        if (best == -1)
            return true;
        if (best_count == 0)
            return false;
        for (int col : mask::colors(remaining[best])) {
            c[best] = col;
            std::vector<std::pair<int, std::uint8_t>> saved;
            bool dead = false;
            for (int u : g.neighbors(best)) {
                if (c.count(u)) {
                    if (c[u] == col) {
                        dead = true;
                        break;
                    }
                    continue;
                }
                if (mask::has(remaining[u], col)) {
                    saved.emplace_back(u, remaining[u]);
                    remaining[u] &= std::uint8_t(~mask::of(col));
                }
            }
            if (!dead && rec())
                return true;
            for (auto& [u, m] : saved)
                remaining[u] = m;
            c.erase(best);
        }
        return false;
    };
    if (rec())
        return c;
    return std::nullopt;
}

bool verify_coloring(const Graph& g, const ListAssignment& l, const Coloring& c)
{
    for (int v : g.vertices()) {
        auto it = c.find(v);
        if (it == c.end() || !mask::has(l.get(v), it->second))
            return false;
    }
    for (auto [u, v] : g.edges())
        if (c.at(u) == c.at(v))
            return false;
    return true;
}

namespace {

// subsets of size exactly k, smallest-id-first
bool for_each_k_subset(const VSet& pool, int k,
                       const std::function<bool(const VSet&)>& visit)
{
    std::vector<int> idx(k);
    std::function<bool(int, std::size_t)> rec = [&](int d, std::size_t from) {
        if (d == k) {
            VSet s;
            for (int i : idx)
                s.push_back(pool[std::size_t(i)]);
            return visit(s);
        }
        for (std::size_t i = from; i + std::size_t(k - d - 1) < pool.size(); ++i) {
            idx[std::size_t(d)] = int(i);
            if (!rec(d + 1, i + 1))
                return false;
        }
        return true;
    };
    return rec(0, 0);
}

// all proper seed colorings f with f(v) in L(v)
bool for_each_seed_coloring(const Graph& g, const ListAssignment& l, const VSet& seed,
                            const std::function<bool(const Coloring&)>& visit)
{
    Coloring c;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == seed.size())
            return visit(c);
        int v = seed[i];
        for (int col : mask::colors(l.get(v))) {
            bool ok = true;
            for (std::size_t j = 0; j < i; ++j)
                if (g.adjacent(v, seed[j]) && c[seed[j]] == col) {
                    ok = false;
                    break;
                }
            if (ok) {
                c[v] = col;
                if (!rec(i + 1))
                    return false;
            }
        }
        c.erase(v);
        return true;
    };
    return rec(0);
}

// Easy members (and members outside the nice/easy shapes, which capped
// enumeration can produce) go to the exact solver on G minus X^0; this
// substitutes for the P7-free polynomial subroutine of the literature.
std::optional<Coloring> solve_easy_member(const SeededPrecoloring& m)
{
    VSet fixed = x0(m.lists);
    Graph rest = m.g.without(fixed);
    auto partial = oracle_solve(rest, m.lists.restricted_to(rest));
    if (!partial)
        return std::nullopt;
    Coloring full = *partial;
    for (int v : fixed)
        full[v] = mask::only(m.lists.get(v));
    return full;
}

std::optional<Coloring> solve_stable_member(StageContext& ctx, const SeededPrecoloring& stable)
{
    std::optional<Coloring> found;
    stable_to_tractable(ctx, stable, [&](const AugmentedPrecoloring& aug) {
        auto c = solve_with_mono(aug.reduced.g, aug.reduced.lists, aug.mono);
        if (!c)
            return true;
        found = extend_from_augmented(aug, *c);
        return false;
    });
    return found;
}

std::optional<Coloring> solve_nice_member(StageContext& ctx, const SeededPrecoloring& nice)
{
    StableCollection col = nice_to_stable(ctx, nice);
    if (col.infeasible)
        return std::nullopt;
    std::vector<Coloring> per_member;
    for (auto& m : col.members) {
        auto c = solve_stable_member(ctx, m);
        if (!c)
            return std::nullopt; // AND semantics over components
        per_member.push_back(*c);
    }
    return stable_lift(col, per_member);
}

} // namespace

SolveOutcome solve(const Graph& g, const ListAssignment& l, int r, const StageParams& params,
                   const SolveOptions& opts)
{
    if (r < 0)
        throw ContractError("solve: r must be >= 0");
    if (opts.verify_class) {
        if (auto w = find_p6_rp3(g, r)) {
            std::string ids;
            for (int v : w->all_vertices())
                ids += " " + std::to_string(v);
            throw ContractError("solve: graph contains P6+" + std::to_string(r) + "P3:" + ids);
        }
    }

    SolveOutcome out;
    StageContext ctx;
    ctx.params = params;
    ctx.budget = opts.budget;
    ctx.trace = opts.trace;

    try {
        // clique of size four: no 3-coloring at all
        if (auto k4 = g.find_clique4()) {
            out.status = SolveOutcome::Status::Uncolorable;
            out.witness = "clique4";
            out.witness_set = *k4;
            out.stats = ctx.stats;
            return out;
        }

        // small-subset infeasibility scan
        int cap = std::min({4 * r + 8, opts.subset_scan_ceiling, g.num_vertices()});
        for (int k = 1; k <= cap; ++k) {
            std::optional<VSet> bad;
            for_each_k_subset(g.vertices(), k, [&](const VSet& x) {
                Graph sub = g.induced(x);
                if (!oracle_solve(sub, l.restricted_to(sub)))
                    bad = x;
                return !bad.has_value();
            });
            if (bad) {
                out.status = SolveOutcome::Status::Uncolorable;
                out.witness = "subset";
                out.witness_set = *bad;
                out.stats = ctx.stats;
                return out;
            }
        }

        // base case: the exact solver replaces the P7-free subroutine
        if (r == 0) {
            auto c = oracle_solve(g, l);
            if (c) {
                out.status = SolveOutcome::Status::Colorable;
                out.coloring = *c;
            } else {
                out.status = SolveOutcome::Status::Uncolorable;
                out.witness = "exhausted";
            }
            out.stats = ctx.stats;
            return out;
        }

        // seed: any witness of P6+(r-1)P3; if none, G is (P6+(r-1)P3)-free
        // and the problem reduces to the smaller class
        auto witness = find_p6_rp3(g, r - 1);
        if (!witness) {
            SolveOptions rec_opts = opts;
            rec_opts.verify_class = false;
            return solve(g, l, r - 1, params, rec_opts);
        }
        VSet seed = witness->all_vertices();

        std::optional<Coloring> answer;
        for_each_seed_coloring(g, l, seed, [&](const Coloring& f) {
            ctx.stats.seeds_tried++;
            ListAssignment l2 = l;
            for (auto& [v, col] : f)
                l2.set(v, mask::of(col));
            auto built = build_precoloring(g, l2, seed, r, "seed");
            if (!built.pre)
                return true;
            bool keep = general_to_nice_or_easy(ctx, *built.pre, [&](const SeededPrecoloring& m) {
                std::optional<Coloring> c;
                if (is_easy(m))
                    c = solve_easy_member(m);
                else if (is_nice(m))
                    c = solve_nice_member(ctx, m);
                else
                    c = solve_easy_member(m); // outside both shapes: exact fallback
                if (c && verify_coloring(g, l, *c)) {
                    answer = c;
                    return false;
                }
                if (c)
                    throw std::logic_error("solve: stage lift produced an invalid coloring");
                return true;
            });
            return keep;
        });

        out.stats = ctx.stats;
        if (answer) {
            out.status = SolveOutcome::Status::Colorable;
            out.coloring = *answer;
        } else {
            out.status = SolveOutcome::Status::Uncolorable;
            out.witness = "exhausted";
        }
        return out;
    } catch (const BudgetExceeded&) {
        out.status = SolveOutcome::Status::BudgetExceeded;
        out.stats = ctx.stats;
        return out;
    }
}

} // namespace gcol
