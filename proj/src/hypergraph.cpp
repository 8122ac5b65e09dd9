#include "gcol/hypergraph.hpp"

namespace gcol {

Hypergraph::Hypergraph(VSet vertices, std::vector<VSet> hyperedges)
    : verts_(vset::normalized(std::move(vertices)))
{
    for (auto& e : hyperedges) {
        VSet en = vset::normalized(e);
        if (en.empty())
            throw ContractError("hyperedge must be non-empty");
        if (!vset::subset(en, verts_))
            throw ContractError("hyperedge not contained in vertex set");
        edges_.push_back(std::move(en));
    }
}

namespace {

int nu_rec(const std::vector<VSet>& edges, std::size_t idx, const VSet& used)
{
    int best = 0;
    for (std::size_t i = idx; i < edges.size(); ++i) {
        if (!vset::disjoint(edges[i], used))
            continue;
        best = std::max(best, 1 + nu_rec(edges, i + 1, vset::unite(used, edges[i])));
    }
    return best;
}

bool tau_rec(const std::vector<VSet>& edges, VSet& chosen, int k)
{
    const VSet* unhit = nullptr;
    for (auto& e : edges) {
        if (vset::disjoint(e, chosen)) {
            unhit = &e;
            break;
        }
    }
    if (!unhit)
        return true;
    if (k == 0)
        return false;
    for (int v : *unhit) {
        vset::insert(chosen, v);
        if (tau_rec(edges, chosen, k - 1))
            return true;
        chosen.erase(std::lower_bound(chosen.begin(), chosen.end(), v));
    }
    return false;
}

} // namespace

int nu(const Hypergraph& h) { return nu_rec(h.hyperedges(), 0, {}); }

namespace {

bool matching_of_size(const std::vector<VSet>& edges, int m, std::size_t from, const VSet& used,
                      std::vector<int>& pick)
{
    if (int(pick.size()) == m)
        return true;
    for (std::size_t i = from; i < edges.size(); ++i) {
        if (!vset::disjoint(edges[i], used))
            continue;
        pick.push_back(int(i));
        if (matching_of_size(edges, m, i + 1, vset::unite(used, edges[i]), pick))
            return true;
        pick.pop_back();
    }
    return false;
}

} // namespace

std::vector<int> nu_witness(const Hypergraph& h, int m)
{
    std::vector<int> pick;
    if (matching_of_size(h.hyperedges(), m, 0, {}, pick))
        return pick;
    return {};
}

VSet tau_witness(const Hypergraph& h)
{
    for (int k = 0; k <= int(h.vertices().size()); ++k) {
        VSet chosen;
        if (tau_rec(h.hyperedges(), chosen, k))
            return vset::normalized(chosen);
    }
    throw ContractError("tau: no hitting set found"); // unreachable
}

int tau(const Hypergraph& h) { return int(tau_witness(h).size()); }

namespace {

// Checks whether the chosen edge indexes admit pairwise private witnesses.
bool lambda_family_ok(const Hypergraph& h, const std::vector<int>& pick)
{
    int k = int(pick.size());
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            bool found = false;
            for (int v : vset::intersect(h.hyperedges()[pick[i]], h.hyperedges()[pick[j]])) {
                bool elsewhere = false;
                for (int hh = 0; hh < k && !elsewhere; ++hh)
                    if (hh != i && hh != j && vset::contains(h.hyperedges()[pick[hh]], v))
                        elsewhere = true;
                if (!elsewhere) {
                    found = true;
                    break;
                }
            }
            if (!found)
                return false;
        }
    }
    return true;
}

bool lambda_search(const Hypergraph& h, int k, std::vector<int>& pick, int from)
{
    if (int(pick.size()) == k)
        return lambda_family_ok(h, pick);
    for (int i = from; i < int(h.hyperedges().size()); ++i) {
        pick.push_back(i);
        if (lambda_search(h, k, pick, i + 1))
            return true;
        pick.pop_back();
    }
    return false;
}

} // namespace

int lambda(const Hypergraph& h)
{
    int m = int(h.hyperedges().size());
    int n = int(h.vertices().size());
    // k(k-1)/2 pairwise private vertices are needed
    int kmax = m;
    while (kmax > 2 && kmax * (kmax - 1) / 2 > n)
        --kmax;
    for (int k = kmax; k >= 3; --k) {
        std::vector<int> pick;
        if (lambda_search(h, k, pick, 0))
            return k;
    }
    return 2;
}

BigInt binomial(unsigned long n, unsigned long k)
{
    if (k > n)
        return 0;
    BigInt out = 1;
    for (unsigned long i = 0; i < k; ++i) {
        out *= BigInt(n - i);
        out /= BigInt(i + 1);
    }
    return out;
}

BigInt tau_bound(unsigned long lam, unsigned long nu)
{
    if (lam < 2)
        throw ContractError("tau_bound: lambda must be >= 2");
    BigInt l = lam, v = nu;
    BigInt b = binomial(lam + nu, nu);
    return 11 * l * l * (l + v + 3) * b * b;
}

BigInt lambda_bound(unsigned long p, unsigned long q, unsigned long t)
{
    if (q < 1 || q > p || t < 1)
        throw ContractError("lambda_bound: need 1 <= q <= p and t >= 1");
    return binomial(p, q) * BigInt((t + 2) / 2); // ceil((t+1)/2)
}

BigInt f_rpq(unsigned long r, unsigned long p, unsigned long q, unsigned long nu)
{
    if (q < 1 || q > p)
        throw ContractError("f_rpq: need 1 <= q <= p");
    BigInt cb = binomial(p, q) * BigInt(2 * r + 4);
    if (cb > BigInt(1000000000))
        throw ContractError("f_rpq: C parameter too large");
    unsigned long c = cb.convert_to<unsigned long>();
    BigInt b = 1; // C(c+nu, c): iterate over the small argument
    for (unsigned long i = 1; i <= c; ++i) {
        b *= BigInt(nu) + i;
        b /= BigInt(i);
    }
    return 11 * cb * cb * (cb + nu + 3) * b * b;
}

namespace {

void connected_subsets(const Graph& g, const VSet& y, int q, VSet& cur,
                       const std::function<void(const VSet&)>& emit, std::size_t min_next)
{
    if (int(cur.size()) == q) {
        if (g.is_connected(cur))
            emit(cur);
        return;
    }
    for (std::size_t i = min_next; i < y.size(); ++i) {
        cur.push_back(y[i]);
        connected_subsets(g, y, q, cur, emit, i + 1);
        cur.pop_back();
    }
}

} // namespace

Hypergraph attachment_hypergraph(const Graph& g, const VSet& x, const VSet& y, int q)
{
    if (!g.is_stable_set(x))
        throw ContractError("attachment_hypergraph: x must be stable");
    if (!vset::disjoint(x, y))
        throw ContractError("attachment_hypergraph: x and y must be disjoint");
    std::vector<VSet> edges;
    VSet cur;
    connected_subsets(g, vset::normalized(y), q, cur,
                      [&](const VSet& z) {
                          VSet att = g.attachments(z, x);
                          if (!att.empty())
                              edges.push_back(att);
                      },
                      0);
    // hyperedges form a set: distinct Z with equal attachments collapse
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Hypergraph(x, std::move(edges));
}

std::uint64_t to_capped_u64(const BigInt& value, std::uint64_t cap)
{
    BigInt c = cap;
    BigInt m = value < c ? value : c;
    return m.convert_to<std::uint64_t>();
}

} // namespace gcol
