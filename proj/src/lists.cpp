#include "gcol/lists.hpp"

namespace gcol {

ListAssignment ListAssignment::full(const Graph& g)
{
    ListAssignment l;
    for (int v : g.vertices())
        l.lists_[v] = mask::ALL;
    return l;
}

std::uint8_t ListAssignment::get(int v) const
{
    auto it = lists_.find(v);
    if (it == lists_.end())
        throw ContractError("no list entry for vertex " + std::to_string(v));
    return it->second;
}

void ListAssignment::set(int v, std::uint8_t m)
{
    if (m > mask::ALL)
        throw ContractError("list mask out of range");
    lists_[v] = m;
}

bool ListAssignment::covers(const Graph& g) const
{
    for (int v : g.vertices())
        if (!lists_.count(v))
            return false;
    return true;
}

ListAssignment ListAssignment::restricted_to(const Graph& g) const
{
    ListAssignment out;
    for (int v : g.vertices())
        out.lists_[v] = get(v);
    return out;
}

bool ListAssignment::has_empty() const
{
    for (auto& [v, m] : lists_)
        if (m == 0)
            return true;
    return false;
}

VSet x0(const ListAssignment& l)
{
    VSet out;
    for (auto& [v, m] : l.entries())
        if (mask::size(m) == 1)
            out.push_back(v);
    return out;
}

ListAssignment update_from(const Graph& g, const ListAssignment& l, const VSet& x, const VSet& y)
{
    for (int v : x)
        if (l.list_size(v) != 1)
            throw ContractError("update_from: x must have singleton lists");
    ListAssignment out = l;
    for (int v : y) {
        std::uint8_t m = l.get(v);
        for (int u : g.neighbors(v))
            if (vset::contains(x, u))
                m &= std::uint8_t(~l.get(u));
        out.set(v, m);
    }
    return out;
}

UpdateResult update_exhaustively(const Graph& g, const ListAssignment& l)
{
    ListAssignment cur = l;
    int rounds = 0; // productive rounds; at most 3|V| since sum of list sizes drops each time
    for (;;) {
        ListAssignment next = update_from(g, cur, x0(cur), g.vertices());
        if (next == cur)
            break;
        ++rounds;
        cur = std::move(next);
    }
    return UpdateResult{cur, !cur.has_empty(), rounds};
}

bool assert_convention(const Graph& g, const ListAssignment& l)
{
    for (int v : g.vertices()) {
        std::uint8_t lv = l.get(v);
        for (int u : g.neighbors(v)) {
            std::uint8_t lu = l.get(u);
            if (mask::size(lu) == 1 && (lu & ~lv) == 0)
                return false;
        }
    }
    return true;
}

} // namespace gcol
