#include "gcol/io.hpp"

#include <array>
#include <istream>
#include <ostream>
#include <sstream>

namespace gcol {

namespace {

[[noreturn]] void fail(int line, const std::string& msg)
{
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

} // namespace

Graph parse_dimacs(std::istream& in)
{
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (tag == "p") {
            std::string kind;
            iss >> kind >> n >> m;
            if (!iss || kind != "edge" || n < 0 || m < 0)
                fail(ln, "expected `p edge <n> <m>`");
        } else if (tag == "e") {
            if (n < 0)
                fail(ln, "edge before header");
            int u, v;
            iss >> u >> v;
            if (!iss || u < 1 || v < 1 || u > n || v > n)
                fail(ln, "bad edge");
            edges.emplace_back(u - 1, v - 1);
        } else {
            fail(ln, "unknown line type `" + tag + "`");
        }
    }
    if (n < 0)
        fail(ln, "missing `p edge` header");
    VSet verts;
    for (int i = 0; i < n; ++i)
        verts.push_back(i);
    return Graph(std::move(verts), std::move(edges));
}

void write_dimacs(std::ostream& out, const Graph& g)
{
    // canonical output assumes the standard 0..n-1 id range
    int n = g.num_vertices() == 0 ? 0 : g.max_id() + 1;
    out << "p edge " << n << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

ListAssignment parse_lists(std::istream& in, const Graph& g)
{
    ListAssignment l = ListAssignment::full(g);
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (tag != "l")
            fail(ln, "expected `l <vertex> <colors...>`");
        int v;
        iss >> v;
        if (!iss || !g.has_vertex(v - 1))
            fail(ln, "bad vertex in list line");
        std::vector<int> cs;
        int c;
        while (iss >> c) {
            if (c < 1 || c > 3)
                fail(ln, "color out of range");
            cs.push_back(c);
        }
        if (cs.empty() || cs.size() > 3)
            fail(ln, "need 1..3 colors");
        l.set(v - 1, mask::from_colors(cs));
    }
    return l;
}

void write_lists(std::ostream& out, const ListAssignment& l)
{
    for (auto& [v, m] : l.entries()) {
        if (m == mask::ALL)
            continue;
        out << "l " << v + 1;
        for (int c : mask::colors(m))
            out << ' ' << c;
        out << '\n';
    }
}

CnfInstance parse_cnf(std::istream& in)
{
    CnfInstance f;
    int m = -1;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream iss(line);
        if (line[0] == 'p') {
            std::string tag, kind;
            iss >> tag >> kind >> f.n_vars >> m;
            if (!iss || kind != "cnf" || f.n_vars < 0 || m < 0)
                fail(ln, "expected `p cnf <n> <m>`");
            continue;
        }
        if (m < 0)
            fail(ln, "clause before header");
        std::vector<int> lits;
        int lit;
        while (iss >> lit && lit != 0)
            lits.push_back(lit);
        if (lits.size() != 3)
            fail(ln, "clause must have exactly 3 literals");
        std::array<int, 3> cl;
        for (int i = 0; i < 3; ++i) {
            int var = std::abs(lits[i]);
            if (var < 1 || var > f.n_vars)
                fail(ln, "literal out of range");
            cl[i] = lits[i];
        }
        f.clauses.push_back(cl);
    }
    if (m < 0)
        fail(ln, "missing `p cnf` header");
    if (int(f.clauses.size()) != m)
        throw ParseError("clause count disagrees with header");
    return f;
}

void write_cnf(std::ostream& out, const CnfInstance& f)
{
    out << "p cnf " << f.n_vars << ' ' << f.clauses.size() << '\n';
    for (auto& cl : f.clauses)
        out << cl[0] << ' ' << cl[1] << ' ' << cl[2] << " 0\n";
}

Coloring parse_coloring(std::istream& in)
{
    Coloring c;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream iss(line);
        std::string tag;
        int v, col;
        iss >> tag >> v >> col;
        if (!iss || tag != "v" || v < 1)
            fail(ln, "expected `v <vertex> <color>`");
        c[v - 1] = col;
    }
    return c;
}

void write_coloring(std::ostream& out, const Coloring& c)
{
    for (auto& [v, col] : c)
        out << "v " << v + 1 << ' ' << col << '\n';
}

Hypergraph parse_hypergraph(std::istream& in)
{
    std::vector<VSet> edges;
    VSet verts;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream iss(line);
        VSet e;
        int v;
        while (iss >> v)
            e.push_back(v);
        if (e.empty())
            fail(ln, "empty hyperedge");
        for (int u : e)
            verts.push_back(u);
        edges.push_back(vset::normalized(e));
    }
    return Hypergraph(vset::normalized(verts), std::move(edges));
}

} // namespace gcol
