#include <doctest.h>

#include <sstream>

#include "gcol/io.hpp"

using namespace gcol;

TEST_CASE("graph round trip is byte-stable on canonical output")
{
    std::string text = "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n";
    std::istringstream in(text);
    Graph g = parse_dimacs(in);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 3);
    std::ostringstream out;
    write_dimacs(out, g);
    CHECK(out.str() == text);

    std::istringstream in2(out.str());
    Graph g2 = parse_dimacs(in2);
    CHECK(g2.edges() == g.edges());
}

TEST_CASE("graph parse errors carry line numbers")
{
    std::istringstream bad("p edge 2 1\ne 1 5\n");
    CHECK_THROWS_WITH_AS(parse_dimacs(bad), doctest::Contains("line 2"), ParseError);
    std::istringstream noheader("e 1 2\n");
    CHECK_THROWS_AS(parse_dimacs(noheader), ParseError);
    std::istringstream junk("q foo\n");
    CHECK_THROWS_AS(parse_dimacs(junk), ParseError);
}

TEST_CASE("list files")
{
    std::istringstream gin("p edge 3 2\ne 1 2\ne 2 3\n");
    Graph g = parse_dimacs(gin);
    std::istringstream lin("c comment\nl 1 1\nl 2 1 2\n");
    ListAssignment l = parse_lists(lin, g);
    CHECK(l.get(0) == mask::of(1));
    CHECK(l.get(1) == mask::from_colors({1, 2}));
    CHECK(l.get(2) == mask::ALL);

    std::ostringstream out;
    write_lists(out, l);
    CHECK(out.str() == "l 1 1\nl 2 1 2\n");

    std::istringstream bad("l 9 1\n");
    CHECK_THROWS_AS(parse_lists(bad, g), ParseError);
    std::istringstream bad2("l 1 4\n");
    CHECK_THROWS_AS(parse_lists(bad2, g), ParseError);
}

TEST_CASE("cnf round trip")
{
    std::string text = "p cnf 3 2\n1 -2 3 0\n-1 -1 2 0\n";
    std::istringstream in(text);
    CnfInstance f = parse_cnf(in);
    CHECK(f.n_vars == 3);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0] == std::array<int, 3>{1, -2, 3});

    std::ostringstream out;
    write_cnf(out, f);
    CHECK(out.str() == text);

    std::istringstream bad("p cnf 2 1\n1 2 0\n");
    CHECK_THROWS_AS(parse_cnf(bad), ParseError); // needs exactly 3 literals
    std::istringstream bad2("p cnf 1 1\n1 1 2 0\n");
    CHECK_THROWS_AS(parse_cnf(bad2), ParseError); // literal out of range
}

TEST_CASE("coloring files")
{
    std::istringstream in("v 1 2\nv 2 3\n");
    Coloring c = parse_coloring(in);
    CHECK(c.at(0) == 2);
    CHECK(c.at(1) == 3);
    std::ostringstream out;
    write_coloring(out, c);
    CHECK(out.str() == "v 1 2\nv 2 3\n");
}

TEST_CASE("hypergraph text format")
{
    std::istringstream in("1 2 3\n2 4\nc comment\n");
    Hypergraph h = parse_hypergraph(in);
    CHECK(h.vertices() == VSet{1, 2, 3, 4});
    REQUIRE(h.hyperedges().size() == 2);
    CHECK(h.hyperedges()[0] == VSet{1, 2, 3});
}
