#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cyclab/digraph.hpp"
#include "naive.hpp"

using namespace cyclab;

TEST_CASE("digraph construction and arc bookkeeping") {
    CHECK_THROWS_AS(Digraph(0), std::invalid_argument);

    Digraph d(4);
    d.add_arc(0, 1);
    d.add_arc(1, 2);
    CHECK(d.order() == 4);
    CHECK(d.arc_count() == 2);
    CHECK(d.has_arc(0, 1));
    CHECK_FALSE(d.has_arc(1, 0));

    CHECK_THROWS_AS(d.add_arc(0, 0), std::invalid_argument);  // loop
    CHECK_THROWS_AS(d.add_arc(0, 1), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(d.add_arc(0, 4), std::out_of_range);

    d.freeze();
    CHECK_THROWS_AS(d.add_arc(2, 3), std::logic_error);
    CHECK(d.arc_count() == 2);
}

TEST_CASE("adjacency and degrees") {
    Digraph d(4);
    d.add_arc(0, 1);
    d.add_arc(1, 0);
    d.add_arc(0, 2);
    d.freeze();

    CHECK(d.adjacent(0, 1));
    CHECK(d.adjacent(2, 0));  // one direction suffices
    CHECK_FALSE(d.adjacent(1, 2));
    CHECK_THROWS_AS(d.adjacent(1, 1), std::invalid_argument);

    CHECK(d.out_degree(0) == 2);
    CHECK(d.in_degree(0) == 1);
    CHECK(d.degree(0) == 3);

    Bitset a = Bitset::of(4, {1, 3});
    CHECK(d.out_degree(0, a) == 1);
    CHECK(d.in_degree(0, a) == 1);
    CHECK(d.degree(0, a) == 2);
    CHECK(d.degree(0, a, DegreeMode::Out) == 1);
    CHECK(d.degree(0, a, DegreeMode::In) == 1);
    CHECK(d.degree(0, a, DegreeMode::Total) == 2);
}

TEST_CASE("converse is an involution and swaps degrees") {
    naive::SplitMix64 rng(11);
    for (int t = 0; t < 50; ++t) {
        Digraph d = naive::random_digraph(5, rng);
        Digraph c = d.converse();
        CHECK(c.arc_count() == d.arc_count());
        for (int u = 0; u < 5; ++u) {
            CHECK(c.out_degree(u) == d.in_degree(u));
            CHECK(c.in_degree(u) == d.out_degree(u));
        }
        Digraph cc = c.converse();
        for (auto [u, v] : d.arcs()) CHECK(cc.has_arc(u, v));
        CHECK(cc.arc_count() == d.arc_count());
    }
}

TEST_CASE("induced subdigraph relabels in ascending order") {
    Digraph d(5);
    d.add_arc(1, 3);
    d.add_arc(3, 4);
    d.add_arc(4, 1);
    d.add_arc(0, 1);
    d.freeze();

    auto [sub, to_old] = d.induced(Bitset::of(5, {1, 3, 4}));
    CHECK(sub.order() == 3);
    CHECK(to_old == std::vector<int>{1, 3, 4});
    CHECK(sub.has_arc(0, 1));  // 1 -> 3
    CHECK(sub.has_arc(1, 2));  // 3 -> 4
    CHECK(sub.has_arc(2, 0));  // 4 -> 1
    CHECK(sub.arc_count() == 3);

    CHECK_THROWS_AS(d.induced(Bitset(5)), std::invalid_argument);
    CHECK_THROWS_AS(d.induced(Bitset(4)), std::invalid_argument);
}

TEST_CASE("path validation") {
    Digraph d(4);
    d.add_arc(0, 1);
    d.add_arc(1, 2);
    d.freeze();

    Path p(d, {0, 1, 2});
    CHECK(p.size() == 3);
    CHECK(p.length() == 2);
    CHECK(p.front() == 0);
    CHECK(p.back() == 2);
    CHECK(p.contains(1));
    CHECK_FALSE(p.contains(3));

    CHECK_NOTHROW(Path(d, {3}));  // single vertex is a path
    CHECK_THROWS_AS(Path(d, {}), std::invalid_argument);
    CHECK_THROWS_AS(Path(d, {0, 2}), std::invalid_argument);     // missing arc
    CHECK_THROWS_AS(Path(d, {0, 1, 0}), std::invalid_argument);  // repeat
    CHECK_THROWS_AS(Path(d, {0, 7}), std::out_of_range);
}

TEST_CASE("cycle normalization makes rotations equal") {
    Digraph d(4);
    d.add_arc(0, 1);
    d.add_arc(1, 2);
    d.add_arc(2, 3);
    d.add_arc(3, 0);
    d.freeze();

    Cycle a(d, {0, 1, 2, 3});
    Cycle b(d, {2, 3, 0, 1});
    CHECK(a == b);
    CHECK(a.vertices() == std::vector<int>{0, 1, 2, 3});

    CHECK(a.at(0) == 0);
    CHECK(a.at(5) == 1);
    CHECK(a.at(-1) == 3);
    CHECK(a.index_of(2) == 2);
    CHECK_THROWS_AS(a.index_of(7), std::invalid_argument);
    CHECK(a.successor(3) == 0);
    CHECK(a.predecessor(0) == 3);
    CHECK(a.forward_distance(1, 0) == 3);
    CHECK(a.forward_distance(1, 1) == 0);

    CHECK_THROWS_AS(Cycle(d, {0, 1}), std::invalid_argument);  // no closing arc
    CHECK_THROWS_AS(Cycle(d, {0}), std::invalid_argument);
}

TEST_CASE("two-cycle is the minimum cycle") {
    Digraph d(2);
    d.add_arc(0, 1);
    d.add_arc(1, 0);
    d.freeze();
    Cycle c(d, {1, 0});
    CHECK(c.length() == 2);
    CHECK(c.vertices() == std::vector<int>{0, 1});
}

TEST_CASE("text format round trip") {
    Digraph d(4);
    d.add_arc(0, 1);
    d.add_arc(1, 2);
    d.add_arc(2, 0);
    d.add_arc(2, 3);
    d.add_arc(3, 2);
    d.freeze();
    Bitset y = Bitset::of(4, {0, 2, 3});

    std::ostringstream os;
    write_digraph(os, d, &y, {"fixture"});

    std::istringstream is(os.str());
    DigraphFile f = read_digraph(is);
    CHECK(f.digraph.order() == 4);
    CHECK(f.digraph.arc_count() == 5);
    for (auto [u, v] : d.arcs()) CHECK(f.digraph.has_arc(u, v));
    REQUIRE(f.y.has_value());
    CHECK(*f.y == y);
}

TEST_CASE("parser accepts comments and blank lines") {
    std::istringstream is(
        "# a digraph\n"
        "\n"
        "n 3\n"
        "arc 0 1  # forward\n"
        "arc 1 2\n");
    DigraphFile f = read_digraph(is);
    CHECK(f.digraph.order() == 3);
    CHECK(f.digraph.arc_count() == 2);
    CHECK_FALSE(f.y.has_value());
}

TEST_CASE("parser rejects malformed input with line numbers") {
    auto line_of = [](const std::string& text) {
        std::istringstream is(text);
        try {
            read_digraph(is);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("arc 0 1\n") == 1);                      // arc before n
    CHECK(line_of("n 3\nn 4\n") == 2);                     // duplicate n
    CHECK(line_of("n 3\nedge 0 1\n") == 2);                // unknown keyword
    CHECK(line_of("n 3\narc 0\n") == 2);                   // short arc line
    CHECK(line_of("n 3\narc 0 1 5\n") == 2);               // trailing token
    CHECK(line_of("n 3\nset Y 0 1 junk\n") == 2);          // junk in set
    CHECK(line_of("n 0\n") == 1);                          // bad order
    CHECK(line_of("n 3\nset Z 0\n") == 2);                 // only Y supported
    CHECK(line_of("n 3\nset Y 0\nset Y 1\n") == 3);        // duplicate set
    CHECK(line_of("n 2\narc 0 1\narc 0 1\n") > 0);         // duplicate arc
    CHECK(line_of("n 2\nset Y 5\n") > 0);                  // Y out of range
    CHECK(line_of("") > 0);                                // missing n
}

TEST_CASE("undirected builders and symmetric closure") {
    CHECK(symmetric_closure(complete_graph(4)).arc_count() == 12);
    CHECK(symmetric_closure(edgeless_graph(3)).arc_count() == 0);
    CHECK(symmetric_closure(complete_bipartite(2, 3)).arc_count() == 12);

    auto u = disjoint_union(complete_graph(2), complete_graph(3));
    CHECK(u.n == 5);
    CHECK(u.edges.size() == 4);

    auto j = join(complete_graph(2), complete_graph(2));
    CHECK(j.edges.size() == 6);  // K4
    Digraph k4 = symmetric_closure(j);
    CHECK(k4.arc_count() == 12);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a != b) CHECK(k4.has_arc(a, b));
}
