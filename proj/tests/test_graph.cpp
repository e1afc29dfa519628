#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "raag/graph.hpp"

using namespace raag;

TEST_CASE("load_graph accepts the triangle-with-leaves graph") {
    DefiningGraph g = fixtures::triangle_with_leaves();
    CHECK(g.n() == 5);
    CHECK(g.edges.size() == 5);
    CHECK(g.adjacent(g.vertex("q"), g.vertex("r")));
    CHECK_FALSE(g.adjacent(g.vertex("p"), g.vertex("s")));
}

TEST_CASE("load_graph smallest graph and comments") {
    DefiningGraph g = load_graph("# comment\n\nvertices: a\n");
    CHECK(g.n() == 1);
    CHECK(g.edges.empty());
}

TEST_CASE("load_graph rejects malformed input") {
    CHECK_THROWS_AS(load_graph("vertices: a\nedge: a a\n"), ParseError); // loop
    CHECK_THROWS_AS(load_graph("vertices: a a\n"), ParseError);          // duplicate
    CHECK_THROWS_AS(load_graph("vertices: a\nedge: a b\n"), ParseError); // unknown endpoint
    CHECK_THROWS_AS(load_graph("vertices: a\nfoo\n"), ParseError);       // malformed line
    CHECK_THROWS_AS(load_graph("vertices:\n"), ParseError);              // empty graph
    CHECK_THROWS_AS(load_graph("vertices: a^b\n"), ParseError);          // bad name
    CHECK_THROWS_AS(load_graph("edge: a b\n"), ParseError);              // missing vertices
    try {
        load_graph("vertices: a b\nedge: a c\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("duplicate edges collapse") {
    DefiningGraph g = load_graph("vertices: a b\nedge: a b\nedge: b a\n");
    CHECK(g.edges.size() == 1);
}

TEST_CASE("link and star") {
    DefiningGraph g = fixtures::triangle_with_leaves();
    CHECK(link(g, g.vertex("v")) == std::vector<int>{g.vertex("q"), g.vertex("r")});
    CHECK(star(g, g.vertex("p")) == std::vector<int>{g.vertex("p"), g.vertex("q")});
    CHECK_THROWS_AS(link(g, 99), DomainError);

    DefiningGraph e3 = fixtures::edgeless(3);
    CHECK(link(e3, 0).empty());

    DefiningGraph k3 = fixtures::complete(3);
    CHECK(link(k3, 0) == std::vector<int>{1, 2});
}

TEST_CASE("order_report on the triangle-with-leaves graph") {
    DefiningGraph g = fixtures::triangle_with_leaves();
    OrderReport r = order_report(g);
    int p = g.vertex("p"), q = g.vertex("q"), rr = g.vertex("r"), s = g.vertex("s"),
        v = g.vertex("v");
    CHECK(r.principal == (vert_bit(q) | vert_bit(rr) | vert_bit(v)));
    CHECK(r.maximal == (vert_bit(q) | vert_bit(rr)));
    CHECK(r.is_principal(v));
    CHECK_FALSE(r.is_maximal(v));
    // v <= q but not conversely
    CHECK(((r.leq[v] >> q) & 1) == 1);
    CHECK(((r.leq[q] >> v) & 1) == 0);
    // brute-force check of leq against the definition
    for (int a = 0; a < g.n(); ++a)
        for (int b = 0; b < g.n(); ++b) {
            bool expect = (g.link_mask(a) & ~g.star_mask(b)) == 0;
            CHECK(((r.leq[a] >> b) & 1) == (expect ? 1 : 0));
        }
    CHECK(((r.strictLink[p] >> rr) & 1) == 1); // lk(p) = {q} strictly inside lk(r)
    CHECK(r.classes.size() == 5);              // all classes singletons
}

TEST_CASE("order_report on complete and edgeless graphs") {
    DefiningGraph k4 = fixtures::complete(4);
    OrderReport rk = order_report(k4);
    CHECK(rk.principal == 0xF);
    CHECK(rk.maximal == 0xF);
    CHECK(rk.classes.size() == 1);

    DefiningGraph e4 = fixtures::edgeless(4);
    OrderReport re = order_report(e4);
    CHECK(re.principal == 0xF);
    CHECK(re.maximal == 0xF);
    CHECK(re.classes.size() == 1);
}

TEST_CASE("order-theory invariants on small graphs") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : oracles::graphs_up_to_iso(n, false)) {
            OrderReport r = order_report(g);
            CHECK((r.maximal & ~r.principal) == 0); // maximal implies principal
            for (int v = 0; v < g.n(); ++v) {
                CHECK(((g.link_mask(v) >> v) & 1) == 0);
                CHECK(g.star_mask(v) == (g.link_mask(v) | vert_bit(v)));
                // strict link domination implies domination
                CHECK((r.strictLink[v] & ~r.leq[v]) == 0);
            }
        }
}

TEST_CASE("components_outside_star on the path-plus-isolated graph") {
    DefiningGraph g = fixtures::path_plus_isolated();
    auto litOf = [&](const char* name, bool pos) { return make_lit(g.vertex(name), pos); };

    auto compsA = components_outside_star(g, g.vertex("a"));
    REQUIRE(compsA.size() == 3);
    LitMask cd = lit_bit(litOf("c", true)) | lit_bit(litOf("c", false)) |
                 lit_bit(litOf("d", true)) | lit_bit(litOf("d", false));
    CHECK(compsA[0] == cd);
    CHECK(compsA[1] == lit_bit(litOf("e", false)));
    CHECK(compsA[2] == lit_bit(litOf("e", true)));

    auto compsB = components_outside_star(g, g.vertex("b"));
    CHECK(compsB.size() == 4); // {d^-1} {d} {e^-1} {e}

    DefiningGraph k3 = fixtures::complete(3);
    CHECK(components_outside_star(k3, 0).empty());
}

TEST_CASE("components_outside_star agrees with the flood-fill oracle") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : oracles::graphs_up_to_iso(n, false))
            for (int m = 0; m < g.n(); ++m)
                CHECK(components_outside_star(g, m) == oracles::brute_components_outside_star(g, m));
}

TEST_CASE("literal adjacency is symmetric, irreflexive, never inverse-linked") {
    DefiningGraph g = fixtures::triangle_with_leaves();
    for (Lit x = 0; x < 2 * g.n(); ++x) {
        CHECK_FALSE(g.lits_adjacent(x, x));
        CHECK_FALSE(g.lits_adjacent(x, lit_inverse(x)));
        for (Lit y = 0; y < 2 * g.n(); ++y) CHECK(g.lits_adjacent(x, y) == g.lits_adjacent(y, x));
    }
}
