#include "doctest.h"

#include <vector>

#include "fracolor/builtins.hpp"
#include "fracolor/oracle.hpp"

using namespace fracolor;

TEST_SUITE("oracle") {

TEST_CASE("clique-size formula, frozen values") {
    CHECK(omega_formula(1, 3) == 4);   // matching, any m: m + 1
    CHECK(omega_formula(1, 7) == 8);
    CHECK(omega_formula(3, 2) == 4);   // even m: (m/2)*Delta + 1
    CHECK(omega_formula(3, 4) == 7);
    CHECK(omega_formula(4, 4) == 9);
    CHECK(omega_formula(5, 2) == 6);
    CHECK(omega_formula(3, 3) == 5);   // odd m: ((m-1)/2)*Delta + 2
    CHECK(omega_formula(3, 5) == 8);
    CHECK(omega_formula(4, 3) == 6);
    CHECK(omega_formula(5, 3) == 7);
    CHECK(omega_of(prism_graph(), 3) == 5);
    CHECK(omega_of(petersen_graph(), 5) == 8);
}

TEST_CASE("verify accepts a proper coloring and rejects a tampered one") {
    FracPowGraph fp(complete_graph(3), 2, 3);
    ColoringSearch s = exact_chromatic(fp, 4);
    REQUIRE(s.verdict == Verdict::Yes);
    REQUIRE(s.coloring.has_value());
    CHECK(!verify_coloring(fp, *s.coloring).has_value());

    VertexColoring bad = *s.coloring;
    // Make the two endpoints of power edge (0, x) collide.
    int x = fp.power_neighbors(0)[0];
    bad.at[x] = bad.at[0];
    auto viol = verify_coloring(fp, bad);
    REQUIRE(viol.has_value());
    CHECK(viol->dist <= 2);
    CHECK(!viol->describe(fp).empty());
}

TEST_CASE("max clique matches the formula on small powers") {
    FracPowGraph a(complete_graph(4), 2, 3);
    CliqueResult ra = max_clique(a);
    CHECK(ra.completed);
    CHECK(ra.size == 4);
    CHECK(ra.members.size() == 4);
    for (size_t i = 0; i < ra.members.size(); ++i)
        for (size_t j = i + 1; j < ra.members.size(); ++j)
            CHECK(a.adjacent(ra.members[i], ra.members[j]));

    FracPowGraph b(prism_graph(), 3, 5);
    CliqueResult rb = max_clique(b);
    CHECK(rb.completed);
    CHECK(rb.size == 5);
}

TEST_CASE("exact chromatic on a squared path") {
    // K2^{2/3} is the square of a path on 4 vertices: chromatic number 3.
    FracPowGraph fp(complete_graph(2), 2, 3);
    ColoringSearch no2 = exact_chromatic(fp, 2);
    CHECK(no2.verdict == Verdict::No);
    CHECK(no2.completed);
    ColoringSearch yes3 = exact_chromatic(fp, 3);
    REQUIRE(yes3.verdict == Verdict::Yes);
    CHECK(!verify_coloring(fp, *yes3.coloring).has_value());
    CHECK(yes3.coloring->palette_size() <= 3);
}

TEST_CASE("search respects the node budget") {
    FracPowGraph fp(petersen_graph(), 3, 5);
    ColoringSearch s = exact_chromatic(fp, 6, 50);
    CHECK(s.verdict == Verdict::Budget);
    CHECK(!s.completed);
    CHECK(s.nodes <= 60);
}

TEST_CASE("crust-merged decision agrees with the raw search") {
    // K4^{3/5} does admit an omega = 5 coloring.
    ColoringSearch merged = decide_omega_odd(complete_graph(4), 3, 5);
    REQUIRE(merged.verdict == Verdict::Yes);
    FracPowGraph fp(complete_graph(4), 3, 5);
    REQUIRE(merged.coloring.has_value());
    CHECK(!verify_coloring(fp, *merged.coloring).has_value());
    CHECK(merged.coloring->palette_size() <= 5);
}

TEST_CASE("plain chromatic gives usable base colorings") {
    PlainColoringSearch s = plain_chromatic(petersen_graph(), 3);
    REQUIRE(s.verdict == Verdict::Yes);
    REQUIRE(s.colors.size() == 10);
    const Graph g = petersen_graph();
    for (auto [u, v] : g.edges()) CHECK(s.colors[u] != s.colors[v]);
    for (int c : s.colors) {
        CHECK(c >= 1);
        CHECK(c <= 3);
    }
    PlainColoringSearch no2 = plain_chromatic(petersen_graph(), 2);
    CHECK(no2.verdict == Verdict::No);
}

}  // TEST_SUITE
