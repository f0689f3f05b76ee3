#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "fracolor/builtins.hpp"
#include "fracolor/construct.hpp"
#include "fracolor/fracpow.hpp"
#include "fracolor/oracle.hpp"

using namespace fracolor;

namespace {

// Re-verify a result independently of the constructor's own check.
void check_result(const Graph& g, int m, int n, const ConstructResult& r,
                  int max_colors = -1) {
    REQUIRE(r.ok);
    FracPowGraph fp(g, m, n);
    REQUIRE(r.coloring.size() == fp.num_vertices());
    auto viol = verify_coloring(fp, r.coloring);
    if (viol.has_value()) FAIL("violation: " << viol->describe(fp));
    CHECK(r.omega == omega_of(g, m));
    CHECK(r.colors_used == r.coloring.palette_size());
    CHECK(r.colors_used >= r.omega);
    if (max_colors >= 0) CHECK(r.colors_used <= max_colors);
    CHECK(r.optimal == (r.colors_used == r.omega));
}

}  // namespace

TEST_SUITE("construct") {

TEST_CASE("reduction window, frozen values") {
    CHECK(reduced_n(3, 5) == 5);      // already in window
    CHECK(reduced_n(3, 7) == 7);
    CHECK(reduced_n(3, 8) == 4);      // 8 mod 4 == 0 -> m+1
    CHECK(reduced_n(3, 9) == 5);
    CHECK(reduced_n(3, 12) == 4);
    CHECK(reduced_n(3, 13) == 5);
    CHECK(reduced_n(2, 9) == 3);
    CHECK(reduced_n(2, 10) == 4);
    CHECK(reduced_n(2, 11) == 5);
    CHECK(reduced_n(5, 23) == 11);    // 23 mod 6 == 5 -> 6+5
    CHECK(reduced_n(4, 9) == 9);      // 9 <= 2m+1 stays
    CHECK(reduced_n(4, 10) == 5);     // 10 mod 5 == 0 -> m+1
}

TEST_CASE("extension preserves properness and palette") {
    Graph g = prism_graph();
    ConstructResult base = color_even_cubic(g, 2, 4);
    check_result(g, 2, 4, base, 4);
    VertexColoring up = extend_coloring(g, 2, 4, base.coloring);
    FracPowGraph fp7(g, 2, 7);
    CHECK(up.size() == fp7.num_vertices());
    CHECK(!verify_coloring(fp7, up).has_value());
    CHECK(up.palette() == base.coloring.palette());
    // And once more: 7 -> 10.
    VertexColoring up2 = extend_coloring(g, 2, 7, up);
    FracPowGraph fp10(g, 2, 10);
    CHECK(!verify_coloring(fp10, up2).has_value());
    CHECK(up2.palette() == base.coloring.palette());
}

TEST_CASE("even m, high degree: clique-many colors") {
    for (int n : {4, 5}) {
        ConstructResult r = color_even_highdeg(complete_graph(5), 2, n);
        check_result(complete_graph(5), 2, n, r, 5);
        CHECK(r.colors_used == 5);
    }
    ConstructResult q = color_even_highdeg(hypercube(4), 4, 7);
    check_result(hypercube(4), 4, 7, q, 9);
    CHECK(q.colors_used == 9);
}

TEST_CASE("even m, cubic: both ranges") {
    Graph g = prism_graph();
    // m = 4: first range n in {6, 7}, second range n = 8.
    for (int n : {6, 7, 8}) {
        ConstructResult r = color_even_cubic(g, 4, n);
        check_result(g, 4, n, r, 7);
        CHECK(r.colors_used == 7);
    }
    ConstructResult p = color_even_cubic(petersen_graph(), 4, 6);
    check_result(petersen_graph(), 4, 6, p, 7);
}

TEST_CASE("odd m, degree >= 4: clique plus two") {
    ConstructResult r = color_odd_plus2(builtin_graph("K5-e"), 3, 6);
    check_result(builtin_graph("K5-e"), 3, 6, r, 8);
    ConstructResult c = color_odd_plus2(circulant(9, {1, 2}), 3, 5);
    check_result(circulant(9, {1, 2}), 3, 5, c, 8);
}

TEST_CASE("odd m, second range: clique-many colors") {
    Graph c9 = circulant(9, {1, 2});
    ConstructResult r = color_odd_second_range(c9, 5, 10);
    check_result(c9, 5, 10, r);
    CHECK(r.colors_used == r.omega);
    Graph q4 = hypercube(4);
    ConstructResult s = color_odd_second_range(q4, 5, 10);
    check_result(q4, 5, 10, s);
    CHECK(s.colors_used == s.omega);
    // n = 2m+1 inserts one fresh color.
    ConstructResult t = color_odd_second_range(q4, 5, 11);
    check_result(q4, 5, 11, t);
    CHECK(t.colors_used <= t.omega + 1);
}

TEST_CASE("complete graphs, odd m") {
    for (int r : {5, 6}) {
        for (int n : {5, 6}) {
            ConstructResult res = color_complete(r, 3, n);
            check_result(complete_graph(r), 3, n, res);
            CHECK(res.colors_used == res.omega);
        }
    }
    ConstructResult k45 = color_complete(4, 5, 7);
    check_result(complete_graph(4), 5, 7, k45);
    CHECK(k45.colors_used == 8);
}

TEST_CASE("dispatcher handles the degenerate shapes") {
    // A single edge: powers are paths, m+1 colors.
    ConstructResult path = color_fractional(complete_graph(2), 3, 7);
    check_result(complete_graph(2), 3, 7, path, 4);
    CHECK(path.colors_used == 4);
    // Cycles are excluded.
    CHECK_THROWS_AS((void)color_fractional(cycle_graph(5), 3, 5), GraphError);
    // Disconnected and edgeless inputs are rejected.
    CHECK_THROWS_AS((void)color_fractional(Graph(3), 2, 3), GraphError);
    // Subdivision m = 1.
    ConstructResult sub = color_fractional(petersen_graph(), 1, 3);
    check_result(petersen_graph(), 1, 3, sub, 3);
}

TEST_CASE("dispatcher routes the standard cases") {
    ConstructResult k4 = color_fractional(complete_graph(4), 3, 5);
    check_result(complete_graph(4), 3, 5, k4);
    CHECK(k4.colors_used == 5);
    ConstructResult ev = color_fractional(complete_graph(5), 2, 4);
    check_result(complete_graph(5), 2, 4, ev, 5);
    // Large n reduces to the window and extends back up: 13 -> 4 -> 13.
    ConstructResult big = color_fractional(prism_graph(), 2, 13);
    check_result(prism_graph(), 2, 13, big, 4);
    CHECK(big.method.find("extend") != std::string::npos);
}

TEST_CASE("compatible pair gives clique-many colors when found") {
    Graph g = icosahedron_graph();
    ConstructResult r = color_odd_compatible(g, 3, 5);
    if (r.ok) {
        check_result(g, 3, 5, r);
        CHECK(r.colors_used == r.omega);
    } else {
        CHECK(r.diagnostic.find("hypothesis") != std::string::npos);
    }
}

}  // TEST_SUITE
