#include "doctest.h"
#include "fracolor/builtins.hpp"
#include "fracolor/fracpow.hpp"

using namespace fracolor;

TEST_SUITE("fracpow") {

TEST_CASE("subdivision sizes") {
    Graph s1 = subdivide(complete_graph(4), 3).as_graph();
    CHECK(s1.num_vertices() == 16);  // 4 + 2*6
    CHECK(s1.num_edges() == 18);     // 3*6
    Graph s2 = subdivide(prism_graph(), 5).as_graph();
    CHECK(s2.num_vertices() == 42);  // 6 + 4*9
    CHECK(s2.num_edges() == 45);     // 5*9
}

TEST_CASE("power graph size and structure") {
    FracPowGraph fp(prism_graph(), 3, 5);
    CHECK(fp.num_vertices() == 42);
    Graph pg = fp.as_graph();
    CHECK(pg.num_vertices() == 42);
    CHECK(pg.num_edges() == fp.power_edge_count());
    // frac_power agrees with the incremental view.
    Graph direct = frac_power(prism_graph(), 3, 5).as_graph();
    CHECK(direct.num_edges() == pg.num_edges());
}

TEST_CASE("two-sided indexing of internal vertices") {
    Graph g = prism_graph();
    const int n = 7;
    FracPowGraph fp(g, 3, n);
    for (auto [u, v] : g.edges())
        for (int i = 1; i < n; ++i)
            CHECK(fp.id_internal(u, v, i) == fp.id_internal(v, u, n - i));
}

TEST_CASE("distance along one superedge and through branches") {
    Graph g = prism_graph();
    FracPowGraph fp(g, 3, 6);
    int a = fp.id_internal(0, 1, 2), b = fp.id_internal(0, 1, 5);
    CHECK(fp.dist(a, b) == 3);
    CHECK(fp.adjacent(a, b));
    // Across two superedges sharing branch 0.
    int c = fp.id_internal(0, 2, 1);
    CHECK(fp.dist(fp.id_internal(0, 1, 1), c) == 2);
    // Far middles of different superedges never interact.
    int d = fp.id_internal(1, 4, 3);
    CHECK(fp.dist(fp.id_internal(0, 2, 3), d) > 3);
    CHECK(!fp.adjacent(fp.id_internal(0, 2, 3), d));
}

TEST_CASE("adjacency is distance at most m") {
    FracPowGraph fp(complete_graph(4), 2, 4);
    for (int x = 0; x < fp.num_vertices(); ++x)
        for (int y = x + 1; y < fp.num_vertices(); ++y)
            CHECK(fp.adjacent(x, y) == (fp.dist(x, y) <= 2));
}

TEST_CASE("power degree and neighbors agree") {
    FracPowGraph fp(prism_graph(), 3, 5);
    for (int x = 0; x < fp.num_vertices(); ++x) {
        CHECK(fp.power_degree(x) == static_cast<int>(fp.power_neighbors(x).size()));
    }
}

TEST_CASE("anatomy slices for odd m") {
    Graph g = prism_graph();
    FracPowGraph fp(g, 3, 7);
    Anatomy an(fp);
    CHECK(an.middle_len() == 2);  // n - m - 2
    std::vector<int> bub = an.bubble(0, 1);
    REQUIRE(bub.size() == 1);
    CHECK(bub[0] == fp.id_internal(0, 1, 1));
    CHECK(an.crust_vertex(0, 1) == fp.id_internal(0, 1, 2));
    CHECK(an.crust(0).size() == 3);
    std::vector<int> mu = an.middle(0, 1), mv = an.middle(1, 0);
    REQUIRE(mu.size() == 2);
    CHECK(mu[0] == fp.id_internal(0, 1, 3));
    CHECK(mu[1] == fp.id_internal(0, 1, 4));
    CHECK(mv[0] == fp.id_internal(1, 0, 3));
    CHECK(mv[1] == fp.id_internal(1, 0, 4));
    CHECK(mu[0] == mv[1]);
    CHECK(an.kind(fp.id_branch(0)) == Anatomy::Kind::Branch);
    CHECK(an.kind(bub[0]) == Anatomy::Kind::Bubble);
    CHECK(an.kind(an.crust_vertex(0, 1)) == Anatomy::Kind::Crust);
    CHECK(an.kind(mu[0]) == Anatomy::Kind::Middle);
}

TEST_CASE("anatomy slices for even m") {
    Graph g = complete_graph(4);
    FracPowGraph fp(g, 4, 6);
    Anatomy an(fp);
    CHECK(an.middle_len() == 1);  // n - m - 1
    CHECK(an.bubble(0, 1).size() == 2);
    CHECK(an.middle(0, 1).size() == 1);
    CHECK(an.middle(0, 1)[0] == fp.id_internal(0, 1, 3));
}

TEST_CASE("vertex names are readable") {
    FracPowGraph fp(prism_graph(), 3, 5);
    CHECK(fp.vertex_name(fp.id_branch(0)) == "v1");
    std::string name = fp.vertex_name(fp.id_internal(0, 1, 1));
    CHECK(name.find("v1") != std::string::npos);
    CHECK(name.find("v2") != std::string::npos);
}

}  // TEST_SUITE
