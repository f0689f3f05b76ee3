#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fracolor/builtins.hpp"
#include "fracolor/enumerate.hpp"
#include "fracolor/graph.hpp"

using namespace fracolor;

TEST_SUITE("graph") {

TEST_CASE("edge list parsing") {
    ParseReport rep;
    Graph g = parse_graph("a b\nb c\n# comment\na c\na b\n", &rep);
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(rep.duplicate_edges == 1);
    CHECK(rep.comment_lines == 1);
    CHECK(g.label(0) == "a");
    CHECK(g.vertex_by_label("c").value() == 2);
    CHECK(g.is_complete());
}

TEST_CASE("dimacs parsing") {
    Graph g = parse_graph("c prism\np edge 6 9\ne 1 2\ne 2 3\ne 1 3\ne 4 5\ne 5 6\ne 4 6\n"
                          "e 1 4\ne 2 5\ne 3 6\n");
    CHECK(g.num_vertices() == 6);
    CHECK(g.num_edges() == 9);
    CHECK(g.is_regular());
    CHECK(isomorphic(g, prism_graph()));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_graph("a a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 5\n"), ParseError);
}

TEST_CASE("builtin shapes") {
    struct Row {
        const char* name;
        int nv, ne, delta;
        bool regular;
    };
    const Row rows[] = {
        {"k2", 2, 1, 1, true},           {"k4", 4, 6, 3, true},
        {"k5", 5, 10, 4, true},          {"k6", 6, 15, 5, true},
        {"k33", 6, 9, 3, true},          {"prism", 6, 9, 3, true},
        {"petersen", 10, 15, 3, true},   {"q3", 8, 12, 3, true},
        {"q4", 16, 32, 4, true},         {"q5", 32, 80, 5, true},
        {"c9(1,2)", 9, 18, 4, true},     {"c11(1,2,3)", 11, 33, 6, true},
        {"k5-e", 5, 9, 4, false},        {"icosahedron", 12, 30, 5, true},
        {"t5", 10, 30, 6, true},
    };
    for (const Row& r : rows) {
        CAPTURE(r.name);
        Graph g = builtin_graph(r.name);
        CHECK(g.num_vertices() == r.nv);
        CHECK(g.num_edges() == r.ne);
        CHECK(g.max_degree() == r.delta);
        CHECK(g.is_regular() == r.regular);
        CHECK(g.is_connected());
    }
    CHECK(is_builtin("Petersen"));
    CHECK(!is_builtin("nosuch"));
    CHECK_THROWS_AS(builtin_graph("nosuch"), GraphError);
}

TEST_CASE("t5 is the complement of the petersen graph") {
    Graph p = petersen_graph(), t = triangular_t5();
    Graph comp(10);
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v)
            if (!p.has_edge(u, v)) comp.add_edge(u, v);
    CHECK(isomorphic(t, comp));
}

TEST_CASE("isomorphism and invariant hash") {
    Graph a = cycle_graph(6);
    Graph b = parse_graph("x y\ny z\nz w\nw s\ns t\nt x\n");
    CHECK(isomorphic(a, b));
    CHECK(invariant_hash(a) == invariant_hash(b));
    CHECK(!isomorphic(a, complete_bipartite(3, 3)));
}

TEST_CASE("regular embedding") {
    Graph g = builtin_graph("k5-e");
    Graph big = regular_embed(g);
    CHECK(big.is_regular());
    CHECK(big.max_degree() == 4);
    for (int u = 0; u < g.num_vertices(); ++u) {
        CHECK(big.label(u) == g.label(u));
        for (int v = u + 1; v < g.num_vertices(); ++v)
            CHECK(big.has_edge(u, v) == g.has_edge(u, v));
    }
}

TEST_CASE("dot export mentions every vertex") {
    Graph g = prism_graph();
    std::string dot = export_dot(g);
    for (int v = 0; v < 6; ++v) CHECK(dot.find(g.label(v)) != std::string::npos);
}

TEST_CASE("cubic enumeration counts") {
    CHECK(connected_cubic_graphs(4).size() == 1);
    CHECK(connected_cubic_graphs(6).size() == 2);
    CHECK(connected_cubic_graphs(8).size() == 5);
    CHECK(connected_cubic_graphs(10).size() == 19);
    for (const Graph& g : connected_cubic_graphs(8)) {
        CHECK(g.is_regular());
        CHECK(g.max_degree() == 3);
        CHECK(g.is_connected());
    }
    // Pairwise non-isomorphic.
    std::vector<Graph> gs = connected_cubic_graphs(8);
    for (size_t i = 0; i < gs.size(); ++i)
        for (size_t j = i + 1; j < gs.size(); ++j) CHECK(!isomorphic(gs[i], gs[j]));
}

TEST_CASE("stored cubic corpus matches the enumerator") {
    std::ifstream in(std::string(FRACOLOR_TEST_DATA_DIR) + "/cubic_corpus.txt");
    REQUIRE(in.good());
    std::map<int, std::vector<Graph>> stored;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int nv, ne;
        ls >> nv >> ne;
        Graph g(nv);
        for (int e = 0; e < ne; ++e) {
            int u, v;
            ls >> u >> v;
            g.add_edge(u, v);
        }
        REQUIRE(g.num_edges() == ne);
        stored[nv].push_back(g);
    }
    REQUIRE(stored[4].size() == 1);
    REQUIRE(stored[6].size() == 2);
    REQUIRE(stored[8].size() == 5);
    REQUIRE(stored[10].size() == 19);
    for (auto& [nv, gs] : stored) {
        std::vector<Graph> fresh = connected_cubic_graphs(nv);
        REQUIRE(fresh.size() == gs.size());
        // The stored corpus and the enumerator agree as iso-class multisets.
        std::multiset<uint64_t> a, b;
        for (const Graph& g : gs) a.insert(invariant_hash(g));
        for (const Graph& g : fresh) b.insert(invariant_hash(g));
        CHECK(a == b);
    }
}

}  // TEST_SUITE
