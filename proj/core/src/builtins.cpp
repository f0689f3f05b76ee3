#include "fracolor/builtins.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fracolor {

Graph complete_graph(int r) {
    if (r < 1) throw GraphError("complete graph needs r >= 1");
    Graph g(r);
    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle needs n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw GraphError("path needs n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph prism_graph() {
    // Triangles {v1,v2,v3}, {v4,v5,v6}; rungs v1v4, v2v5, v3v6.
    Graph g(6);
    for (int v = 0; v < 6; ++v) g.set_label(v, "v" + std::to_string(v + 1));
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);          // outer 5-cycle
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);                // spokes
    }
    return g;
}

Graph hypercube(int d) {
    if (d < 1 || d > 16) throw GraphError("hypercube dimension out of range");
    int n = 1 << d;
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
    return g;
}

Graph circulant(int n, const std::vector<int>& offsets) {
    if (n < 3) throw GraphError("circulant needs n >= 3");
    Graph g(n);
    for (int s : offsets) {
        if (s < 1 || 2 * s >= n + 1)
            throw GraphError("circulant offset out of range");
        for (int v = 0; v < n; ++v) g.add_edge(v, (v + s) % n);
    }
    return g;
}

Graph icosahedron_graph() {
    // Standard rotation-friendly labeling: apex 0, upper ring 1..5,
    // lower ring 6..10, apex 11.
    Graph g(12);
    for (int i = 0; i < 5; ++i) {
        int u = 1 + i, un = 1 + (i + 1) % 5;
        int l = 6 + i, ln = 6 + (i + 1) % 5;
        g.add_edge(0, u);
        g.add_edge(u, un);
        g.add_edge(l, ln);
        g.add_edge(11, l);
        g.add_edge(u, l);
        g.add_edge(u, ln);
    }
    return g;
}

Graph triangular_t5() {
    // Vertices are the 10 pairs {i,j} from [5]; adjacency is nonempty
    // intersection. Equals the complement of the Petersen graph.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
    Graph g(10);
    for (int a = 0; a < 10; ++a) {
        g.set_label(a, std::to_string(pairs[a].first + 1) + std::to_string(pairs[a].second + 1));
        for (int b = a + 1; b < 10; ++b) {
            auto [i, j] = pairs[a];
            auto [k, l] = pairs[b];
            if (i == k || i == l || j == k || j == l) g.add_edge(a, b);
        }
    }
    return g;
}

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

// Parses "c<n>(a,b,...)"; returns false if the shape does not match.
bool parse_circulant_name(const std::string& name, int& n, std::vector<int>& offsets) {
    if (name.size() < 5 || name[0] != 'c') return false;
    auto open = name.find('(');
    if (open == std::string::npos || name.back() != ')') return false;
    try {
        size_t used;
        n = std::stoi(name.substr(1, open - 1), &used);
        if (used != open - 1) return false;
    } catch (...) {
        return false;
    }
    offsets.clear();
    std::string inner = name.substr(open + 1, name.size() - open - 2);
    std::istringstream in(inner);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            offsets.push_back(std::stoi(tok));
        } catch (...) {
            return false;
        }
    }
    return !offsets.empty();
}

}  // namespace

Graph builtin_graph(const std::string& raw) {
    std::string name = lower(raw);
    if (name == "k5-e") {
        Graph g = complete_graph(5);
        Graph h(5);
        for (auto [u, v] : g.edges())
            if (!(u == 3 && v == 4)) h.add_edge(u, v);
        return h;
    }
    if (name.size() >= 2 && name[0] == 'k') {
        if (name == "k33") return complete_bipartite(3, 3);
        try {
            size_t used;
            int r = std::stoi(name.substr(1), &used);
            if (used == name.size() - 1 && r >= 2 && r <= 9) return complete_graph(r);
        } catch (...) {
        }
    }
    if (name == "prism") return prism_graph();
    if (name == "petersen") return petersen_graph();
    if (name == "icosahedron") return icosahedron_graph();
    if (name == "t5") return triangular_t5();
    if (name.size() == 2 && name[0] == 'q' && name[1] >= '1' && name[1] <= '6')
        return hypercube(name[1] - '0');
    if (name.rfind("path_", 0) == 0) return path_graph(std::stoi(name.substr(5)));
    if (name.rfind("cycle_", 0) == 0) return cycle_graph(std::stoi(name.substr(6)));
    int n;
    std::vector<int> offsets;
    if (parse_circulant_name(name, n, offsets)) return circulant(n, offsets);
    throw GraphError("unknown builtin graph: " + raw);
}

bool is_builtin(const std::string& name) {
    try {
        builtin_graph(name);
        return true;
    } catch (const GraphError&) {
        return false;
    }
}

}  // namespace fracolor
