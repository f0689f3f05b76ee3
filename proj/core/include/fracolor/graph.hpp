#ifndef FRACOLOR_GRAPH_HPP
#define FRACOLOR_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fracolor {

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : GraphError {
    int line;
    ParseError(const std::string& what, int line_no)
        : GraphError("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// Simple undirected graph: vertices 0..n-1, sorted adjacency lists, no loops,
// no parallel edges.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : adj_(n), labels_(n) {
        for (int v = 0; v < n; ++v) labels_[v] = std::to_string(v + 1);
    }
    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return edge_count_; }

    int add_vertex(const std::string& label) {
        adj_.emplace_back();
        labels_.push_back(label);
        return num_vertices() - 1;
    }

    // Returns false if the edge was already present.
    bool add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    int max_degree() const;
    int min_degree() const;
    bool is_regular() const { return num_vertices() > 0 && max_degree() == min_degree(); }
    bool is_connected() const;
    bool is_complete() const;

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    const std::string& label(int v) const { return labels_.at(v); }
    void set_label(int v, const std::string& s) { labels_.at(v) = s; }
    std::optional<int> vertex_by_label(const std::string& s) const;

    // Edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    // Index of edge (u, v) in the edges() ordering, or -1.
    int edge_index(int u, int v) const;

    bool operator==(const Graph& other) const {
        return adj_ == other.adj_ && labels_ == other.labels_;
    }

  private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
    int edge_count_ = 0;
};

struct ParseReport {
    int duplicate_edges = 0;
    int comment_lines = 0;
};

// Accepts two formats, auto-detected:
//   DIMACS: "c ..." comments, "p edge N M" header, "e u v" edges (1-based).
//   Edge list: one "u v" pair of whitespace-separated labels per line,
//   "#" comments. Vertices appear in first-mention order.
// Lines whose first token is "c" or "p" always parse as DIMACS syntax, so
// those two strings cannot start an edge-list line as vertex labels.
// Self-loops are rejected; duplicate edges are collapsed and counted.
Graph parse_graph(const std::string& text, ParseReport* report = nullptr);

// DOT output; when vertex_colors is nonempty it must have one entry per
// vertex and the values are emitted as node color attributes.
std::string export_dot(const Graph& g, const std::vector<std::string>& vertex_colors = {});

// Embeds g as an induced subgraph of a Delta-regular graph by repeated
// doubling: each round joins every deficient vertex to its twin in a fresh
// copy. Vertices 0..n-1 of the result are g's vertices with labels kept;
// copies get "#k" suffixes. At most Delta rounds are needed.
Graph regular_embed(const Graph& g);

// Exact isomorphism test by backtracking on degree-compatible assignments.
bool isomorphic(const Graph& a, const Graph& b);

// Canonical invariant fingerprint (iterated neighborhood refinement); equal
// for isomorphic graphs, used to bucket candidates before exact tests.
uint64_t invariant_hash(const Graph& g);

}  // namespace fracolor

#endif
