#ifndef FRACOLOR_FRACPOW_HPP
#define FRACOLOR_FRACPOW_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fracolor/graph.hpp"

namespace fracolor {

// A vertex of G^{m/n}: either a branch vertex u of G, or the i-th internal
// vertex on the subdivided edge uv, counted from u (1 <= i <= n-1). The
// canonical form stores u < v; (uv)_i and (vu)_{n-i} are the same vertex.
struct FPVertex {
    int u = -1;
    int v = -1;  // -1 for branch vertices
    int i = 0;   // 0 for branch vertices

    bool is_branch() const { return v < 0; }
    static FPVertex branch(int u) { return {u, -1, 0}; }

    bool operator==(const FPVertex&) const = default;
    bool operator<(const FPVertex& o) const {
        if (u != o.u) return u < o.u;
        if (v != o.v) return v < o.v;
        return i < o.i;
    }
};

// The fractional power G^{m/n}: built on the n-subdivision G^{1/n}, with x
// adjacent to y whenever 1 <= d(x,y) <= m in the subdivision. Vertex ids:
// first the branch vertices in base order, then per base edge (in edges()
// order) the internal vertices i = 1..n-1.
class FracPowGraph {
  public:
    FracPowGraph(Graph base, int m, int n);

    const Graph& base() const { return base_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int num_vertices() const { return num_vertices_; }

    int id_branch(int u) const;
    int id_internal(int u, int v, int i) const;  // accepts either orientation
    int id(const FPVertex& x) const;
    FPVertex vertex(int id) const;
    std::string vertex_name(int id) const;

    // Distance in the subdivision G^{1/n}.
    int dist(int x, int y) const { return dist_[x][y]; }
    bool adjacent(int x, int y) const {
        int d = dist_[x][y];
        return d >= 1 && d <= m_;
    }
    const std::vector<int>& power_neighbors(int x) const { return pow_adj_[x]; }
    int power_degree(int x) const { return static_cast<int>(pow_adj_[x].size()); }
    int64_t power_edge_count() const;

    // The fractional power as a plain labeled graph.
    Graph as_graph() const;

  private:
    Graph base_;
    int m_, n_;
    int num_vertices_;
    std::vector<std::pair<int, int>> base_edges_;
    std::vector<std::vector<int>> edge_index_at_;  // per-vertex map neighbor -> edge idx
    std::vector<std::vector<uint16_t>> dist_;
    std::vector<std::vector<int>> pow_adj_;
};

FracPowGraph subdivide(const Graph& g, int n);        // G^{1/n}, i.e. m = 1
FracPowGraph frac_power(const Graph& g, int m, int n);

// Anatomy of a superedge for given (m, n): bubbles, crusts (odd m only) and
// middle parts, as id sequences. B_uv = ((uv)_1 .. (uv)_{floor(m/2)}),
// M_uv = ((uv)_{ceil(m/2)+1} .. (uv)_{n-ceil(m/2)-1}), and for odd m the
// crust of u collects (uv)_{(m+1)/2} over all edges uv.
class Anatomy {
  public:
    explicit Anatomy(const FracPowGraph& fp);

    enum class Kind { Branch, Bubble, Crust, Middle };

    std::vector<int> bubble(int u, int v) const;  // ordered from u outward
    std::vector<int> middle(int u, int v) const;  // ordered from u outward
    std::vector<int> crust(int u) const;          // odd m only
    int crust_vertex(int u, int v) const;         // (uv)_{(m+1)/2}, odd m
    Kind kind(int id) const;
    int middle_len() const { return middle_len_; }

  private:
    const FracPowGraph* fp_;
    int middle_len_;
};

}  // namespace fracolor

#endif
