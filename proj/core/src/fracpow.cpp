#include "fracolor/fracpow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace fracolor {

FracPowGraph::FracPowGraph(Graph base, int m, int n) : base_(std::move(base)), m_(m), n_(n) {
    if (n < 2) throw GraphError("subdivision denominator n must be >= 2");
    if (m < 1 || m >= n) throw GraphError("fractional power needs 1 <= m < n");
    base_edges_ = base_.edges();
    int bn = base_.num_vertices();
    int be = static_cast<int>(base_edges_.size());
    num_vertices_ = bn + (n - 1) * be;

    edge_index_at_.assign(bn, {});
    for (int u = 0; u < bn; ++u) edge_index_at_[u].assign(bn, -1);
    for (int e = 0; e < be; ++e) {
        auto [u, v] = base_edges_[e];
        edge_index_at_[u][v] = e;
        edge_index_at_[v][u] = e;
    }

    // Subdivision adjacency; ids as documented in the header.
    std::vector<std::vector<int>> sub(num_vertices_);
    auto internal_id = [&](int e, int i) { return bn + e * (n - 1) + (i - 1); };
    for (int e = 0; e < be; ++e) {
        auto [u, v] = base_edges_[e];
        int prev = u;
        for (int i = 1; i <= n - 1; ++i) {
            int cur = internal_id(e, i);
            sub[prev].push_back(cur);
            sub[cur].push_back(prev);
            prev = cur;
        }
        sub[prev].push_back(v);
        sub[v].push_back(prev);
    }

    dist_.assign(num_vertices_, std::vector<uint16_t>(num_vertices_, std::numeric_limits<uint16_t>::max()));
    std::vector<int> frontier, next;
    for (int s = 0; s < num_vertices_; ++s) {
        auto& d = dist_[s];
        d[s] = 0;
        frontier.assign(1, s);
        uint16_t layer = 0;
        while (!frontier.empty()) {
            ++layer;
            next.clear();
            for (int x : frontier)
                for (int y : sub[x])
                    if (d[y] == std::numeric_limits<uint16_t>::max()) {
                        d[y] = layer;
                        next.push_back(y);
                    }
            frontier.swap(next);
        }
    }

    pow_adj_.assign(num_vertices_, {});
    for (int x = 0; x < num_vertices_; ++x)
        for (int y = 0; y < num_vertices_; ++y)
            if (x != y && dist_[x][y] <= m_) pow_adj_[x].push_back(y);
}

int FracPowGraph::id_branch(int u) const {
    if (u < 0 || u >= base_.num_vertices()) throw GraphError("branch vertex out of range");
    return u;
}

int FracPowGraph::id_internal(int u, int v, int i) const {
    if (i < 1 || i > n_ - 1) throw GraphError("internal index out of range");
    if (u < 0 || v < 0 || u >= base_.num_vertices() || v >= base_.num_vertices() ||
        edge_index_at_[u][v] < 0)
        throw GraphError("not a base edge");
    int e = edge_index_at_[u][v];
    auto [a, b] = base_edges_[e];
    int canon_i = (u == a) ? i : n_ - i;
    return base_.num_vertices() + e * (n_ - 1) + (canon_i - 1);
}

int FracPowGraph::id(const FPVertex& x) const {
    return x.is_branch() ? id_branch(x.u) : id_internal(x.u, x.v, x.i);
}

FPVertex FracPowGraph::vertex(int id) const {
    int bn = base_.num_vertices();
    if (id < 0 || id >= num_vertices_) throw GraphError("vertex id out of range");
    if (id < bn) return FPVertex::branch(id);
    int rest = id - bn;
    int e = rest / (n_ - 1);
    int i = rest % (n_ - 1) + 1;
    auto [u, v] = base_edges_[e];
    return FPVertex{u, v, i};
}

std::string FracPowGraph::vertex_name(int id) const {
    FPVertex x = vertex(id);
    if (x.is_branch()) return base_.label(x.u);
    return "(" + base_.label(x.u) + base_.label(x.v) + ")_" + std::to_string(x.i);
}

int64_t FracPowGraph::power_edge_count() const {
    int64_t total = 0;
    for (const auto& a : pow_adj_) total += static_cast<int64_t>(a.size());
    return total / 2;
}

Graph FracPowGraph::as_graph() const {
    Graph g(0, {});
    for (int x = 0; x < num_vertices_; ++x) g.add_vertex(vertex_name(x));
    for (int x = 0; x < num_vertices_; ++x)
        for (int y : pow_adj_[x])
            if (x < y) g.add_edge(x, y);
    return g;
}

FracPowGraph subdivide(const Graph& g, int n) { return FracPowGraph(g, 1, n); }

FracPowGraph frac_power(const Graph& g, int m, int n) { return FracPowGraph(g, m, n); }

Anatomy::Anatomy(const FracPowGraph& fp) : fp_(&fp) {
    middle_len_ = fp.n() - 2 * ((fp.m() + 1) / 2) - 1;
    if (middle_len_ < 0) middle_len_ = 0;
}

std::vector<int> Anatomy::bubble(int u, int v) const {
    std::vector<int> out;
    for (int i = 1; i <= fp_->m() / 2; ++i) out.push_back(fp_->id_internal(u, v, i));
    return out;
}

std::vector<int> Anatomy::middle(int u, int v) const {
    int start = (fp_->m() + 1) / 2 + 1;  // ceil(m/2) + 1
    std::vector<int> out;
    for (int t = 0; t < middle_len_; ++t) out.push_back(fp_->id_internal(u, v, start + t));
    return out;
}

std::vector<int> Anatomy::crust(int u) const {
    if (fp_->m() % 2 == 0) throw GraphError("crusts exist only for odd m");
    std::vector<int> out;
    for (int w : fp_->base().neighbors(u))
        out.push_back(fp_->id_internal(u, w, (fp_->m() + 1) / 2));
    return out;
}

int Anatomy::crust_vertex(int u, int v) const {
    if (fp_->m() % 2 == 0) throw GraphError("crusts exist only for odd m");
    return fp_->id_internal(u, v, (fp_->m() + 1) / 2);
}

Anatomy::Kind Anatomy::kind(int id) const {
    FPVertex x = fp_->vertex(id);
    if (x.is_branch()) return Kind::Branch;
    int m = fp_->m(), n = fp_->n();
    int from_u = x.i, from_v = n - x.i;
    int near = std::min(from_u, from_v);
    if (near <= m / 2) return Kind::Bubble;
    if (m % 2 == 1 && near == (m + 1) / 2) return Kind::Crust;
    return Kind::Middle;
}

}  // namespace fracolor
