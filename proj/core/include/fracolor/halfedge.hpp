#ifndef FRACOLOR_HALFEDGE_HPP
#define FRACOLOR_HALFEDGE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fracolor/graph.hpp"

namespace fracolor {

// A half-edge coloring h assigns each ordered pair (u,v) of an edge uv a
// color in 1..Delta such that colors at each vertex are pairwise distinct
// and h(e_uv) != h(e_vu); both halves touch the shared midpoint of the
// subdivided edge. Stored per edge index in edges() order: [color at the
// smaller endpoint, color at the larger endpoint].
struct HalfEdgeColoring {
    std::vector<std::array<int, 2>> h;

    int color(const Graph& g, int u, int v) const {
        int e = g.edge_index(u, v);
        if (e < 0) throw GraphError("half-edge on a non-edge");
        return h[e][u < v ? 0 : 1];
    }
    void set_color(const Graph& g, int u, int v, int c) {
        int e = g.edge_index(u, v);
        if (e < 0) throw GraphError("half-edge on a non-edge");
        h[e][u < v ? 0 : 1] = c;
    }
};

// True when h is proper in the sense above, using colors 1..delta.
bool half_edge_proper(const Graph& g, const HalfEdgeColoring& h, int delta);

// Proper half-edge coloring with exactly Delta colors, by backtracking on
// the constraint graph of half-edges in saturation order. Exists whenever
// Delta >= 3; Delta <= 2 inputs are rejected.
HalfEdgeColoring half_edge_coloring(const Graph& g);

// Cycles of g (as vertex sequences) whose half-edges use only two colors.
// Only meaningful for cubic g with proper h; such cycles are pairwise
// edge-disjoint.
std::vector<std::vector<int>> find_bad_cycles(const Graph& g, const HalfEdgeColoring& h);

struct GoodColoringTrace {
    HalfEdgeColoring h;
    std::vector<int> bad_cycle_counts;  // strictly decreasing, ends at 0
};

// Half-edge coloring of a cubic graph with no bad cycle, built by switching
// repairs that strictly shrink the number of bad cycles each round.
GoodColoringTrace good_half_edge_coloring(const Graph& g);

// Orientation of half-edges: for each edge index, per endpoint, one of
// unset (0), inward (1, pointing at the incident vertex), outward (2).
struct HalfEdgeOrientation {
    std::vector<std::array<uint8_t, 2>> dir;

    static constexpr uint8_t kUnset = 0, kIn = 1, kOut = 2;
    uint8_t get(const Graph& g, int u, int v) const {
        return dir[g.edge_index(u, v)][u < v ? 0 : 1];
    }
    void set(const Graph& g, int u, int v, uint8_t d) {
        dir[g.edge_index(u, v)][u < v ? 0 : 1] = d;
    }
};

// Orients half-edges of a good coloring so that for every edge uv and every
// pair of equally colored flanking half-edges e_uu', e_vv', the two get
// opposite directions. Two-colored subgraphs decompose into paths; the
// third-color half-edges along each path alternate inward/outward.
HalfEdgeOrientation orient_good(const Graph& g, const HalfEdgeColoring& h);

// Proper edge coloring with colors {1,2,3} plus a star class (0), locally
// minimized: no star edge can be recolored 1..3 directly, every remaining
// star edge sees all three colors among its neighbors, and the three
// two-sided color classes are edge-disjoint.
struct StarEdgeColoring {
    std::vector<int> color;  // per edge index: 1..3, or 0 for star
    int star_count = 0;
};
StarEdgeColoring star_edge_coloring(const Graph& g);

// Orientation data for the second cubic range: for a in {1,2,3}, the
// subgraph G_a of a-edges plus star edges whose endpoints both touch an
// a-edge splits into paths and cycles; each component is oriented
// consistently. Every star edge lands in exactly one G_a.
struct StarOrientation {
    // Per edge index: 0 = unoriented, 1 = from smaller to larger endpoint,
    // 2 = from larger to smaller.
    std::vector<uint8_t> dir;
    std::vector<int> owner;  // for star edges: the class a owning it (1..3), else 0

    bool oriented_from(const Graph& g, int e, int u) const;
};
StarOrientation orient_star_classes(const Graph& g, const StarEdgeColoring& sec);

// Incompatibility between a vertex coloring f and half-edge coloring h:
// a half-edge e_uv is incompatible when h(e_uv) == f(v).
int count_incompatible(const Graph& g, const std::vector<int>& f, const HalfEdgeColoring& h);
int incompatible_at(const Graph& g, int u, const std::vector<int>& f, const HalfEdgeColoring& h);

// Rewrites h by local switches until every vertex has at most two
// incompatible half-edges. The total count strictly decreases with each
// applied move, so the loop terminates.
HalfEdgeColoring two_incompatible(const Graph& g, const std::vector<int>& f,
                                  std::optional<HalfEdgeColoring> start = std::nullopt);

// r-dynamic: proper and every vertex v sees min(r, d(v)) distinct colors
// on its neighborhood.
bool is_r_dynamic(const Graph& g, const std::vector<int>& f, int r);

struct DynamicSearch {
    bool found = false;
    std::vector<int> colors;
    uint64_t nodes = 0;
    bool completed = false;
};

// Backtracking search for a proper k-coloring that is r-dynamic.
DynamicSearch find_dynamic_coloring(const Graph& g, int r, int k,
                                    uint64_t node_budget = 50'000'000);

struct CompatibleResult {
    bool ok = false;
    HalfEdgeColoring h;
    std::string diagnostic;
    int repairs = 0;
};

// Given a 4-dynamic proper coloring f with at most Delta colors on a graph
// with Delta >= 4, builds h fully compatible with f (zero incompatible
// half-edges) by per-vertex matchings with a switching-path repair on Hall
// failures.
CompatibleResult dynamic_compatible(const Graph& g, const std::vector<int>& f);

}  // namespace fracolor

#endif
