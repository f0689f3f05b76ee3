#ifndef FRACOLOR_CONSTRUCT_HPP
#define FRACOLOR_CONSTRUCT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fracolor/color.hpp"
#include "fracolor/fracpow.hpp"
#include "fracolor/graph.hpp"
#include "fracolor/halfedge.hpp"
#include "fracolor/oracle.hpp"

namespace fracolor {

// Output of a constructive coloring routine. Every returned coloring has
// already passed verify_coloring; ok is false only for the soft failure
// modes (search budget exhausted, hypothesis not established). Violated
// preconditions throw GraphError instead.
struct ConstructResult {
    bool ok = false;
    VertexColoring coloring;
    std::string method;
    std::string diagnostic;  // reason when ok is false, or a loud finding
    int colors_used = 0;
    int omega = 0;
    bool optimal = false;  // colors_used == omega
    uint64_t nodes = 0;    // search nodes when an exact search ran
};

// Smallest n0 with n0 > m and n0 == n (mod m+1); the window is
// m+1 <= n0 <= 2m+1 and colorings extend from n0 to n in steps of m+1.
int reduced_n(int m, int n);

// Lifts a proper coloring of G^{m/n} to G^{m/(n+m+1)}: on every superedge
// the colors of positions 0..m are replayed after position m. All distances
// weakly grow and every new vertex keeps its source's distance to the far
// branch vertex, so properness and the palette are preserved. The result is
// checker-verified; a violation throws.
VertexColoring extend_coloring(const Graph& g, int m, int n, const VertexColoring& c);

// Even m, Delta >= 4, m+2 <= n <= 2m+1: exactly (m/2)Delta + 1 colors.
// Branch vertices 0, bubbles carry half-edge tuples, middle parts take
// reversed prefixes of two tuples unused on the superedge.
ConstructResult color_even_highdeg(const Graph& g, int m, int n);

// Even m, cubic g, m+2 <= n <= 2m+1: exactly 3m/2 + 1 colors. The first
// range (n <= 3m/2+1) runs on a good half-edge coloring with orientation;
// the second range (3m/2+2 <= n <= 2m) on a star edge coloring with
// oriented classes. n = 2m+1 is not covered by either scheme and is
// resolved by exact search with k = omega; the outcome is reported.
ConstructResult color_even_cubic(const Graph& g, int m, int n,
                                 uint64_t node_budget = 200'000'000);

// Even m dispatcher for any connected g with Delta >= 3 and n > m:
// embeds non-regular Delta = 3 graphs into cubic ones, reduces large n and
// extends, falls back to exact search at n = m+1.
ConstructResult color_even(const Graph& g, int m, int n,
                           uint64_t node_budget = 200'000'000);

// Odd m, Delta >= 4, non-complete g, m+2 <= n <= 2m+1: at most
// ((m-1)/2)Delta + 4 = omega + 2 colors, via a proper Delta-coloring f and
// a half-edge coloring h with at most two incompatible halves per vertex.
ConstructResult color_odd_plus2(const Graph& g, int m, int n);

// Same skeleton under a fully compatible pair (f, h): the two diamond
// colors disappear and exactly omega colors remain. Throws if the pair is
// not compatible with g.
ConstructResult color_odd_compatible_with(const Graph& g, int m, int n,
                                          const std::vector<int>& f,
                                          const HalfEdgeColoring& h);

// Searches for the compatible pair itself: a 4-dynamic proper
// Delta-coloring (backtracking) fed through the matching construction.
// When either stage fails within budget the result has ok = false and a
// "hypothesis not established" diagnostic. Requires Delta >= 5.
ConstructResult color_odd_compatible(const Graph& g, int m, int n,
                                     uint64_t node_budget = 50'000'000);

// Odd m >= 5, non-complete g, Delta >= 3, (3m+5)/2 <= n <= 2m+1: exactly
// omega colors, or omega + 1 at n = 2m+1 where one extra vertex per
// superedge takes a fresh color.
ConstructResult color_odd_second_range(const Graph& g, int m, int n,
                                       uint64_t node_budget = 200'000'000);

// Complete graph K_r, r >= 4, odd m, any n > m: exactly omega colors.
// m = 3, n = 5 goes through per-vertex bipartite matchings with at most one
// color switch repair per vertex; larger odd m composes the K_r^{(m-2)/m}
// coloring with a half-edge layer; other n adopt bubbles and crusts from
// the n = m+2 coloring and fill middles from per-distance color classes.
ConstructResult color_complete(int r, int m, int n,
                               uint64_t node_budget = 200'000'000);

// Chooses the applicable routine by parity, degree and range, with exact
// search as the final fallback for cases no scheme covers.
ConstructResult color_fractional(const Graph& g, int m, int n,
                                 uint64_t node_budget = 200'000'000);

// Replays the proof that the prism (C3 box K2) satisfies
// chi(G^{3/5}) = 6 > 5 = omega(G^{3/5}): clique number, a machine-checked
// symmetry-and-forcing argument ending in a contradiction, an exhaustive
// "no 5-coloring" search both with and without crust merging, and an
// explicit 6-coloring.
struct PrismStudy {
    int omega = 0;
    int chi = 0;
    CliqueResult clique;
    ColoringSearch no_five;         // raw exhaustive search, k = 5
    ColoringSearch no_five_pruned;  // crust-merged search, k = 5
    ColoringSearch yes_six;         // k = 6, carries the coloring
    std::vector<std::string> argument;
    bool argument_complete = false;
};
PrismStudy prove_prism_counterexample(uint64_t node_budget = 200'000'000);

}  // namespace fracolor

#endif
