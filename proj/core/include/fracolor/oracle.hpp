#ifndef FRACOLOR_ORACLE_HPP
#define FRACOLOR_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fracolor/color.hpp"
#include "fracolor/fracpow.hpp"
#include "fracolor/graph.hpp"

namespace fracolor {

// First violated pair under lexicographic (x, y) id order, if any.
struct Violation {
    int x, y;
    int dist;
    std::string describe(const FracPowGraph& fp) const;
};

std::optional<Violation> verify_coloring(const FracPowGraph& fp, const VertexColoring& c);

// Clique number of G^{m/n} for connected G with at least one edge:
//   m + 1                      if Delta(G) == 1
//   (m/2) * Delta + 1          if m even, Delta >= 2
//   ((m-1)/2) * Delta + 2      if m odd,  Delta >= 2
int omega_formula(int delta, int m);
int omega_of(const Graph& g, int m);

struct CliqueResult {
    int size = 0;
    std::vector<int> members;
    uint64_t nodes = 0;
    bool completed = true;
};

// Branch-and-bound maximum clique on the power graph; greedy-coloring bound.
CliqueResult max_clique(const FracPowGraph& fp, uint64_t node_budget = 200'000'000);

enum class Verdict { Yes, No, Budget };

struct ColoringSearch {
    Verdict verdict = Verdict::Budget;
    std::optional<VertexColoring> coloring;
    uint64_t nodes = 0;
    bool completed = false;  // exhaustive search finished (meaningful for No)
};

// Decides k-colorability of the power graph by DSATUR-ordered backtracking
// with clique seeding and first-occurrence color symmetry breaking. The
// budget counts search nodes, so results are reproducible across machines.
ColoringSearch exact_chromatic(const FracPowGraph& fp, int k, uint64_t node_budget = 200'000'000);

// Same search on a plain graph; colors come out as 1..k.
struct PlainColoringSearch {
    Verdict verdict = Verdict::Budget;
    std::vector<int> colors;
    uint64_t nodes = 0;
    bool completed = false;
};
PlainColoringSearch plain_chromatic(const Graph& g, int k, uint64_t node_budget = 50'000'000);

// Decides whether G^{m/n} (m odd) admits a proper coloring with exactly
// omega colors. Sound pruning: at every branch vertex of full degree Delta,
// all crust vertices are forced to share one color in any omega-coloring,
// so they are merged into one search node.
ColoringSearch decide_omega_odd(const Graph& g, int m, int n, uint64_t node_budget = 200'000'000);

}  // namespace fracolor

#endif
