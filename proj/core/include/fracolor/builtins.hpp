#ifndef FRACOLOR_BUILTINS_HPP
#define FRACOLOR_BUILTINS_HPP

#include <string>
#include <vector>

#include "fracolor/graph.hpp"

namespace fracolor {

// Named graphs available everywhere without input files. Accepted names
// (case-insensitive): K2..K9, K5-e, K33, prism, petersen, Q3, Q4, Q5,
// icosahedron, T5, path_n, cycle_n, and circulants like C9(1,2).
Graph builtin_graph(const std::string& name);

// True if the name resolves to a builtin.
bool is_builtin(const std::string& name);

Graph complete_graph(int r);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph prism_graph();      // C3 x K2, the triangular prism
Graph petersen_graph();
Graph hypercube(int d);
Graph circulant(int n, const std::vector<int>& offsets);
Graph icosahedron_graph();
Graph triangular_t5();    // line graph of K5 (complement of Petersen)

}  // namespace fracolor

#endif
