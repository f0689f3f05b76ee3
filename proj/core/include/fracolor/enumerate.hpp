#ifndef FRACOLOR_ENUMERATE_HPP
#define FRACOLOR_ENUMERATE_HPP

#include <vector>

#include "fracolor/graph.hpp"

namespace fracolor {

// All connected 3-regular graphs on exactly n vertices, one per isomorphism
// class, deterministically ordered. n must be even and >= 4.
std::vector<Graph> connected_cubic_graphs(int n);

// Convenience: all orders 4..max_n, concatenated small-to-large.
std::vector<Graph> connected_cubic_graphs_up_to(int max_n);

}  // namespace fracolor

#endif
