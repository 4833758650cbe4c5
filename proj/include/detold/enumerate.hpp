#pragma once

#include <functional>
#include <vector>

#include "detold/graph.hpp"

namespace detold {

// Yields one representative per isomorphism class of graphs on n vertices.
// Capped at n <= 8; larger orders are corpus files, not enumeration.
// The stream is single-consumer; `filter` may be empty (accept all).
void enumerate_graphs(int n, const std::function<bool(const Graph&)>& filter,
                      const std::function<void(const Graph&)>& yield);

std::vector<Graph> enumerate_graphs(int n);

// Canonical key of a graph on n <= 8 vertices: the minimum upper-triangle
// bit string over all degree-sorted vertex orderings. Equal keys iff isomorphic.
uint64_t canonical_key(const Graph& g);

} // namespace detold
