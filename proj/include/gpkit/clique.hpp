#pragma once

#include "gpkit/graph.hpp"

namespace gpkit {

/// True iff every two members of s are adjacent.
bool is_clique(const Graph& g, const VertexSet& s);

/// One maximum clique, found by branch and bound with a greedy-coloring
/// bound over bitset candidate sets.
VertexSet max_clique(const Graph& g);

int clique_number(const Graph& g);

}  // namespace gpkit
