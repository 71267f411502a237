#pragma once

#include <string>

#include "gpkit/graph.hpp"

namespace gpkit {

/// Orders above this are rejected by canonical_key: the key is computed
/// by pruned permutation search, which is a dead end for large graphs.
inline constexpr int kCanonicalOrderCap = 10;

/// Isomorphism-invariant key: the order byte followed by the
/// lexicographically smallest upper-triangle bit string over all
/// degree-respecting vertex orderings. Equal keys iff isomorphic.
std::string canonical_key(const Graph& g);

}  // namespace gpkit
