#pragma once

// Test-side reference implementations, kept deliberately independent of
// the library code paths they are used to check.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpkit/graph.hpp"
#include "gpkit/gp_solver.hpp"
#include "gpkit/metrics.hpp"

namespace oracle {

// graph6 codec built from an explicit bit vector, nothing shared with the
// library's shifting-mask implementation.
std::string g6_encode(int n, const std::vector<std::pair<int, int>>& edges);
std::pair<int, std::vector<std::pair<int, int>>> g6_decode(const std::string& record);

// Exact values by exhausting all vertex subsets.
int clique_number_subsets(const gpkit::Graph& g);
int eta_subsets(const gpkit::Graph& g);

// Girth by deleting each edge and measuring the detour between its ends.
std::optional<int> girth_edge_deletion(const gpkit::Graph& g);

// Backtracking isomorphism test (no canonical forms involved).
bool isomorphic(const gpkit::Graph& a, const gpkit::Graph& b);

// Number of connected graphs on n vertices up to isomorphism, by running
// over all labeled graphs, bucketing on a cheap invariant, and deduping
// inside buckets with the pairwise isomorphism test.
long count_connected_isoclasses(int n);

// Same sweep for all graphs (connected or not).
long count_all_isoclasses(int n);

// Checks every GpCertificate invariant against the graph and set it was
// issued for; returns a description of the first violation, empty if clean.
std::string certificate_violation(const gpkit::Graph& g, const gpkit::VertexSet& s,
                                  const gpkit::GpCertificate& cert);

gpkit::Graph random_graph(int n, std::uint64_t seed, double p = 0.5);
gpkit::Graph permuted(const gpkit::Graph& g, const std::vector<int>& perm);

}  // namespace oracle
