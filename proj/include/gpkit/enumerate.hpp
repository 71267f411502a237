#pragma once

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "gpkit/graph.hpp"

namespace gpkit {

inline constexpr int kEnumerateOrderCap = 8;

struct GraphStream {
    std::vector<Graph> graphs;
    std::string provenance;             // "generated" or the source path
    std::vector<std::string> skipped;   // per-line diagnostics from lenient reads
};

/// One representative per isomorphism class of connected graphs on n
/// vertices (1 <= n <= 8). Orders up to 6 go through the full labeled
/// sweep with canonical-key dedup; 7 and 8 extend the representatives of
/// the previous order by one vertex attached to every nonempty subset.
/// Deterministic output order; results for 7 and 8 are cached.
GraphStream enumerate_connected(int n);

/// All graphs on n vertices up to isomorphism, assembled as disjoint
/// unions of connected representatives.
GraphStream enumerate_all(int n);

struct ReadOptions {
    bool strict = true;   // throw ParseError on a bad line vs skip and log
    bool dedup = false;   // drop records repeating an earlier canonical key
    std::string provenance = "stream";
};

/// Reads one graph6 record per line. Blank lines and the ">>graph6<<"
/// header are tolerated anywhere; errors carry 1-based line numbers.
GraphStream read_graph6_stream(std::istream& in, const ReadOptions& options = {});

/// Uniform G(n,p) with p drawn from [min_p, max_p], resampled until
/// connected. Deterministic given the generator state.
Graph random_connected_graph(int n, std::mt19937_64& rng, double min_p = 0.2,
                             double max_p = 0.8);

}  // namespace gpkit
