#pragma once

#include <optional>
#include <vector>

#include "gpkit/graph.hpp"
#include "gpkit/metrics.hpp"

namespace gpkit {

/// Vertices lying on some shortest u,v-path (u and v included).
VertexSet interval(const DistMatrix& d, int u, int v);

/// Definitional check: no member of s sits strictly between two other
/// members on a shortest path. Sets of size <= 2 pass trivially.
bool is_gp_definitional(const DistMatrix& d, const VertexSet& s);
bool is_gp_definitional(const Graph& g, const VertexSet& s);  // requires connected g

/// Connected components of the subgraph induced by s; nullopt as soon
/// as one component is not a clique. Throws on empty s.
std::optional<std::vector<VertexSet>> clique_partition(const Graph& g, const VertexSet& s);

/// Witness that a set is in general position: its clique components
/// together with the pairwise block distances.
struct GpCertificate {
    std::vector<VertexSet> blocks;
    std::vector<std::vector<int>> block_distance;  // p x p, diagonal unused (0)
};

/// Structural check: the components of the induced subgraph must be
/// cliques whose blocks are pairwise distance-constant, and no block
/// distance may decompose as a sum through a third block. Returns the
/// certificate on success.
std::optional<GpCertificate> gp_structural_certificate(const Graph& g, const DistMatrix& d,
                                                       const VertexSet& s);
std::optional<GpCertificate> gp_structural_certificate(const Graph& g, const VertexSet& s);
bool is_gp_structural(const Graph& g, const VertexSet& s);

struct GpResult {
    int value = 0;
    VertexSet witness;
};

inline constexpr int kBruteforceOrderCap = 20;

/// Reference solver: enumerates subsets top-down by size and returns the
/// first (lexicographically smallest) maximum set that passes the
/// definitional check. Connected graphs up to order 20.
GpResult gp_bruteforce(const Graph& g);

/// Branch-and-bound solver. Seeds the incumbent with a maximum clique,
/// expands vertices in descending-degree order, and stops early once the
/// n - diameter + 1 ceiling is reached. Witness is the lexicographically
/// smallest maximum set, so results are byte-identical across runs.
GpResult gp_exact(const Graph& g);

/// Largest vertex set inducing a disjoint union of cliques (equivalently,
/// inducing a complete multipartite subgraph of the complement).
int eta(const Graph& g);

/// Closed form for diameter-2 graphs: max of clique number and eta.
int gp_diameter2(const Graph& g);

/// n - diameter + 1, for connected graphs of order >= 2.
int gp_upper_bound(const Graph& g);

}  // namespace gpkit
