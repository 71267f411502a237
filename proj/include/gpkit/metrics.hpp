#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gpkit/graph.hpp"

namespace gpkit {

/// All-pairs hop distances. Unreachable pairs carry a distinguished
/// marker rather than a sentinel value: at() refuses to hand them out.
class DistMatrix {
public:
    int order() const { return order_; }
    bool reachable(int u, int v) const { return d_[idx(u, v)] >= 0; }
    /// Distance between reachable u,v; throws std::logic_error otherwise.
    int at(int u, int v) const;
    bool all_reachable() const;
    /// Largest distance over reachable pairs.
    int max_distance() const;

private:
    friend DistMatrix all_pairs_distances(const Graph&);
    explicit DistMatrix(int order);
    int idx(int u, int v) const { return u * order_ + v; }
    void set(int u, int v, int value) { d_[idx(u, v)] = static_cast<std::int16_t>(value); }

    int order_;
    std::vector<std::int16_t> d_;  // -1 marks unreachable
};

/// BFS-exact hop distances from every vertex.
DistMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

/// Max distance of a connected graph with order >= 2.
int diameter(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// One shortest cycle as a vertex list in cyclic order; nullopt for forests.
std::optional<std::vector<int>> shortest_cycle(const Graph& g);

/// Connected components of the subgraph induced by `within`, each as a
/// vertex set of g, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);

}  // namespace gpkit
