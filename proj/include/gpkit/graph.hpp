#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gpkit {

/// Hard cap on graph order: one adjacency word per vertex keeps every
/// subset/clique test word-parallel.
inline constexpr int kMaxOrder = 64;

namespace detail {
inline std::uint64_t full_mask(int n) {
    return n >= 64 ? ~0ull : (1ull << n) - 1;
}
}  // namespace detail

/// A subset of the vertices of a graph of a fixed order.
class VertexSet {
public:
    explicit VertexSet(int order);
    static VertexSet from_mask(int order, std::uint64_t mask);
    static VertexSet from_indices(int order, std::span<const int> indices);

    int order() const { return order_; }
    int count() const;
    bool empty() const { return bits_ == 0; }
    bool contains(int v) const { return (bits_ >> v) & 1u; }
    void add(int v);
    void remove(int v);
    std::uint64_t mask() const { return bits_; }

    /// Members in ascending order.
    std::vector<int> to_vector() const;
    /// Formats as "{0,2,5}".
    std::string to_string() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    int order_;
    std::uint64_t bits_ = 0;
};

/// Simple undirected graph on vertices 0..n-1, adjacency stored as one
/// bitset row per vertex. Treat instances as immutable once built; all
/// operations on them are pure.
class Graph {
public:
    explicit Graph(int order);

    int order() const { return order_; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    void add_edge(int u, int v);

    std::uint64_t adjacency_word(int v) const { return adj_[v]; }
    int degree(int v) const;
    int edge_count() const;
    /// Edges as (u,v) pairs with u < v, sorted.
    std::vector<std::pair<int, int>> edge_list() const;
    VertexSet neighbors(int v) const;
    VertexSet all_vertices() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int order_;
    std::vector<std::uint64_t> adj_;
};

Graph graph_from_edges(int order, std::span<const std::pair<int, int>> edges);
Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // new index -> original label
};

/// Subgraph induced by a nonempty vertex set, with the relabeling recorded.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Small builders used all over the test and verification surfaces.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

}  // namespace gpkit
