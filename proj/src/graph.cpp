#include "gpkit/graph.hpp"

#include <bit>
#include <stdexcept>

namespace gpkit {

namespace {

void check_vertex(int v, int order, const char* what) {
    if (v < 0 || v >= order) throw std::out_of_range(std::string(what) + " out of range");
}

}  // namespace

VertexSet::VertexSet(int order) : order_(order) {
    if (order < 1 || order > kMaxOrder) throw std::invalid_argument("vertex set order out of range");
}

VertexSet VertexSet::from_mask(int order, std::uint64_t mask) {
    VertexSet s(order);
    if (mask & ~detail::full_mask(order)) throw std::out_of_range("set member out of range");
    s.bits_ = mask;
    return s;
}

VertexSet VertexSet::from_indices(int order, std::span<const int> indices) {
    VertexSet s(order);
    for (int v : indices) s.add(v);
    return s;
}

int VertexSet::count() const { return std::popcount(bits_); }

void VertexSet::add(int v) {
    check_vertex(v, order_, "set member");
    bits_ |= 1ull << v;
}

void VertexSet::remove(int v) {
    check_vertex(v, order_, "set member");
    bits_ &= ~(1ull << v);
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t w = bits_; w; w &= w - 1) out.push_back(std::countr_zero(w));
    return out;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : to_vector()) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

Graph::Graph(int order) : order_(order), adj_(static_cast<std::size_t>(order), 0) {
    if (order < 1 || order > kMaxOrder) throw std::invalid_argument("graph order out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, order_, "edge endpoint");
    check_vertex(v, order_, "edge endpoint");
    if (u == v) throw std::invalid_argument("loop edges are not allowed");
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < order_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order_; ++u)
        for (std::uint64_t w = adj_[u] & ~(detail::full_mask(u + 1)); w; w &= w - 1)
            out.emplace_back(u, std::countr_zero(w));
    return out;
}

VertexSet Graph::neighbors(int v) const { return VertexSet::from_mask(order_, adj_[v]); }

VertexSet Graph::all_vertices() const {
    return VertexSet::from_mask(order_, detail::full_mask(order_));
}

Graph graph_from_edges(int order, std::span<const std::pair<int, int>> edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (std::uint64_t w = ~g.adjacency_word(u) & detail::full_mask(n) & ~(1ull << u); w;
             w &= w - 1)
            out.add_edge(u, std::countr_zero(w));
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("induced subgraph of an empty set");
    std::vector<int> map = s.to_vector();
    Graph sub(static_cast<int>(map.size()));
    for (std::size_t i = 0; i < map.size(); ++i)
        for (std::size_t j = i + 1; j < map.size(); ++j)
            if (g.has_edge(map[i], map[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return {std::move(sub), std::move(map)};
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs order >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace gpkit
