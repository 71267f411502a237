#include "gpkit/metrics.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace gpkit {

DistMatrix::DistMatrix(int order)
    : order_(order), d_(static_cast<std::size_t>(order) * order, -1) {}

int DistMatrix::at(int u, int v) const {
    if (u < 0 || u >= order_ || v < 0 || v >= order_)
        throw std::out_of_range("distance query out of range");
    std::int16_t value = d_[idx(u, v)];
    if (value < 0) throw std::logic_error("distance requested for an unreachable pair");
    return value;
}

bool DistMatrix::all_reachable() const {
    for (std::int16_t value : d_)
        if (value < 0) return false;
    return true;
}

int DistMatrix::max_distance() const {
    int best = 0;
    for (std::int16_t value : d_)
        if (value > best) best = value;
    return best;
}

DistMatrix all_pairs_distances(const Graph& g) {
    int n = g.order();
    DistMatrix d(n);
    for (int s = 0; s < n; ++s) {
        std::uint64_t visited = 1ull << s;
        std::uint64_t frontier = visited;
        int depth = 0;
        d.set(s, s, 0);
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t w = frontier; w; w &= w - 1)
                next |= g.adjacency_word(std::countr_zero(w));
            next &= ~visited;
            ++depth;
            for (std::uint64_t w = next; w; w &= w - 1) d.set(s, std::countr_zero(w), depth);
            visited |= next;
            frontier = next;
        }
    }
    return d;
}

bool is_connected(const Graph& g) {
    int n = g.order();
    std::uint64_t visited = 1ull, frontier = 1ull;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t w = frontier; w; w &= w - 1)
            next |= g.adjacency_word(std::countr_zero(w));
        next &= ~visited;
        visited |= next;
        frontier = next;
    }
    return visited == detail::full_mask(n);
}

int diameter(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("diameter needs order >= 2");
    DistMatrix d = all_pairs_distances(g);
    if (!d.all_reachable()) throw std::invalid_argument("diameter of a disconnected graph");
    return d.max_distance();
}

std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
    int n = g.order();
    int best_len = std::numeric_limits<int>::max();
    int best_s = -1, best_u = -1, best_w = -1;
    std::vector<int> best_parent;

    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        for (int v = 0; v < n; ++v) dist[v] = -1;
        dist[s] = 0;
        parent[s] = -1;
        std::vector<int> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (std::uint64_t w = g.adjacency_word(u); w; w &= w - 1) {
                int v = std::countr_zero(w);
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v > u && parent[v] != u && parent[u] != v) {
                    // non-tree edge closing a cycle through s
                    int len = dist[u] + dist[v] + 1;
                    if (len < best_len) {
                        best_len = len;
                        best_s = s;
                        best_u = u;
                        best_w = v;
                        best_parent = parent;
                    }
                }
            }
        }
    }
    if (best_s < 0) return std::nullopt;

    // At the optimum the two parent paths meet only at the root, so the
    // concatenation is a simple cycle of exactly best_len vertices.
    std::vector<int> left, right;
    for (int v = best_u; v != -1; v = best_parent[v]) left.push_back(v);
    for (int v = best_w; v != -1; v = best_parent[v]) right.push_back(v);
    std::vector<int> cycle(left.rbegin(), left.rend());  // s .. best_u
    cycle.insert(cycle.end(), right.begin(), right.end() - 1);  // best_w .. (s excluded)
    if (static_cast<int>(cycle.size()) != best_len)
        throw std::logic_error("shortest-cycle reconstruction went wrong");
    return cycle;
}

std::optional<int> girth(const Graph& g) {
    auto cycle = shortest_cycle(g);
    if (!cycle) return std::nullopt;
    return static_cast<int>(cycle->size());
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
    int n = g.order();
    std::vector<VertexSet> out;
    std::uint64_t remaining = within.mask();
    while (remaining) {
        std::uint64_t comp = remaining & -remaining;
        for (;;) {
            std::uint64_t grown = comp;
            for (std::uint64_t w = comp; w; w &= w - 1)
                grown |= g.adjacency_word(std::countr_zero(w));
            grown &= within.mask();
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(VertexSet::from_mask(n, comp));
        remaining &= ~comp;
    }
    return out;
}

}  // namespace gpkit
