#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>

#include "gpkit/clique.hpp"

namespace oracle {

using gpkit::Graph;
using gpkit::VertexSet;

std::string g6_encode(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1 || n > 62) throw std::invalid_argument("oracle encoder handles 1..62 vertices");
    std::vector<int> bits;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            bool present = false;
            for (auto [a, b] : edges)
                if ((a == row && b == col) || (a == col && b == row)) present = true;
            bits.push_back(present ? 1 : 0);
        }
    while (bits.size() % 6 != 0) bits.push_back(0);
    std::string out(1, static_cast<char>(n + 63));
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b) value = value * 2 + bits[i + b];
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

std::pair<int, std::vector<std::pair<int, int>>> g6_decode(const std::string& record) {
    if (record.empty()) throw std::invalid_argument("empty record");
    int n = static_cast<unsigned char>(record[0]) - 63;
    std::vector<int> bits;
    for (std::size_t i = 1; i < record.size(); ++i) {
        int value = static_cast<unsigned char>(record[i]) - 63;
        for (int b = 5; b >= 0; --b) bits.push_back((value >> b) & 1);
    }
    std::vector<std::pair<int, int>> edges;
    std::size_t k = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++k)
            if (k < bits.size() && bits[k]) edges.emplace_back(row, col);
    return {n, edges};
}

int clique_number_subsets(const Graph& g) {
    int n = g.order();
    int best = 0;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        bool clique = true;
        for (std::uint64_t a = mask; a && clique; a &= a - 1) {
            int u = std::countr_zero(a);
            for (std::uint64_t b = a & (a - 1); b && clique; b &= b - 1)
                if (!g.has_edge(u, std::countr_zero(b))) clique = false;
        }
        if (clique) best = std::max(best, std::popcount(mask));
    }
    return best;
}

int eta_subsets(const Graph& g) {
    int n = g.order();
    int best = 0;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        bool all_cliques = true;
        for (const VertexSet& comp : gpkit::components(g, VertexSet::from_mask(n, mask)))
            if (!gpkit::is_clique(g, comp)) {
                all_cliques = false;
                break;
            }
        if (all_cliques) best = std::max(best, std::popcount(mask));
    }
    return best;
}

std::optional<int> girth_edge_deletion(const Graph& g) {
    int n = g.order();
    int best = -1;
    for (auto [u, v] : g.edge_list()) {
        Graph cut(n);
        for (auto [a, b] : g.edge_list())
            if (!(a == u && b == v)) cut.add_edge(a, b);
        // BFS distance u -> v without the edge
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<int> queue{u};
        dist[u] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int w = queue[head];
            for (std::uint64_t m = cut.adjacency_word(w); m; m &= m - 1) {
                int x = std::countr_zero(m);
                if (dist[x] < 0) {
                    dist[x] = dist[w] + 1;
                    queue.push_back(x);
                }
            }
        }
        if (dist[v] >= 0 && (best < 0 || dist[v] + 1 < best)) best = dist[v] + 1;
    }
    if (best < 0) return std::nullopt;
    return best;
}

namespace {

bool extend_mapping(const Graph& a, const Graph& b, std::vector<int>& map, std::uint64_t used,
                    int next) {
    int n = a.order();
    if (next == n) return true;
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1) continue;
        if (a.degree(next) != b.degree(w)) continue;
        bool fits = true;
        for (int prev = 0; prev < next && fits; ++prev)
            if (a.has_edge(prev, next) != b.has_edge(map[prev], w)) fits = false;
        if (!fits) continue;
        map[next] = w;
        if (extend_mapping(a, b, map, used | (1ull << w), next + 1)) return true;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map(static_cast<std::size_t>(a.order()), -1);
    return extend_mapping(a, b, map, 0, 0);
}

namespace {

// Per-vertex profile of (degree, sorted distance row, triangle count),
// sorted across vertices: isomorphic graphs always agree on it.
std::vector<int> invariant_profile(const Graph& g) {
    int n = g.order();
    gpkit::DistMatrix d = gpkit::all_pairs_distances(g);
    std::vector<std::vector<int>> rows;
    for (int v = 0; v < n; ++v) {
        std::vector<int> row;
        row.push_back(g.degree(v));
        int triangles = 0;
        for (std::uint64_t m = g.adjacency_word(v); m; m &= m - 1)
            triangles += std::popcount(g.adjacency_word(std::countr_zero(m)) & g.adjacency_word(v));
        row.push_back(triangles);
        std::vector<int> dists;
        for (int u = 0; u < n; ++u) dists.push_back(d.reachable(v, u) ? d.at(v, u) : -1);
        std::sort(dists.begin(), dists.end());
        row.insert(row.end(), dists.begin(), dists.end());
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    std::vector<int> flat;
    for (auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
}

Graph from_pair_bits(int n, std::uint64_t bits) {
    Graph g(n);
    int k = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++k)
            if ((bits >> k) & 1) g.add_edge(row, col);
    return g;
}

long count_isoclasses(int n, bool connected_only) {
    if (n < 1 || n > 7) throw std::invalid_argument("oracle count handles 1..7 vertices");
    std::map<std::vector<int>, std::vector<Graph>> buckets;
    long classes = 0;
    int bit_count = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (1ull << bit_count); ++bits) {
        Graph g = from_pair_bits(n, bits);
        if (connected_only && !gpkit::is_connected(g)) continue;
        std::vector<Graph>& bucket = buckets[invariant_profile(g)];
        bool seen = false;
        for (const Graph& rep : bucket)
            if (isomorphic(rep, g)) {
                seen = true;
                break;
            }
        if (!seen) {
            bucket.push_back(std::move(g));
            ++classes;
        }
    }
    return classes;
}

}  // namespace

long count_connected_isoclasses(int n) { return count_isoclasses(n, true); }

long count_all_isoclasses(int n) { return count_isoclasses(n, false); }

std::string certificate_violation(const Graph& g, const VertexSet& s,
                                  const gpkit::GpCertificate& cert) {
    gpkit::DistMatrix d = gpkit::all_pairs_distances(g);
    std::uint64_t covered = 0;
    for (const VertexSet& block : cert.blocks) {
        if (block.empty()) return "empty block";
        if (covered & block.mask()) return "blocks overlap";
        covered |= block.mask();
        if (!gpkit::is_clique(g, block)) return "block is not a clique";
    }
    if (covered != s.mask()) return "blocks do not cover the set";
    std::size_t p = cert.blocks.size();
    if (cert.block_distance.size() != p) return "distance matrix has wrong shape";
    for (const auto& row : cert.block_distance)
        if (row.size() != p) return "distance matrix has wrong shape";
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            if (i == j) continue;
            if (cert.block_distance[i][j] != cert.block_distance[j][i])
                return "distance matrix is not symmetric";
            if (cert.block_distance[i][j] < 1) return "block distance below 1";
            for (int u : cert.blocks[i].to_vector())
                for (int v : cert.blocks[j].to_vector())
                    if (d.at(u, v) != cert.block_distance[i][j])
                        return "blocks are not distance-constant";
        }
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t k = 0; k < p; ++k) {
                if (i == j || j == k || i == k) continue;
                if (cert.block_distance[i][k] ==
                    cert.block_distance[i][j] + cert.block_distance[j][k])
                    return "partition is transitive through a block";
            }
    return {};
}

Graph random_graph(int n, std::uint64_t seed, double p) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (auto [u, v] : g.edge_list()) out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace oracle
