#include "gpkit/gp_solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "gpkit/clique.hpp"

namespace gpkit {

namespace {

void require_connected(const Graph& g, const char* what) {
    if (!is_connected(g)) throw std::invalid_argument(std::string(what) + " needs a connected graph");
}

// True iff cur + {v} still has no member on a shortest path between two
// others. cur is assumed to pass already, so only triples involving v
// need a look.
bool can_extend(const DistMatrix& d, const std::vector<int>& cur, int v) {
    for (std::size_t i = 0; i < cur.size(); ++i) {
        int x = d.at(cur[i], v);
        for (std::size_t j = i + 1; j < cur.size(); ++j) {
            int y = d.at(cur[j], v);
            int z = d.at(cur[i], cur[j]);
            if (x + y == z || x + z == y || y + z == x) return false;
        }
    }
    return true;
}

// Depth-first search for the lexicographically smallest general position
// set of the given size. Prefixes are pruned by the checker (sound since
// subsets of general position sets stay in general position) and by the
// count of vertices left.
bool lex_witness(const DistMatrix& d, int n, int need, int from, std::vector<int>& cur) {
    if (need == 0) return true;
    for (int v = from; v + need <= n; ++v) {
        if (!can_extend(d, cur, v)) continue;
        cur.push_back(v);
        if (lex_witness(d, n, need - 1, v + 1, cur)) return true;
        cur.pop_back();
    }
    return false;
}

struct ExactSearch {
    const DistMatrix& d;
    const std::vector<int>& order;
    int n;
    int ceiling;
    int best;
    std::vector<int> cur;

    void run(int pos) {
        if (best >= ceiling) return;
        for (int i = pos; i < n; ++i) {
            if (static_cast<int>(cur.size()) + (n - i) <= best) return;
            int v = order[i];
            if (!can_extend(d, cur, v)) continue;
            cur.push_back(v);
            if (static_cast<int>(cur.size()) > best) best = static_cast<int>(cur.size());
            run(i + 1);
            cur.pop_back();
            if (best >= ceiling) return;
        }
    }
};

}  // namespace

VertexSet interval(const DistMatrix& d, int u, int v) {
    if (!d.reachable(u, v)) throw std::invalid_argument("interval of an unreachable pair");
    int n = d.order();
    VertexSet out(n);
    int duv = d.at(u, v);
    for (int w = 0; w < n; ++w)
        if (d.reachable(u, w) && d.reachable(w, v) && d.at(u, w) + d.at(w, v) == duv) out.add(w);
    return out;
}

bool is_gp_definitional(const DistMatrix& d, const VertexSet& s) {
    std::vector<int> m = s.to_vector();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            int z = d.at(m[i], m[j]);
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (k == i || k == j) continue;
                if (d.at(m[i], m[k]) + d.at(m[k], m[j]) == z) return false;
            }
        }
    return true;
}

bool is_gp_definitional(const Graph& g, const VertexSet& s) {
    require_connected(g, "the definitional checker");
    return is_gp_definitional(all_pairs_distances(g), s);
}

std::optional<std::vector<VertexSet>> clique_partition(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("clique partition of an empty set");
    std::vector<VertexSet> parts = components(g, s);
    for (const VertexSet& part : parts)
        if (!is_clique(g, part)) return std::nullopt;
    return parts;
}

std::optional<GpCertificate> gp_structural_certificate(const Graph& g, const DistMatrix& d,
                                                       const VertexSet& s) {
    if (s.empty()) return GpCertificate{};
    auto parts = clique_partition(g, s);
    if (!parts) return std::nullopt;

    int p = static_cast<int>(parts->size());
    std::vector<std::vector<int>> dist(p, std::vector<int>(p, 0));
    std::vector<std::vector<int>> members(p);
    for (int i = 0; i < p; ++i) members[i] = (*parts)[i].to_vector();

    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            int dij = d.at(members[i][0], members[j][0]);
            for (int u : members[i])
                for (int v : members[j])
                    if (d.at(u, v) != dij) return std::nullopt;  // not distance-constant
            dist[i][j] = dist[j][i] = dij;
        }

    for (int i = 0; i < p; ++i)
        for (int k = i + 1; k < p; ++k)
            for (int j = 0; j < p; ++j) {
                if (j == i || j == k) continue;
                if (dist[i][k] == dist[i][j] + dist[j][k]) return std::nullopt;  // transitive
            }

    return GpCertificate{std::move(*parts), std::move(dist)};
}

std::optional<GpCertificate> gp_structural_certificate(const Graph& g, const VertexSet& s) {
    require_connected(g, "the structural checker");
    return gp_structural_certificate(g, all_pairs_distances(g), s);
}

bool is_gp_structural(const Graph& g, const VertexSet& s) {
    return gp_structural_certificate(g, s).has_value();
}

GpResult gp_bruteforce(const Graph& g) {
    require_connected(g, "gp_bruteforce");
    int n = g.order();
    if (n > kBruteforceOrderCap)
        throw std::invalid_argument("gp_bruteforce is capped at order " +
                                    std::to_string(kBruteforceOrderCap));
    DistMatrix d = all_pairs_distances(g);
    for (int k = n; k >= 1; --k) {
        std::vector<int> pick(static_cast<std::size_t>(k));
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            VertexSet s = VertexSet::from_indices(n, pick);
            if (is_gp_definitional(d, s)) return {k, s};
            // next k-combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw std::logic_error("unreachable: singletons are always in general position");
}

GpResult gp_exact(const Graph& g) {
    require_connected(g, "gp_exact");
    int n = g.order();
    DistMatrix d = all_pairs_distances(g);
    int ceiling = n == 1 ? 1 : n - d.max_distance() + 1;

    int best = max_clique(g).count();
    if (best < ceiling) {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        ExactSearch search{d, order, n, ceiling, best, {}};
        search.run(0);
        best = search.best;
    }

    std::vector<int> cur;
    if (!lex_witness(d, n, best, 0, cur))
        throw std::logic_error("no witness of the computed size");
    return {best, VertexSet::from_indices(n, cur)};
}

int eta(const Graph& g) {
    require_connected(g, "eta");
    int n = g.order();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    int best = 0;
    std::vector<std::uint64_t> blocks;
    std::uint64_t chosen = 0;
    // grow a set whose induced subgraph stays a disjoint union of cliques:
    // each new vertex either starts a block or extends exactly one block
    // it is fully adjacent to
    auto dfs = [&](auto&& self, int pos, int count) -> void {
        if (count > best) best = count;
        for (int i = pos; i < n; ++i) {
            if (count + (n - i) <= best) return;
            int v = order[i];
            std::uint64_t hit = g.adjacency_word(v) & chosen;
            int block = -1;
            if (hit != 0) {
                for (std::size_t b = 0; b < blocks.size(); ++b)
                    if (blocks[b] == hit) {
                        block = static_cast<int>(b);
                        break;
                    }
                if (block < 0) continue;
            }
            chosen |= 1ull << v;
            if (block < 0) {
                blocks.push_back(1ull << v);
                self(self, i + 1, count + 1);
                blocks.pop_back();
            } else {
                blocks[block] |= 1ull << v;
                self(self, i + 1, count + 1);
                blocks[block] &= ~(1ull << v);
            }
            chosen &= ~(1ull << v);
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

int gp_diameter2(const Graph& g) {
    require_connected(g, "gp_diameter2");
    if (g.order() < 2 || diameter(g) != 2)
        throw std::invalid_argument("gp_diameter2 needs a graph of diameter 2");
    return std::max(clique_number(g), eta(g));
}

int gp_upper_bound(const Graph& g) {
    require_connected(g, "gp_upper_bound");
    return g.order() - diameter(g) + 1;
}

}  // namespace gpkit
