#include "gpkit/enumerate.hpp"

#include <bit>
#include <istream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "gpkit/canonical.hpp"
#include "gpkit/graph6.hpp"
#include "gpkit/metrics.hpp"

namespace gpkit {

namespace {

void check_order(int n) {
    if (n < 1 || n > kEnumerateOrderCap)
        throw std::invalid_argument("enumeration supports orders 1.." +
                                    std::to_string(kEnumerateOrderCap));
}

Graph graph_from_pair_bits(int n, std::uint64_t bits) {
    Graph g(n);
    int bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if ((bits >> bit) & 1) g.add_edge(row, col);
    return g;
}

// Full labeled sweep with canonical-key dedup; fine up to order 6.
std::vector<Graph> connected_by_sweep(int n) {
    std::vector<Graph> reps;
    std::unordered_set<std::string> seen;
    int bit_count = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (1ull << bit_count); ++bits) {
        Graph g = graph_from_pair_bits(n, bits);
        if (!is_connected(g)) continue;
        if (seen.insert(canonical_key(g)).second) reps.push_back(std::move(g));
    }
    return reps;
}

// Every connected graph arises from a connected graph one vertex smaller
// by attaching a new vertex to a nonempty subset (remove any non-cut
// vertex to see it), so extending all representatives and deduping is
// exhaustive without touching the full labeled space.
std::vector<Graph> connected_by_extension(int n, const std::vector<Graph>& smaller) {
    std::vector<Graph> reps;
    std::unordered_set<std::string> seen;
    for (const Graph& h : smaller) {
        for (std::uint64_t attach = 1; attach < (1ull << (n - 1)); ++attach) {
            Graph g(n);
            for (auto [u, v] : h.edge_list()) g.add_edge(u, v);
            for (std::uint64_t w = attach; w; w &= w - 1)
                g.add_edge(n - 1, std::countr_zero(w));
            if (seen.insert(canonical_key(g)).second) reps.push_back(std::move(g));
        }
    }
    return reps;
}

const std::vector<Graph>& fill_reps(int n, std::map<int, std::vector<Graph>>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Graph> reps =
        n <= 6 ? connected_by_sweep(n) : connected_by_extension(n, fill_reps(n - 1, cache));
    return cache.emplace(n, std::move(reps)).first->second;
}

const std::vector<Graph>& connected_reps(int n) {
    static std::map<int, std::vector<Graph>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    return fill_reps(n, cache);
}

void disjoint_unions(int n, int max_part, const std::vector<Graph>& partial,
                     std::vector<Graph>& out) {
    if (n == 0) {
        int total = 0;
        for (const Graph& c : partial) total += c.order();
        Graph g(total);
        int offset = 0;
        for (const Graph& c : partial) {
            for (auto [u, v] : c.edge_list()) g.add_edge(offset + u, offset + v);
            offset += c.order();
        }
        out.push_back(std::move(g));
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        const std::vector<Graph>& reps = connected_reps(part);
        // components of equal order are taken with non-decreasing
        // representative index, so each multiset appears exactly once
        int start = 0;
        if (!partial.empty() && partial.back().order() == part) {
            const Graph& prev = partial.back();
            for (std::size_t i = 0; i < reps.size(); ++i)
                if (reps[i] == prev) {
                    start = static_cast<int>(i);
                    break;
                }
        }
        for (std::size_t i = static_cast<std::size_t>(start); i < reps.size(); ++i) {
            std::vector<Graph> next = partial;
            next.push_back(reps[i]);
            disjoint_unions(n - part, part, next, out);
        }
    }
}

}  // namespace

GraphStream enumerate_connected(int n) {
    check_order(n);
    return {connected_reps(n), "generated"};
}

GraphStream enumerate_all(int n) {
    check_order(n);
    GraphStream stream;
    stream.provenance = "generated";
    disjoint_unions(n, n, {}, stream.graphs);
    return stream;
}

GraphStream read_graph6_stream(std::istream& in, const ReadOptions& options) {
    GraphStream stream;
    stream.provenance = options.provenance;
    std::unordered_set<std::string> seen;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (view.ends_with('\r')) view.remove_suffix(1);
        if (view.empty()) continue;
        try {
            Graph g = parse_graph6(view);
            if (options.dedup && !seen.insert(canonical_key(g)).second) continue;
            stream.graphs.push_back(std::move(g));
        } catch (const ParseError& e) {
            std::string message = "line " + std::to_string(line_no) + ": " + e.what();
            if (options.strict) throw ParseError(message);
            stream.skipped.push_back(std::move(message));
        }
    }
    return stream;
}

Graph random_connected_graph(int n, std::mt19937_64& rng, double min_p, double max_p) {
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("random graph order out of range");
    std::uniform_real_distribution<double> pick_p(min_p, max_p);
    std::bernoulli_distribution coin;
    for (;;) {
        double p = pick_p(rng);
        coin = std::bernoulli_distribution(p);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
}

}  // namespace gpkit
