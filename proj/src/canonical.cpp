#include "gpkit/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace gpkit {

namespace {

// Assigns vertices to positions 0..n-1 one at a time, restricted to
// orderings whose degree sequence is non-increasing. Placing position k
// fixes the column-k bits of the upper triangle, which extend the bit
// string by a prefix, so branches whose prefix already exceeds the best
// completed string can be cut.
struct KeySearch {
    const Graph& g;
    int n;
    std::vector<int> target_degree;  // degree required at each position
    std::uint64_t best = ~0ull;      // left-aligned bit string, all-ones = unset
    int perm[kCanonicalOrderCap] = {};

    void run(int k, std::uint64_t acc, int bits_used, std::uint64_t used) {
        if (k == n) {
            if (acc < best) best = acc;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            if (g.degree(v) != target_degree[k]) continue;
            std::uint64_t acc2 = acc;
            int bits2 = bits_used;
            for (int i = 0; i < k; ++i, ++bits2)
                if (g.has_edge(perm[i], v)) acc2 |= 1ull << (63 - bits2);
            std::uint64_t mask = bits2 ? ~0ull << (64 - bits2) : 0;
            if (acc2 > (best & mask)) continue;
            perm[k] = v;
            run(k + 1, acc2, bits2, used | (1ull << v));
        }
    }
};

}  // namespace

std::string canonical_key(const Graph& g) {
    int n = g.order();
    if (n > kCanonicalOrderCap)
        throw std::invalid_argument("canonical_key supports order <= " +
                                    std::to_string(kCanonicalOrderCap));
    std::string key;
    key.push_back(static_cast<char>(n));
    if (n == 1) return key;

    KeySearch search{g, n, {}};
    search.target_degree.resize(n);
    for (int v = 0; v < n; ++v) search.target_degree[v] = g.degree(v);
    std::sort(search.target_degree.begin(), search.target_degree.end(), std::greater<>());
    search.run(0, 0, 0, 0);

    int bit_count = n * (n - 1) / 2;
    for (int start = 0; start < bit_count; start += 8) {
        unsigned char byte = 0;
        for (int b = 0; b < 8 && start + b < bit_count; ++b)
            byte |= ((search.best >> (63 - (start + b))) & 1u) << (7 - b);
        key.push_back(static_cast<char>(byte));
    }
    return key;
}

}  // namespace gpkit
