#include "gpkit/clique.hpp"

#include <bit>

namespace gpkit {

namespace {

struct CliqueSearch {
    const Graph& g;
    std::uint64_t best_set = 0;
    int best = 0;

    void expand(std::uint64_t current, int size, std::uint64_t candidates) {
        if (!candidates) {
            if (size > best) {
                best = size;
                best_set = current;
            }
            return;
        }
        // Greedy coloring of the candidates; a vertex of color c extends
        // the clique by at most c more vertices.
        int order[kMaxOrder], color[kMaxOrder], count = 0;
        std::uint64_t uncolored = candidates;
        for (int c = 1; uncolored; ++c) {
            std::uint64_t cls = uncolored;
            while (cls) {
                int v = std::countr_zero(cls);
                cls &= ~(g.adjacency_word(v) | (1ull << v));
                uncolored &= ~(1ull << v);
                order[count] = v;
                color[count] = c;
                ++count;
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (size + color[i] <= best) return;
            int v = order[i];
            expand(current | (1ull << v), size + 1, candidates & g.adjacency_word(v));
            candidates &= ~(1ull << v);
        }
    }
};

}  // namespace

bool is_clique(const Graph& g, const VertexSet& s) {
    std::uint64_t mask = s.mask();
    for (std::uint64_t w = mask; w; w &= w - 1) {
        int v = std::countr_zero(w);
        if ((g.adjacency_word(v) & mask) != (mask & ~(1ull << v))) return false;
    }
    return true;
}

VertexSet max_clique(const Graph& g) {
    CliqueSearch search{g};
    search.expand(0, 0, detail::full_mask(g.order()));
    return VertexSet::from_mask(g.order(), search.best_set);
}

int clique_number(const Graph& g) { return max_clique(g).count(); }

}  // namespace gpkit
