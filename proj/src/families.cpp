#include "gpkit/families.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "gpkit/clique.hpp"
#include "gpkit/graph6.hpp"
#include "gpkit/metrics.hpp"

namespace gpkit {

namespace {

[[noreturn]] void bad_params(const std::string& why) { throw std::invalid_argument(why); }

std::vector<int> normalized(std::vector<int> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

void check_sizes(const std::vector<int>& sizes, const char* what) {
    for (int s : sizes)
        if (s < 1) bad_params(std::string(what) + " clique sizes must be >= 1");
}

void check_attach(const std::vector<int>& attach, int lo, int hi, const char* what) {
    for (int v : attach)
        if (v < lo || v > hi)
            bad_params(std::string(what) + " attachment label outside the block range");
}

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

// Appends a clique on `size` fresh vertices, joining each to every vertex
// in `joins`. Returns the first label of the block.
int add_block(Graph& g, int& cursor, int size, std::initializer_list<int> joins) {
    int first = cursor;
    for (int i = 0; i < size; ++i) {
        int v = cursor++;
        for (int u = first; u < v; ++u) g.add_edge(u, v);
        for (int j : joins) g.add_edge(j, v);
    }
    return first;
}

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) return true;
    return false;
}

Graph build_f1(const PendantsOnCycleParams& p) {
    if (p.pendant_count < 1) bad_params("F1 needs at least one pendant vertex");
    Graph g(4 + p.pendant_count);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    for (int i = 0; i < p.pendant_count; ++i) g.add_edge(0, 4 + i);
    return g;
}

Graph build_f2(const TwoCenterCliquesParams& p) {
    if (p.x_cliques.empty() || p.y_cliques.empty())
        bad_params("F2 needs at least one x-only and one y-only clique");
    check_sizes(p.x_cliques, "F2");
    check_sizes(p.y_cliques, "F2");
    check_sizes(p.shared_cliques, "F2");
    Graph g(2 + sum(p.x_cliques) + sum(p.y_cliques) + sum(p.shared_cliques));
    g.add_edge(0, 1);
    int cursor = 2;
    for (int s : p.x_cliques) add_block(g, cursor, s, {0});
    for (int s : p.y_cliques) add_block(g, cursor, s, {1});
    for (int s : p.shared_cliques) add_block(g, cursor, s, {0, 1});
    return g;
}

Graph build_f3(const TailCliqueParams& p) {
    if (p.clique_size < 1) bad_params("F3 needs a clique of size >= 1");
    std::vector<int> attach = normalized(p.y_attach);
    check_attach(attach, 4, 3 + p.clique_size, "F3");
    Graph g(4 + p.clique_size);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    int cursor = 4;
    add_block(g, cursor, p.clique_size, {0, 1});
    for (int v : attach) g.add_edge(2, v);
    return g;
}

Graph build_f4(const ThreeKindCliquesParams& p) {
    if (p.shared_clique < 0) bad_params("F4 shared clique size must be >= 0");
    if (p.x_cliques.empty()) bad_params("F4 needs at least one clique joined to x only");
    if (p.xv_cliques.empty()) bad_params("F4 needs at least one clique joined to x and v");
    check_sizes(p.x_cliques, "F4");
    check_sizes(p.xv_cliques, "F4");
    Graph g(3 + p.shared_clique + sum(p.x_cliques) + sum(p.xv_cliques));
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    int cursor = 3;
    if (p.shared_clique > 0) add_block(g, cursor, p.shared_clique, {0, 1});
    for (int s : p.x_cliques) add_block(g, cursor, s, {0});
    for (int s : p.xv_cliques) add_block(g, cursor, s, {0, 2});
    return g;
}

Graph build_f5_f6(const CliquePlusTwoParams& p, bool add_uv_edge) {
    const char* name = add_uv_edge ? "F6" : "F5";
    if (p.base_size < 3) bad_params(std::string(name) + " needs a base clique of size >= 3");
    std::vector<int> s = normalized(p.u_attach);
    std::vector<int> t = normalized(p.v_attach);
    check_attach(s, 2, 1 + p.base_size, name);
    check_attach(t, 2, 1 + p.base_size, name);
    if (s.empty() || t.empty()) bad_params(std::string(name) + " attachment sets must be nonempty");
    if (static_cast<int>(s.size()) > p.base_size - 1 ||
        static_cast<int>(t.size()) > p.base_size - 1)
        bad_params(std::string(name) + " attachment sets must miss at least one base vertex");
    if (!add_uv_edge && !intersects(s, t))
        bad_params("F5 attachment sets must intersect");
    Graph g(2 + p.base_size);
    int cursor = 2;
    add_block(g, cursor, p.base_size, {});
    for (int v : s) g.add_edge(0, v);
    for (int v : t) g.add_edge(1, v);
    if (add_uv_edge) g.add_edge(0, 1);
    return g;
}

Graph build_f7_f8(const BlocksPlusTwoParams& p, bool add_xy_edge) {
    const char* name = add_xy_edge ? "F8" : "F7";
    int r = static_cast<int>(p.clique_sizes.size());
    if (r < 2) bad_params(std::string(name) + " needs at least two clique blocks");
    check_sizes(p.clique_sizes, name);
    if (static_cast<int>(p.x_attach.size()) != r || static_cast<int>(p.y_attach.size()) != r)
        bad_params(std::string(name) + " needs one attachment set per block for both x and y");

    Graph g(2 + sum(p.clique_sizes));
    int cursor = 2;
    bool some_common = false;
    for (int i = 0; i < r; ++i) {
        int first = add_block(g, cursor, p.clique_sizes[i], {});
        int last = cursor - 1;
        std::vector<int> s = normalized(p.x_attach[i]);
        std::vector<int> t = normalized(p.y_attach[i]);
        check_attach(s, first, last, name);
        check_attach(t, first, last, name);
        if (s.empty() || t.empty())
            bad_params(std::string(name) + " attachment sets must be nonempty in every block");
        for (int v : s) g.add_edge(0, v);
        for (int v : t) g.add_edge(1, v);
        if (intersects(s, t)) some_common = true;
    }
    if (add_xy_edge)
        g.add_edge(0, 1);
    else if (!some_common)
        bad_params("F7 needs intersecting attachment sets in some block");
    if (diameter(g) != 2)
        bad_params(std::string(name) + " attachment pattern leaves a pair at distance 3");
    return g;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::F1: return "F1";
        case Family::F2: return "F2";
        case Family::F3: return "F3";
        case Family::F4: return "F4";
        case Family::F5: return "F5";
        case Family::F6: return "F6";
        case Family::F7: return "F7";
        case Family::F8: return "F8";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4, Family::F5, Family::F6,
                     Family::F7, Family::F8})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

FamilyInstance f1_instance(int k) { return {Family::F1, PendantsOnCycleParams{k}}; }

FamilyInstance f2_instance(std::vector<int> x, std::vector<int> y, std::vector<int> shared) {
    return {Family::F2, TwoCenterCliquesParams{std::move(x), std::move(y), std::move(shared)}};
}

FamilyInstance f3_instance(int size, std::vector<int> y_attach) {
    return {Family::F3, TailCliqueParams{size, std::move(y_attach)}};
}

FamilyInstance f4_instance(int q, std::vector<int> x, std::vector<int> xv) {
    return {Family::F4, ThreeKindCliquesParams{q, std::move(x), std::move(xv)}};
}

FamilyInstance f5_instance(int base, std::vector<int> u, std::vector<int> v) {
    return {Family::F5, CliquePlusTwoParams{base, std::move(u), std::move(v)}};
}

FamilyInstance f6_instance(int base, std::vector<int> u, std::vector<int> v) {
    return {Family::F6, CliquePlusTwoParams{base, std::move(u), std::move(v)}};
}

FamilyInstance f7_instance(std::vector<int> sizes, std::vector<std::vector<int>> x,
                           std::vector<std::vector<int>> y) {
    return {Family::F7, BlocksPlusTwoParams{std::move(sizes), std::move(x), std::move(y)}};
}

FamilyInstance f8_instance(std::vector<int> sizes, std::vector<std::vector<int>> x,
                           std::vector<std::vector<int>> y) {
    return {Family::F8, BlocksPlusTwoParams{std::move(sizes), std::move(x), std::move(y)}};
}

Graph generate(const FamilyInstance& inst) {
    switch (inst.label) {
        case Family::F1: return build_f1(std::get<PendantsOnCycleParams>(inst.params));
        case Family::F2: return build_f2(std::get<TwoCenterCliquesParams>(inst.params));
        case Family::F3: return build_f3(std::get<TailCliqueParams>(inst.params));
        case Family::F4: return build_f4(std::get<ThreeKindCliquesParams>(inst.params));
        case Family::F5: return build_f5_f6(std::get<CliquePlusTwoParams>(inst.params), false);
        case Family::F6: return build_f5_f6(std::get<CliquePlusTwoParams>(inst.params), true);
        case Family::F7: return build_f7_f8(std::get<BlocksPlusTwoParams>(inst.params), false);
        case Family::F8: return build_f7_f8(std::get<BlocksPlusTwoParams>(inst.params), true);
    }
    bad_params("unknown family label");
}

std::optional<Graph> try_generate(const FamilyInstance& inst, std::string* reason) {
    try {
        return generate(inst);
    } catch (const std::invalid_argument& e) {
        if (reason) *reason = e.what();
        return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Recognizers. Each searches candidate role assignments in ascending label
// order, so the first realization found is deterministic, and returns the
// parameters plus the input-to-generated relabeling.

namespace {

bool subset_of(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

std::vector<int> map_sorted(const std::vector<int>& inputs, int first, std::vector<int>& map) {
    std::vector<int> generated;
    generated.reserve(inputs.size());
    int cursor = first;
    for (int v : inputs) {
        map[v] = cursor;
        generated.push_back(cursor);
        ++cursor;
    }
    return generated;
}

std::optional<FamilyMatch> recognize_f1(const Graph& g) {
    int n = g.order();
    if (n < 5) return std::nullopt;
    for (int a = 0; a < n; ++a) {
        if (g.degree(a) < 3) continue;
        std::vector<int> nbr = g.neighbors(a).to_vector();
        for (std::size_t i = 0; i < nbr.size(); ++i) {
            int b = nbr[i];
            if (g.degree(b) != 2) continue;
            for (std::size_t j = i + 1; j < nbr.size(); ++j) {
                int d = nbr[j];
                if (g.degree(d) != 2) continue;
                std::uint64_t common = g.adjacency_word(b) & g.adjacency_word(d) & ~(1ull << a);
                for (std::uint64_t w = common; w; w &= w - 1) {
                    int c = std::countr_zero(w);
                    if (g.degree(c) != 2) continue;
                    // a-b-c-d-a is a 4-cycle with b, c, d of degree 2;
                    // everything else must be a pendant on a
                    std::uint64_t rest =
                        detail::full_mask(n) & ~(1ull << a) & ~(1ull << b) & ~(1ull << c) & ~(1ull << d);
                    bool ok = true;
                    std::vector<int> pendants;
                    for (std::uint64_t r = rest; r && ok; r &= r - 1) {
                        int v = std::countr_zero(r);
                        if (g.degree(v) != 1 || !g.has_edge(a, v)) ok = false;
                        pendants.push_back(v);
                    }
                    if (!ok) continue;
                    std::vector<int> map(static_cast<std::size_t>(n), -1);
                    map[a] = 0;
                    map[b] = 1;
                    map[c] = 2;
                    map[d] = 3;
                    map_sorted(pendants, 4, map);
                    return FamilyMatch{f1_instance(n - 4), std::move(map)};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<FamilyMatch> recognize_f2(const Graph& g) {
    int n = g.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || !g.has_edge(x, y)) continue;
            std::uint64_t rest = detail::full_mask(n) & ~(1ull << x) & ~(1ull << y);
            if (!rest) continue;
            std::vector<VertexSet> comps = components(g, VertexSet::from_mask(n, rest));
            std::vector<const VertexSet*> only_x, only_y, both;
            bool ok = true;
            for (const VertexSet& comp : comps) {
                if (!is_clique(g, comp)) {
                    ok = false;
                    break;
                }
                std::uint64_t m = comp.mask();
                bool fx = subset_of(m, g.adjacency_word(x));
                bool nx = (m & g.adjacency_word(x)) == 0;
                bool fy = subset_of(m, g.adjacency_word(y));
                bool ny = (m & g.adjacency_word(y)) == 0;
                if (fx && ny)
                    only_x.push_back(&comp);
                else if (nx && fy)
                    only_y.push_back(&comp);
                else if (fx && fy)
                    both.push_back(&comp);
                else {
                    ok = false;
                    break;
                }
            }
            if (!ok || only_x.empty() || only_y.empty()) continue;
            std::vector<int> map(static_cast<std::size_t>(n), -1);
            map[x] = 0;
            map[y] = 1;
            int cursor = 2;
            std::vector<int> rs, ss, ts;
            for (auto* group : {&only_x, &only_y, &both})
                for (const VertexSet* comp : *group) {
                    std::vector<int> members = comp->to_vector();
                    map_sorted(members, cursor, map);
                    cursor += static_cast<int>(members.size());
                    (group == &only_x ? rs : group == &only_y ? ss : ts)
                        .push_back(static_cast<int>(members.size()));
                }
            return FamilyMatch{f2_instance(rs, ss, ts), std::move(map)};
        }
    return std::nullopt;
}

std::optional<FamilyMatch> recognize_f3(const Graph& g) {
    int n = g.order();
    if (n < 5) return std::nullopt;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 1) continue;
        int y = std::countr_zero(g.adjacency_word(v));
        for (std::uint64_t xs = g.adjacency_word(y) & ~(1ull << v); xs; xs &= xs - 1) {
            int x = std::countr_zero(xs);
            for (int u = 0; u < n; ++u) {
                if (u == v || u == x || u == y) continue;
                std::uint64_t block = detail::full_mask(n) & ~(1ull << u) & ~(1ull << x) &
                                      ~(1ull << y) & ~(1ull << v);
                if (!is_clique(g, VertexSet::from_mask(n, block))) continue;
                if (g.adjacency_word(u) != (block | (1ull << x))) continue;
                if (g.adjacency_word(x) != (block | (1ull << u) | (1ull << y))) continue;
                std::uint64_t y_adj = g.adjacency_word(y);
                if ((y_adj & ~(block | (1ull << x) | (1ull << v))) != 0) continue;
                std::vector<int> map(static_cast<std::size_t>(n), -1);
                map[u] = 0;
                map[x] = 1;
                map[y] = 2;
                map[v] = 3;
                std::vector<int> members = VertexSet::from_mask(n, block).to_vector();
                map_sorted(members, 4, map);
                std::vector<int> attach;
                for (int w : members)
                    if (g.has_edge(y, w)) attach.push_back(map[w]);
                return FamilyMatch{f3_instance(n - 4, attach), std::move(map)};
            }
        }
    }
    return std::nullopt;
}

std::optional<FamilyMatch> recognize_f4(const Graph& g) {
    int n = g.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (y == x || !g.has_edge(x, y)) continue;
            for (int v = 0; v < n; ++v) {
                if (v == x || v == y || !g.has_edge(y, v) || g.has_edge(x, v)) continue;
                std::uint64_t rest =
                    detail::full_mask(n) & ~(1ull << x) & ~(1ull << y) & ~(1ull << v);
                if (!rest) continue;
                std::vector<VertexSet> comps = components(g, VertexSet::from_mask(n, rest));
                std::vector<const VertexSet*> shared, xonly, xv;
                bool ok = true;
                for (const VertexSet& comp : comps) {
                    if (!is_clique(g, comp)) {
                        ok = false;
                        break;
                    }
                    std::uint64_t m = comp.mask();
                    bool fx = subset_of(m, g.adjacency_word(x));
                    bool fy = subset_of(m, g.adjacency_word(y));
                    bool ny = (m & g.adjacency_word(y)) == 0;
                    bool fv = subset_of(m, g.adjacency_word(v));
                    bool nv = (m & g.adjacency_word(v)) == 0;
                    if (fx && fy && nv)
                        shared.push_back(&comp);
                    else if (fx && ny && nv)
                        xonly.push_back(&comp);
                    else if (fx && ny && fv)
                        xv.push_back(&comp);
                    else {
                        ok = false;
                        break;
                    }
                }
                if (!ok || shared.size() > 1 || xonly.empty() || xv.empty()) continue;
                std::vector<int> map(static_cast<std::size_t>(n), -1);
                map[x] = 0;
                map[y] = 1;
                map[v] = 2;
                int cursor = 3;
                int q = 0;
                std::vector<int> xsizes, xvsizes;
                for (auto* group : {&shared, &xonly, &xv})
                    for (const VertexSet* comp : *group) {
                        std::vector<int> members = comp->to_vector();
                        map_sorted(members, cursor, map);
                        cursor += static_cast<int>(members.size());
                        int size = static_cast<int>(members.size());
                        if (group == &shared)
                            q = size;
                        else if (group == &xonly)
                            xsizes.push_back(size);
                        else
                            xvsizes.push_back(size);
                    }
                return FamilyMatch{f4_instance(q, xsizes, xvsizes), std::move(map)};
            }
        }
    return std::nullopt;
}

std::optional<FamilyMatch> recognize_f5_f6(const Graph& g, bool with_uv_edge) {
    int n = g.order();
    if (n < 5) return std::nullopt;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v) != with_uv_edge) continue;
            std::uint64_t base = detail::full_mask(n) & ~(1ull << u) & ~(1ull << v);
            if (!is_clique(g, VertexSet::from_mask(n, base))) continue;
            std::uint64_t s = g.adjacency_word(u) & base;
            std::uint64_t t = g.adjacency_word(v) & base;
            int smax = n - 3;
            if (s == 0 || t == 0 || std::popcount(s) > smax || std::popcount(t) > smax) continue;
            if (!with_uv_edge && (s & t) == 0) continue;
            std::vector<int> map(static_cast<std::size_t>(n), -1);
            map[u] = 0;
            map[v] = 1;
            std::vector<int> members = VertexSet::from_mask(n, base).to_vector();
            map_sorted(members, 2, map);
            std::vector<int> s_gen, t_gen;
            for (int w : members) {
                if ((s >> w) & 1) s_gen.push_back(map[w]);
                if ((t >> w) & 1) t_gen.push_back(map[w]);
            }
            FamilyInstance inst = with_uv_edge ? f6_instance(n - 2, s_gen, t_gen)
                                               : f5_instance(n - 2, s_gen, t_gen);
            return FamilyMatch{std::move(inst), std::move(map)};
        }
    return std::nullopt;
}

std::optional<FamilyMatch> recognize_f7_f8(const Graph& g, const DistMatrix& dist,
                                           bool with_xy_edge) {
    int n = g.order();
    if (dist.max_distance() != 2) return std::nullopt;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.has_edge(x, y) != with_xy_edge) continue;
            std::uint64_t rest = detail::full_mask(n) & ~(1ull << x) & ~(1ull << y);
            if (!rest) continue;
            std::vector<VertexSet> comps = components(g, VertexSet::from_mask(n, rest));
            if (comps.size() < 2) continue;
            bool ok = true;
            bool some_common = false;
            for (const VertexSet& comp : comps) {
                if (!is_clique(g, comp)) {
                    ok = false;
                    break;
                }
                std::uint64_t sx = g.adjacency_word(x) & comp.mask();
                std::uint64_t sy = g.adjacency_word(y) & comp.mask();
                if (sx == 0 || sy == 0) {
                    ok = false;
                    break;
                }
                if (sx & sy) some_common = true;
            }
            if (!ok) continue;
            if (!with_xy_edge && !some_common) continue;
            std::vector<int> map(static_cast<std::size_t>(n), -1);
            map[x] = 0;
            map[y] = 1;
            int cursor = 2;
            std::vector<int> sizes;
            std::vector<std::vector<int>> x_attach, y_attach;
            for (const VertexSet& comp : comps) {
                std::vector<int> members = comp.to_vector();
                map_sorted(members, cursor, map);
                cursor += static_cast<int>(members.size());
                sizes.push_back(static_cast<int>(members.size()));
                std::vector<int> sx, sy;
                for (int w : members) {
                    if (g.has_edge(x, w)) sx.push_back(map[w]);
                    if (g.has_edge(y, w)) sy.push_back(map[w]);
                }
                x_attach.push_back(std::move(sx));
                y_attach.push_back(std::move(sy));
            }
            FamilyInstance inst = with_xy_edge ? f8_instance(sizes, x_attach, y_attach)
                                               : f7_instance(sizes, x_attach, y_attach);
            return FamilyMatch{std::move(inst), std::move(map)};
        }
    return std::nullopt;
}

}  // namespace

bool RecognitionResult::matched(Family f) const {
    for (const FamilyMatch& m : matches)
        if (m.instance.label == f) return true;
    return false;
}

std::vector<Family> RecognitionResult::labels() const {
    std::vector<Family> out;
    out.reserve(matches.size());
    for (const FamilyMatch& m : matches) out.push_back(m.instance.label);
    return out;
}

RecognitionResult recognize(const Graph& g) {
    if (g.order() < 4) throw std::invalid_argument("recognize needs order >= 4");
    if (!is_connected(g)) throw std::invalid_argument("recognize needs a connected graph");

    DistMatrix dist = all_pairs_distances(g);
    int diam = dist.max_distance();
    RecognitionResult result;
    auto take = [&](std::optional<FamilyMatch> match) {
        if (match) result.matches.push_back(std::move(*match));
    };
    // F1-F4 force diameter 3 and F5-F8 force diameter 2, so only the
    // matching half can apply.
    if (diam == 3) {
        take(recognize_f1(g));
        take(recognize_f2(g));
        take(recognize_f3(g));
        take(recognize_f4(g));
    } else if (diam == 2) {
        take(recognize_f5_f6(g, false));
        take(recognize_f5_f6(g, true));
        take(recognize_f7_f8(g, dist, false));
        take(recognize_f7_f8(g, dist, true));
    }
    return result;
}

bool recognize_gp_full(const Graph& g) {
    int n = g.order();
    return g.edge_count() == n * (n - 1) / 2;
}

bool recognize_gp_n_minus_1(const Graph& g) {
    int n = g.order();
    if (n < 2) throw std::invalid_argument("the n-1 recognizer needs order >= 2");
    if (!is_connected(g)) throw std::invalid_argument("the n-1 recognizer needs a connected graph");

    // universal vertex over at least two disjoint cliques
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) != n - 1) continue;
        std::uint64_t rest = detail::full_mask(n) & ~(1ull << u);
        std::vector<VertexSet> comps = components(g, VertexSet::from_mask(n, rest));
        if (comps.size() < 2) continue;
        bool all_cliques = true;
        for (const VertexSet& comp : comps)
            if (!is_clique(g, comp)) {
                all_cliques = false;
                break;
            }
        if (all_cliques) return true;
    }
    // complete graph minus 1..n-2 edges at a single vertex
    for (int v = 0; v < n; ++v) {
        std::uint64_t rest = detail::full_mask(n) & ~(1ull << v);
        if (!is_clique(g, VertexSet::from_mask(n, rest))) continue;
        int deg = g.degree(v);
        if (deg >= 1 && deg <= n - 2) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Canonical text form.

namespace {

std::string list_to_string(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    out += ']';
    return out;
}

std::string nested_to_string(const std::vector<std::vector<int>>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += list_to_string(values[i]);
    }
    out += ']';
    return out;
}

struct ValueParser {
    std::string_view text;
    std::size_t pos = 0;

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    void expect(char c) {
        if (peek() != c) throw ParseError("expected '" + std::string(1, c) + "' in parameter value");
        ++pos;
    }
    int parse_int() {
        std::size_t start = pos;
        if (peek() == '-') ++pos;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) throw ParseError("expected an integer in parameter value");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }
    std::vector<int> parse_list() {
        expect('[');
        std::vector<int> out;
        if (peek() == ']') {
            ++pos;
            return out;
        }
        for (;;) {
            out.push_back(parse_int());
            if (peek() == ',') {
                ++pos;
                continue;
            }
            expect(']');
            return out;
        }
    }
    std::vector<std::vector<int>> parse_nested() {
        expect('[');
        std::vector<std::vector<int>> out;
        if (peek() == ']') {
            ++pos;
            return out;
        }
        for (;;) {
            out.push_back(parse_list());
            if (peek() == ',') {
                ++pos;
                continue;
            }
            expect(']');
            return out;
        }
    }
    void done() const {
        if (pos != text.size()) throw ParseError("trailing characters in parameter value");
    }
};

int as_int(std::string_view value) {
    ValueParser p{value};
    int out = p.parse_int();
    p.done();
    return out;
}

std::vector<int> as_list(std::string_view value) {
    ValueParser p{value};
    auto out = p.parse_list();
    p.done();
    return out;
}

std::vector<std::vector<int>> as_nested(std::string_view value) {
    ValueParser p{value};
    auto out = p.parse_nested();
    p.done();
    return out;
}

}  // namespace

std::string to_string(const FamilyInstance& inst) {
    std::string out = family_name(inst.label);
    switch (inst.label) {
        case Family::F1: {
            const auto& p = std::get<PendantsOnCycleParams>(inst.params);
            out += " k=" + std::to_string(p.pendant_count);
            break;
        }
        case Family::F2: {
            const auto& p = std::get<TwoCenterCliquesParams>(inst.params);
            out += " r=" + list_to_string(p.x_cliques);
            out += " s=" + list_to_string(p.y_cliques);
            out += " t=" + list_to_string(p.shared_cliques);
            break;
        }
        case Family::F3: {
            const auto& p = std::get<TailCliqueParams>(inst.params);
            out += " r=" + std::to_string(p.clique_size);
            out += " S=" + list_to_string(p.y_attach);
            break;
        }
        case Family::F4: {
            const auto& p = std::get<ThreeKindCliquesParams>(inst.params);
            out += " q=" + std::to_string(p.shared_clique);
            out += " r=" + list_to_string(p.x_cliques);
            out += " s=" + list_to_string(p.xv_cliques);
            break;
        }
        case Family::F5:
        case Family::F6: {
            const auto& p = std::get<CliquePlusTwoParams>(inst.params);
            out += " base=" + std::to_string(p.base_size);
            out += " S=" + list_to_string(p.u_attach);
            out += " T=" + list_to_string(p.v_attach);
            break;
        }
        case Family::F7:
        case Family::F8: {
            const auto& p = std::get<BlocksPlusTwoParams>(inst.params);
            out += " n=" + list_to_string(p.clique_sizes);
            out += " S=" + nested_to_string(p.x_attach);
            out += " T=" + nested_to_string(p.y_attach);
            break;
        }
    }
    return out;
}

FamilyInstance parse_instance(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(' ', start);
        if (end == std::string_view::npos) end = text.size();
        if (end > start) tokens.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    if (tokens.empty()) throw ParseError("empty family instance");

    auto label = family_from_name(tokens[0]);
    if (!label) throw ParseError("unknown family label '" + std::string(tokens[0]) + "'");

    std::vector<std::pair<std::string_view, std::string_view>> kv;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        std::size_t eq = tokens[i].find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected key=value, got '" + std::string(tokens[i]) + "'");
        kv.emplace_back(tokens[i].substr(0, eq), tokens[i].substr(eq + 1));
    }
    auto value_of = [&](std::string_view key) -> std::string_view {
        for (auto& [k, v] : kv)
            if (k == key) return v;
        throw ParseError("missing parameter '" + std::string(key) + "' for " +
                         std::string(tokens[0]));
    };
    auto expect_keys = [&](std::initializer_list<std::string_view> keys) {
        for (auto& [k, v] : kv) {
            bool known = false;
            for (auto key : keys)
                if (k == key) known = true;
            if (!known)
                throw ParseError("unknown parameter '" + std::string(k) + "' for " +
                                 std::string(tokens[0]));
        }
    };

    switch (*label) {
        case Family::F1:
            expect_keys({"k"});
            return f1_instance(as_int(value_of("k")));
        case Family::F2:
            expect_keys({"r", "s", "t"});
            return f2_instance(as_list(value_of("r")), as_list(value_of("s")),
                               as_list(value_of("t")));
        case Family::F3:
            expect_keys({"r", "S"});
            return f3_instance(as_int(value_of("r")), as_list(value_of("S")));
        case Family::F4:
            expect_keys({"q", "r", "s"});
            return f4_instance(as_int(value_of("q")), as_list(value_of("r")),
                               as_list(value_of("s")));
        case Family::F5:
            expect_keys({"base", "S", "T"});
            return f5_instance(as_int(value_of("base")), as_list(value_of("S")),
                               as_list(value_of("T")));
        case Family::F6:
            expect_keys({"base", "S", "T"});
            return f6_instance(as_int(value_of("base")), as_list(value_of("S")),
                               as_list(value_of("T")));
        case Family::F7:
            expect_keys({"n", "S", "T"});
            return f7_instance(as_list(value_of("n")), as_nested(value_of("S")),
                               as_nested(value_of("T")));
        case Family::F8:
            expect_keys({"n", "S", "T"});
            return f8_instance(as_list(value_of("n")), as_nested(value_of("S")),
                               as_nested(value_of("T")));
    }
    throw ParseError("unknown family label");
}

}  // namespace gpkit
