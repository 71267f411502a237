#include "gpkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "gpkit/canonical.hpp"
#include "gpkit/clique.hpp"
#include "gpkit/detail/parallel.hpp"
#include "gpkit/enumerate.hpp"
#include "gpkit/families.hpp"
#include "gpkit/gp_solver.hpp"
#include "gpkit/graph6.hpp"
#include "gpkit/metrics.hpp"

namespace gpkit {

namespace {

using nlohmann::json;

json counterexample_json(const std::string& check, const Counterexample& cx) {
    json record{{"check", check}, {"n", cx.n},           {"graph6", cx.graph6},
                {"expected", cx.expected}, {"actual", cx.actual}};
    if (!cx.witness.empty()) record["witness"] = cx.witness;
    return record;
}

void check_range(OrderRange ns, int lo, int hi, const char* what) {
    if (ns.lo > ns.hi || ns.lo < lo || ns.hi > hi)
        throw std::invalid_argument(std::string(what) + " accepts orders " + std::to_string(lo) +
                                    ".." + std::to_string(hi));
}

// Runs check(i) over [0, count) with the requested parallelism, then
// folds the slots in index order so counts, streaming order, and the
// stored counterexample list do not depend on scheduling.
Report run_population(const std::string& name, long count, const VerifyOptions& options,
                      const std::function<std::optional<Counterexample>(long)>& check) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::optional<Counterexample>> slots(static_cast<std::size_t>(count));
    detail::parallel_for(count, options.jobs, [&](long i) { slots[i] = check(i); });

    Report report;
    report.check = name;
    report.population = count;
    for (auto& slot : slots) {
        if (!slot) {
            ++report.passed;
            continue;
        }
        ++report.failed;
        if (options.jsonl) *options.jsonl << counterexample_json(name, *slot).dump() << '\n';
        report.counterexamples.push_back(std::move(*slot));
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) { return a.graph6 < b.graph6; });
    report.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::vector<Graph> gather(OrderRange ns) {
    std::vector<Graph> population;
    for (int n = ns.lo; n <= ns.hi; ++n) {
        GraphStream stream = enumerate_connected(n);
        population.insert(population.end(), stream.graphs.begin(), stream.graphs.end());
    }
    return population;
}

}  // namespace

Report verify_main_theorem(OrderRange ns, const VerifyOptions& options) {
    check_range(ns, 4, kEnumerateOrderCap, "verify_main_theorem");
    std::vector<Graph> population = gather(ns);
    return run_population(
        "main", static_cast<long>(population.size()), options,
        [&](long i) -> std::optional<Counterexample> {
            const Graph& g = population[static_cast<std::size_t>(i)];
            int n = g.order();
            GpResult gp = gp_exact(g);
            RecognitionResult rec = recognize(g);
            bool value_side = gp.value == n - 2;
            if (value_side == rec.any()) return std::nullopt;
            std::string labels;
            for (Family f : rec.labels()) labels += (labels.empty() ? "" : ",") + family_name(f);
            return Counterexample{
                n, to_graph6(g), "gp = n-2 iff some family matches",
                "gp=" + std::to_string(gp.value) + " (n-2=" + std::to_string(n - 2) +
                    "), matched=[" + labels + "]",
                gp.witness.to_string()};
        });
}

Report verify_bound(OrderRange ns, const VerifyOptions& options) {
    check_range(ns, 2, kEnumerateOrderCap, "verify_bound");
    std::vector<Graph> population = gather(ns);
    return run_population(
        "bound", static_cast<long>(population.size()), options,
        [&](long i) -> std::optional<Counterexample> {
            const Graph& g = population[static_cast<std::size_t>(i)];
            GpResult gp = gp_exact(g);
            int bound = gp_upper_bound(g);
            if (gp.value <= bound) return std::nullopt;
            return Counterexample{g.order(), to_graph6(g),
                                  "gp <= n - diam + 1 = " + std::to_string(bound),
                                  "gp=" + std::to_string(gp.value), gp.witness.to_string()};
        });
}

Report verify_diam2_formula(OrderRange ns, const VerifyOptions& options) {
    check_range(ns, 2, kEnumerateOrderCap, "verify_diam2_formula");
    std::vector<Graph> population;
    for (Graph& g : gather(ns))
        if (g.order() >= 2 && diameter(g) == 2) population.push_back(std::move(g));
    return run_population(
        "diam2", static_cast<long>(population.size()), options,
        [&](long i) -> std::optional<Counterexample> {
            const Graph& g = population[static_cast<std::size_t>(i)];
            GpResult gp = gp_exact(g);
            int omega = clique_number(g);
            int eta_value = eta(g);
            if (gp.value == std::max(omega, eta_value)) return std::nullopt;
            return Counterexample{g.order(), to_graph6(g),
                                  "gp = max(omega, eta) = " +
                                      std::to_string(std::max(omega, eta_value)),
                                  "gp=" + std::to_string(gp.value) + ", omega=" +
                                      std::to_string(omega) + ", eta=" + std::to_string(eta_value),
                                  gp.witness.to_string()};
        });
}

Report verify_cycles(int max_n, const VerifyOptions& options) {
    if (max_n < 5) throw std::invalid_argument("verify_cycles needs max_n >= 5");
    return run_population(
        "cycles", max_n - 2, options, [&](long i) -> std::optional<Counterexample> {
            int n = static_cast<int>(i) + 3;
            Graph g = cycle_graph(n);
            int expected = n == 4 ? 2 : 3;  // C3 is complete, longer cycles settle at 3
            GpResult gp = gp_exact(g);
            if (gp.value == expected) return std::nullopt;
            return Counterexample{n, to_graph6(g), "gp(C" + std::to_string(n) + ") = " +
                                                       std::to_string(expected),
                                  "gp=" + std::to_string(gp.value), gp.witness.to_string()};
        });
}

Report verify_checker_agreement(OrderRange ns, long samples, const VerifyOptions& options) {
    check_range(ns, 1, 12, "verify_checker_agreement");
    if (samples < 0) throw std::invalid_argument("sample count must be >= 0");

    // Exhaustive (graph, subset) pairs up to order 6, sampled pairs above.
    struct Exhaustive {
        Graph graph;
        DistMatrix dist;
    };
    std::vector<Exhaustive> small;
    long exhaustive_pairs = 0;
    std::vector<int> sampled_orders;
    for (int n = ns.lo; n <= ns.hi; ++n) {
        if (n <= 6) {
            for (Graph& g : enumerate_connected(n).graphs) {
                DistMatrix d = all_pairs_distances(g);
                small.push_back({std::move(g), std::move(d)});
                exhaustive_pairs += 1ll << small.back().graph.order();
            }
        } else {
            sampled_orders.push_back(n);
        }
    }
    std::vector<std::pair<const Exhaustive*, std::uint64_t>> offsets;  // cumulative
    offsets.reserve(small.size());
    {
        std::uint64_t acc = 0;
        for (const Exhaustive& e : small) {
            offsets.emplace_back(&e, acc);
            acc += 1ull << e.graph.order();
        }
    }
    long total = exhaustive_pairs + samples * static_cast<long>(sampled_orders.size());

    return run_population(
        "agreement", total, options, [&](long i) -> std::optional<Counterexample> {
            Graph graph(1);
            VertexSet subset(1);
            if (i < exhaustive_pairs) {
                std::size_t lo = 0, hi = offsets.size() - 1;
                while (lo < hi) {
                    std::size_t mid = (lo + hi + 1) / 2;
                    if (offsets[mid].second <= static_cast<std::uint64_t>(i))
                        lo = mid;
                    else
                        hi = mid - 1;
                }
                const Exhaustive& e = *offsets[lo].first;
                std::uint64_t mask = static_cast<std::uint64_t>(i) - offsets[lo].second;
                bool def = is_gp_definitional(e.dist, VertexSet::from_mask(e.graph.order(), mask));
                bool str = gp_structural_certificate(e.graph, e.dist,
                                                     VertexSet::from_mask(e.graph.order(), mask))
                               .has_value();
                if (def == str) return std::nullopt;
                graph = e.graph;
                subset = VertexSet::from_mask(e.graph.order(), mask);
            } else {
                long j = i - exhaustive_pairs;
                int n = sampled_orders[static_cast<std::size_t>(j / samples)];
                // per-item generator keeps sampling deterministic under any scheduling
                std::mt19937_64 rng(0x6a7265656d656e74ull ^ static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ull);
                Graph g = random_connected_graph(n, rng);
                std::uint64_t mask =
                    std::uniform_int_distribution<std::uint64_t>(0, detail::full_mask(n))(rng);
                DistMatrix d = all_pairs_distances(g);
                bool def = is_gp_definitional(d, VertexSet::from_mask(n, mask));
                bool str =
                    gp_structural_certificate(g, d, VertexSet::from_mask(n, mask)).has_value();
                if (def == str) return std::nullopt;
                graph = g;
                subset = VertexSet::from_mask(n, mask);
            }
            DistMatrix d = all_pairs_distances(graph);
            bool def = is_gp_definitional(d, subset);
            return Counterexample{graph.order(), to_graph6(graph),
                                  "definitional and structural checkers agree",
                                  std::string("definitional=") + (def ? "true" : "false") +
                                      ", structural=" + (def ? "false" : "true"),
                                  subset.to_string()};
        });
}

Report verify_n_minus_1(OrderRange ns, const VerifyOptions& options) {
    check_range(ns, 2, kEnumerateOrderCap, "verify_n_minus_1");
    std::vector<Graph> population = gather(ns);
    return run_population(
        "nminus1", static_cast<long>(population.size()), options,
        [&](long i) -> std::optional<Counterexample> {
            const Graph& g = population[static_cast<std::size_t>(i)];
            int n = g.order();
            GpResult gp = gp_exact(g);
            bool recognized = recognize_gp_n_minus_1(g);
            if ((gp.value == n - 1) == recognized) return std::nullopt;
            return Counterexample{n, to_graph6(g), "gp = n-1 iff the n-1 recognizer accepts",
                                  "gp=" + std::to_string(gp.value) + ", recognized=" +
                                      (recognized ? "true" : "false"),
                                  gp.witness.to_string()};
        });
}

void write_summary_jsonl(const Report& report, std::ostream& out) {
    json summary{{"check", report.check},   {"summary", true},
                 {"population", report.population}, {"pass", report.passed},
                 {"fail", report.failed}};
    out << summary.dump() << '\n';
}

void write_jsonl(const Report& report, std::ostream& out) {
    for (const Counterexample& cx : report.counterexamples)
        out << counterexample_json(report.check, cx).dump() << '\n';
    write_summary_jsonl(report, out);
}

}  // namespace gpkit
