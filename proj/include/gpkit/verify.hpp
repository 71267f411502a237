#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpkit {

struct Counterexample {
    int n = 0;
    std::string graph6;
    std::string expected;
    std::string actual;
    std::string witness;
};

struct Report {
    std::string check;
    long population = 0;
    long passed = 0;
    long failed = 0;
    std::vector<Counterexample> counterexamples;  // sorted by graph6 record
    double duration_ms = 0.0;

    bool ok() const { return failed == 0; }
};

struct VerifyOptions {
    int jobs = 1;
    /// When set, counterexample records are streamed here as JSON lines
    /// while the run is in progress.
    std::ostream* jsonl = nullptr;
};

struct OrderRange {
    int lo = 0;
    int hi = 0;
};

/// gp(G) = n-2 iff G matches at least one of F1..F8, over every
/// enumerated connected graph with order in ns (subset of [4,8]).
Report verify_main_theorem(OrderRange ns, const VerifyOptions& options = {});

/// gp(G) <= n - diam(G) + 1 over enumerated connected graphs (ns within [2,8]).
Report verify_bound(OrderRange ns, const VerifyOptions& options = {});

/// gp(G) = max(omega, eta) over enumerated connected diameter-2 graphs
/// (ns within [2,8]).
Report verify_diam2_formula(OrderRange ns, const VerifyOptions& options = {});

/// gp(C-n) = 3 for n >= 5, with gp(C3) = 3 and gp(C4) = 2 recorded too.
Report verify_cycles(int max_n, const VerifyOptions& options = {});

/// Definitional and structural checkers agree: exhaustively over all
/// subsets of every enumerated connected graph of order <= 6 in ns, and
/// on `samples` random (graph, subset) pairs per order above 6 (ns
/// within [1,12]).
Report verify_checker_agreement(OrderRange ns, long samples, const VerifyOptions& options = {});

/// gp(G) = n-1 iff the n-1 recognizer accepts, over enumerated connected
/// graphs (ns within [2,8]).
Report verify_n_minus_1(OrderRange ns, const VerifyOptions& options = {});

/// Counterexample records followed by a summary record, one JSON object
/// per line.
void write_jsonl(const Report& report, std::ostream& out);

/// Just the end-of-stream summary record.
void write_summary_jsonl(const Report& report, std::ostream& out);

}  // namespace gpkit
