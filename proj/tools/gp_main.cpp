#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpkit/canonical.hpp"
#include "gpkit/clique.hpp"
#include "gpkit/detail/parallel.hpp"
#include "gpkit/enumerate.hpp"
#include "gpkit/families.hpp"
#include "gpkit/gp_solver.hpp"
#include "gpkit/graph6.hpp"
#include "gpkit/metrics.hpp"
#include "gpkit/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFalsified = 3;

gpkit::OrderRange parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int n = std::stoi(text);
            return {n, n};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw gpkit::ParseError("bad order range '" + text + "' (expected N or LO..HI)");
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw gpkit::ParseError("bad vertex list entry '" + item + "'");
        }
    }
    return out;
}

gpkit::GraphStream load_graphs(const std::string& g6, const std::string& input, bool lenient) {
    if (!g6.empty()) {
        gpkit::GraphStream stream;
        stream.provenance = "inline";
        stream.graphs.push_back(gpkit::parse_graph6(g6));
        return stream;
    }
    gpkit::ReadOptions options;
    options.strict = !lenient;
    options.provenance = input;
    if (input == "-") return gpkit::read_graph6_stream(std::cin, options);
    std::ifstream file(input);
    if (!file) throw gpkit::ParseError("cannot open '" + input + "'");
    return gpkit::read_graph6_stream(file, options);
}

struct ComputeRow {
    std::string graph6;
    int n = 0;
    int diam = 0;
    std::optional<int> girth;
    int omega = 0;
    int eta = 0;
    gpkit::GpResult gp;
};

ComputeRow compute_row(const gpkit::Graph& g) {
    ComputeRow row;
    row.graph6 = gpkit::to_graph6(g);
    row.n = g.order();
    row.diam = g.order() == 1 ? 0 : gpkit::diameter(g);
    row.girth = gpkit::girth(g);
    row.omega = gpkit::clique_number(g);
    row.eta = gpkit::eta(g);
    row.gp = gpkit::gp_exact(g);
    return row;
}

void print_compute_row(const ComputeRow& row, bool as_json) {
    if (as_json) {
        json record{{"graph6", row.graph6}, {"n", row.n},         {"diameter", row.diam},
                    {"girth", nullptr},     {"omega", row.omega}, {"eta", row.eta},
                    {"gp", row.gp.value},   {"witness", row.gp.witness.to_vector()}};
        if (row.girth) record["girth"] = *row.girth;
        std::cout << record.dump() << '\n';
        return;
    }
    std::cout << row.graph6 << " n=" << row.n << " diam=" << row.diam << " girth="
              << (row.girth ? std::to_string(*row.girth) : "-") << " omega=" << row.omega
              << " eta=" << row.eta << " gp=" << row.gp.value
              << " witness=" << row.gp.witness.to_string() << '\n';
}

int run_compute(const std::string& g6, const std::string& input, bool as_json, bool lenient,
                int jobs) {
    gpkit::GraphStream stream = load_graphs(g6, input, lenient);
    for (const std::string& note : stream.skipped) std::cerr << "skipped " << note << '\n';
    long count = static_cast<long>(stream.graphs.size());
    std::vector<ComputeRow> rows(stream.graphs.size());
    std::vector<std::string> errors(stream.graphs.size());
    gpkit::detail::parallel_for(count, jobs, [&](long i) {
        const gpkit::Graph& g = stream.graphs[static_cast<std::size_t>(i)];
        if (!gpkit::is_connected(g)) {
            errors[i] = "record " + std::to_string(i + 1) + ": graph is disconnected";
            return;
        }
        rows[i] = compute_row(g);
    });
    bool had_error = false;
    for (long i = 0; i < count; ++i) {
        if (!errors[i].empty()) {
            std::cerr << errors[i] << '\n';
            had_error = true;
            if (!lenient) return kExitInput;
            continue;
        }
        print_compute_row(rows[static_cast<std::size_t>(i)], as_json);
    }
    return had_error && !lenient ? kExitInput : kExitOk;
}

int run_check(const std::string& g6, const std::string& set_text, bool as_json) {
    gpkit::Graph g = gpkit::parse_graph6(g6);
    if (!gpkit::is_connected(g)) throw gpkit::ParseError("graph is disconnected");
    std::vector<int> members = parse_int_list(set_text);
    for (int v : members)
        if (v < 0 || v >= g.order())
            throw gpkit::ParseError("set member " + std::to_string(v) + " out of range");
    gpkit::VertexSet s = gpkit::VertexSet::from_indices(g.order(), members);

    gpkit::DistMatrix d = gpkit::all_pairs_distances(g);
    bool definitional = gpkit::is_gp_definitional(d, s);
    auto certificate = gpkit::gp_structural_certificate(g, d, s);

    if (as_json) {
        json record{{"definitional", definitional}, {"structural", certificate.has_value()}};
        if (certificate) {
            json blocks = json::array();
            for (const gpkit::VertexSet& block : certificate->blocks)
                blocks.push_back(block.to_vector());
            record["blocks"] = blocks;
            record["block_distances"] = certificate->block_distance;
        }
        std::cout << record.dump() << '\n';
        return kExitOk;
    }
    std::cout << "definitional: " << (definitional ? "pass" : "fail") << '\n';
    std::cout << "structural: " << (certificate ? "pass" : "fail") << '\n';
    if (certificate) {
        std::cout << "blocks:";
        for (const gpkit::VertexSet& block : certificate->blocks)
            std::cout << ' ' << block.to_string();
        std::cout << '\n';
        std::cout << "block-distances:";
        for (std::size_t i = 0; i < certificate->blocks.size(); ++i)
            for (std::size_t j = i + 1; j < certificate->blocks.size(); ++j)
                std::cout << " d(" << i << ',' << j << ")=" << certificate->block_distance[i][j];
        std::cout << '\n';
    }
    return kExitOk;
}

int run_generate(const std::string& family, const std::string& params, const std::string& emit) {
    gpkit::FamilyInstance instance =
        gpkit::parse_instance(params.empty() ? family : family + " " + params);
    gpkit::Graph g = gpkit::generate(instance);
    if (emit == "g6") {
        std::cout << gpkit::to_graph6(g) << '\n';
        return kExitOk;
    }
    std::cout << "instance: " << gpkit::to_string(instance) << '\n';
    std::cout << "n: " << g.order() << '\n';
    std::cout << "graph6: " << gpkit::to_graph6(g) << '\n';
    std::cout << "edges:";
    for (auto [u, v] : g.edge_list()) std::cout << ' ' << u << '-' << v;
    std::cout << '\n';
    return kExitOk;
}

int run_recognize(const std::string& g6, const std::string& input, bool as_json, bool lenient) {
    gpkit::GraphStream stream = load_graphs(g6, input, lenient);
    for (const std::string& note : stream.skipped) std::cerr << "skipped " << note << '\n';
    for (const gpkit::Graph& g : stream.graphs) {
        std::string record = gpkit::to_graph6(g);
        gpkit::RecognitionResult result = gpkit::recognize(g);
        if (as_json) {
            json matches = json::array();
            for (const gpkit::FamilyMatch& match : result.matches)
                matches.push_back(json{{"family", gpkit::family_name(match.instance.label)},
                                       {"instance", gpkit::to_string(match.instance)},
                                       {"vertex_map", match.vertex_map}});
            std::cout << json{{"graph6", record}, {"matches", matches}}.dump() << '\n';
            continue;
        }
        if (result.matches.empty()) {
            std::cout << record << ": no-match\n";
            continue;
        }
        for (const gpkit::FamilyMatch& match : result.matches)
            std::cout << record << ": " << gpkit::to_string(match.instance) << '\n';
    }
    return kExitOk;
}

int run_enumerate(int n, bool connected) {
    gpkit::GraphStream stream =
        connected ? gpkit::enumerate_connected(n) : gpkit::enumerate_all(n);
    for (const gpkit::Graph& g : stream.graphs) std::cout << gpkit::to_graph6(g) << '\n';
    return kExitOk;
}

int run_verify(const std::string& check, const std::string& range_text, long samples,
               bool as_json, int jobs) {
    gpkit::OrderRange ns = parse_range(range_text);
    gpkit::VerifyOptions options;
    options.jobs = jobs;
    if (as_json) options.jsonl = &std::cout;

    gpkit::Report report;
    if (check == "main")
        report = gpkit::verify_main_theorem(ns, options);
    else if (check == "bound")
        report = gpkit::verify_bound(ns, options);
    else if (check == "diam2")
        report = gpkit::verify_diam2_formula(ns, options);
    else if (check == "cycles")
        report = gpkit::verify_cycles(ns.hi, options);
    else if (check == "agreement")
        report = gpkit::verify_checker_agreement(ns, samples, options);
    else
        report = gpkit::verify_n_minus_1(ns, options);

    if (as_json) {
        gpkit::write_summary_jsonl(report, std::cout);
    } else {
        std::cout << "check=" << report.check << " n=" << range_text
                  << " population=" << report.population << " pass=" << report.passed
                  << " fail=" << report.failed << '\n';
        for (const gpkit::Counterexample& cx : report.counterexamples)
            std::cout << "FAIL n=" << cx.n << " graph6=" << cx.graph6 << " expected=\""
                      << cx.expected << "\" actual=\"" << cx.actual << "\" witness=" << cx.witness
                      << '\n';
    }
    std::cerr << "elapsed: " << report.duration_ms / 1000.0 << "s\n";
    return report.ok() ? kExitOk : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gpkit: exact general position numbers for small graphs"};
    app.require_subcommand(1);

    std::string g6, input, set_text, family, params, range_text = "4..7";
    std::string emit = "summary";
    std::string check_name;
    bool as_json = false, lenient = false, connected = false;
    int enum_n = 0;
    long samples = 100000;
    int jobs = 1;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--g6", g6, "one inline graph6 record");
        cmd->add_option("--input", input, "file of graph6 records, one per line ('-' for stdin)");
    };
    auto add_jobs = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", jobs, "worker threads for per-graph work")
            ->envname("GPKIT_JOBS")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* compute = app.add_subcommand(
        "compute", "order, diameter, girth, omega, eta, gp and a witness per graph");
    add_source(compute);
    compute->add_flag("--json", as_json, "newline-delimited JSON output");
    compute->add_flag("--lenient", lenient, "skip bad or disconnected records instead of failing");
    add_jobs(compute);

    CLI::App* check = app.add_subcommand("check", "test one vertex set with both checkers");
    check->add_option("--g6", g6, "graph6 record")->required();
    check->add_option("--set", set_text, "comma-separated vertex list, e.g. 0,2,5")->required();
    check->add_flag("--json", as_json, "JSON output");

    CLI::App* generate = app.add_subcommand("generate", "build a family member from parameters");
    generate->add_option("--family", family, "family label F1..F8")->required();
    generate->add_option("--params", params, "instance parameters, e.g. \"r=[2,1] s=[1] t=[]\"");
    generate->add_option("--emit", emit, "output form: summary or g6")
        ->check(CLI::IsMember({"summary", "g6"}));

    CLI::App* recognize =
        app.add_subcommand("recognize", "match graphs against the eight families");
    add_source(recognize);
    recognize->add_flag("--json", as_json, "newline-delimited JSON output");
    recognize->add_flag("--lenient", lenient, "skip bad records instead of failing");

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "emit graphs on n vertices up to isomorphism");
    enumerate->add_option("--n", enum_n, "order (1..8)")->required();
    enumerate->add_flag("--connected", connected, "connected graphs only");

    CLI::App* verify = app.add_subcommand("verify", "run a theorem check over enumerated graphs");
    verify->add_option("--check", check_name, "main|bound|diam2|cycles|agreement|nminus1")
        ->required()
        ->check(CLI::IsMember({"main", "bound", "diam2", "cycles", "agreement", "nminus1"}));
    verify->add_option("--n", range_text, "order or inclusive range, e.g. 4..7 (max order for cycles)");
    verify->add_option("--samples", samples, "random pairs per order above 6 (agreement only)");
    verify->add_flag("--json", as_json, "JSON-lines report");
    add_jobs(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed() || recognize->parsed()) {
            if (g6.empty() == input.empty()) {
                std::cerr << "exactly one of --g6 and --input is required\n";
                return kExitUsage;
            }
        }
        if (compute->parsed()) return run_compute(g6, input, as_json, lenient, jobs);
        if (check->parsed()) return run_check(g6, set_text, as_json);
        if (generate->parsed()) return run_generate(family, params, emit);
        if (recognize->parsed()) return run_recognize(g6, input, as_json, lenient);
        if (enumerate->parsed()) return run_enumerate(enum_n, connected);
        if (verify->parsed()) return run_verify(check_name, range_text, samples, as_json, jobs);
    } catch (const gpkit::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitUsage;
}
