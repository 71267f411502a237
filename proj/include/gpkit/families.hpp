#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gpkit/graph.hpp"

namespace gpkit {

/// The eight structural families whose members are exactly the connected
/// graphs of order n >= 4 whose largest general position set has n-2
/// vertices. F1-F4 have diameter 3, F5-F8 diameter 2.
enum class Family { F1, F2, F3, F4, F5, F6, F7, F8 };

std::string family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// Parameter shapes. Vertex labels below always refer to the deterministic
// labeling of the generated graph: special vertices first (cycle or path
// vertices, then the two added vertices), then clique blocks in parameter
// order, each block's vertices consecutive.

/// F1: a 4-cycle u1..u4 (labels 0..3) plus k >= 1 pendant vertices on u1.
struct PendantsOnCycleParams {
    int pendant_count = 0;
};

/// F2: adjacent centers x=0, y=1; cliques joined to x only, to y only
/// (both lists nonempty), and to both (possibly none).
struct TwoCenterCliquesParams {
    std::vector<int> x_cliques;
    std::vector<int> y_cliques;
    std::vector<int> shared_cliques;
};

/// F3: path u=0, x=1, y=2, v=3 plus one clique (labels 4..3+r) joined to
/// u and x entirely and to y on the subset y_attach (possibly empty or all).
struct TailCliqueParams {
    int clique_size = 0;
    std::vector<int> y_attach;
};

/// F4: path x=0, y=1, v=2; one clique joined to x and y (size may be 0),
/// cliques joined to x only, and cliques joined to x and v.
struct ThreeKindCliquesParams {
    int shared_clique = 0;
    std::vector<int> x_cliques;
    std::vector<int> xv_cliques;
};

/// F5/F6: u=0 and v=1 attached to nonempty proper subsets of a base
/// clique (labels 2..base_size+1). F5 keeps uv a nonedge and needs the
/// attachment sets to intersect; F6 adds the edge uv.
struct CliquePlusTwoParams {
    int base_size = 0;
    std::vector<int> u_attach;
    std::vector<int> v_attach;
};

/// F7/F8: x=0 and y=1 attached to a nonempty subset of every clique
/// block (at least two blocks). F7 keeps xy a nonedge, F8 adds it; either
/// way every cross-block pair must end up at distance 2.
struct BlocksPlusTwoParams {
    std::vector<int> clique_sizes;
    std::vector<std::vector<int>> x_attach;
    std::vector<std::vector<int>> y_attach;
};

struct FamilyInstance {
    Family label;
    std::variant<PendantsOnCycleParams, TwoCenterCliquesParams, TailCliqueParams,
                 ThreeKindCliquesParams, CliquePlusTwoParams, BlocksPlusTwoParams>
        params;
};

FamilyInstance f1_instance(int pendant_count);
FamilyInstance f2_instance(std::vector<int> x_cliques, std::vector<int> y_cliques,
                           std::vector<int> shared_cliques);
FamilyInstance f3_instance(int clique_size, std::vector<int> y_attach);
FamilyInstance f4_instance(int shared_clique, std::vector<int> x_cliques,
                           std::vector<int> xv_cliques);
FamilyInstance f5_instance(int base_size, std::vector<int> u_attach, std::vector<int> v_attach);
FamilyInstance f6_instance(int base_size, std::vector<int> u_attach, std::vector<int> v_attach);
FamilyInstance f7_instance(std::vector<int> clique_sizes, std::vector<std::vector<int>> x_attach,
                           std::vector<std::vector<int>> y_attach);
FamilyInstance f8_instance(std::vector<int> clique_sizes, std::vector<std::vector<int>> x_attach,
                           std::vector<std::vector<int>> y_attach);

/// Canonical text form, e.g. "F2 r=[2,1] s=[1] t=[]" or
/// "F7 n=[1,1] S=[[2],[3]] T=[[2],[3]]". parse_instance accepts exactly
/// this grammar: label, then key=value pairs separated by single spaces,
/// list values bracketed and comma-separated with no inner spaces.
std::string to_string(const FamilyInstance& inst);
FamilyInstance parse_instance(std::string_view text);

/// Builds the member described by inst; throws std::invalid_argument on
/// any violated parameter constraint (including an F7/F8 attachment
/// pattern that fails to bring the diameter down to 2).
Graph generate(const FamilyInstance& inst);

/// Non-throwing variant; on failure optionally reports the reason.
std::optional<Graph> try_generate(const FamilyInstance& inst, std::string* reason = nullptr);

struct FamilyMatch {
    FamilyInstance instance;
    /// vertex_map[input vertex] = label in generate(instance).
    std::vector<int> vertex_map;
};

struct RecognitionResult {
    std::vector<FamilyMatch> matches;  // at most one per family, in F1..F8 order

    bool matched(Family f) const;
    bool any() const { return !matches.empty(); }
    std::vector<Family> labels() const;
};

/// Structural membership test against all eight families. Requires a
/// connected graph of order >= 4; returns every family that contains it,
/// each with a parameter witness that regenerates an isomorphic graph.
RecognitionResult recognize(const Graph& g);

/// True iff the graph is complete (the only graphs whose whole vertex
/// set is in general position).
bool recognize_gp_full(const Graph& g);

/// Connected graphs of order n >= 2 whose largest general position set
/// has n-1 vertices: either a universal vertex over >= 2 disjoint
/// cliques, or a complete graph minus 1..n-2 edges at one vertex.
bool recognize_gp_n_minus_1(const Graph& g);

}  // namespace gpkit
