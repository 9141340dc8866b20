#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigq/graph.hpp"

namespace sigq {

// The cycle-with-attachments notation G_g(s_1,t_1;...;s_g,t_g): a cycle of
// length g with s_i pendant paths of length 2 and t_i pendant edges at the
// i-th cycle vertex.
struct FamilySpec {
    int girth = 0;
    std::vector<std::pair<int, int>> attachments;  // (s_i, t_i)

    int order() const;
    int total_paths() const;     // sum of s_i
    int total_pendants() const;  // sum of t_i

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Grammar: "G" g "(" s "," t (";" s "," t)* ")" with exactly g pairs.
FamilySpec parse_family(const std::string& text);
std::string format_family(const FamilySpec& spec);

// Rotation/reflection-minimal attachment sequence; equal specs describe
// isomorphic graphs.
FamilySpec canonical_family(const FamilySpec& spec);

// Deterministic labeling: cycle vertices 0..g-1, then per cycle vertex in
// index order its paths (two vertices each) followed by its pendant edges.
UnicyclicGraph build_family(const FamilySpec& spec);

// Pendant structure of the trees hanging off the cycle.
struct PendantProfile {
    // Multiset (sorted) of pendant path lengths per cycle vertex, in cycle order.
    std::vector<std::vector<int>> path_lengths;
    // True when every attachment is a pendant path of length <= 2 rooted on
    // the cycle, i.e. the graph is some G_g(s_1,t_1;...).
    bool family_shaped = false;
    std::optional<FamilySpec> family;  // set when family_shaped
    std::vector<int> branch_vertices;  // degree >= 3, sorted
    std::vector<int> dist_to_cycle;    // per vertex
};

PendantProfile pendant_profile(const UnicyclicGraph& g);

}  // namespace sigq
