#pragma once

#include <vector>

#include "sigq/graph.hpp"

namespace sigq {

struct Matching {
    std::vector<Edge> edges;  // pairwise vertex-disjoint
    int size() const { return static_cast<int>(edges.size()); }
    bool saturates(int v) const;
    bool contains(Edge e) const;
};

// Maximum-cardinality matching by branch and bound; exact at this scale
// (graphs here have |E| = |V| <= ~14).
Matching maximum_matching(const LabeledGraph& g);
int matching_number(const LabeledGraph& g);

// Every maximum matching, deterministic order.
std::vector<Matching> all_maximum_matchings(const LabeledGraph& g);

}  // namespace sigq
