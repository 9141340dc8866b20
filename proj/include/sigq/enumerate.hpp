#pragma once

#include <optional>
#include <vector>

#include "sigq/graph.hpp"

namespace sigq {

inline constexpr int kEnumerateMaxN = 10;

struct EnumerateFilter {
    std::optional<bool> odd_girth;  // parity of the cycle
    std::optional<int> matching;
    std::optional<int> girth;
};

// All non-isomorphic trees on n vertices (canonically labeled), grown by
// leaf addition with canonical dedupe.
std::vector<LabeledGraph> enumerate_trees(int n);

// One canonically-labeled representative per isomorphism class of connected
// unicyclic graphs on n vertices, in canonical-string order. Built by adding
// a chord to every non-isomorphic tree and deduping.
std::vector<UnicyclicGraph> enumerate_unicyclic(int n, const EnumerateFilter& filter = {},
                                                int max_n = kEnumerateMaxN);

}  // namespace sigq
