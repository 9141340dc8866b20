#pragma once

#include <string>
#include <vector>

#include "sigq/graph.hpp"

namespace sigq {

inline constexpr int kCanonicalMaxN = 11;

// Canonical byte string: identical exactly for isomorphic graphs. Minimizes
// the adjacency bit matrix over vertex orderings consistent with the sorted
// degree sequence. Throws when n exceeds max_n.
std::string canonical_form(const LabeledGraph& g, int max_n = kCanonicalMaxN);

// A labeling that realizes the canonical form: position -> original vertex.
std::vector<int> canonical_order(const LabeledGraph& g, int max_n = kCanonicalMaxN);

// The graph relabeled into its canonical form.
LabeledGraph canonicalized(const LabeledGraph& g, int max_n = kCanonicalMaxN);

}  // namespace sigq
