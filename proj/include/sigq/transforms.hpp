#pragma once

#include <optional>

#include "sigq/family.hpp"
#include "sigq/graph.hpp"
#include "sigq/matching.hpp"

namespace sigq {

struct TransformOutcome {
    LabeledGraph result;  // same order as the input
    int matching_before = 0;
    int matching_after = 0;
};

// Contract a non-pendant off-cycle edge uv into one vertex and hang a new
// pendant edge off it. Order and girth preserved.
TransformOutcome contract_add_pendant(const UnicyclicGraph& g, Edge uv);

// Re-root all pendant neighbors of v onto its neighbor u. Requires every
// neighbor of v other than u to be pendant, and at least one of them.
TransformOutcome sigma_transform(const LabeledGraph& g, int v, int u);

// Delete the pendant vertex uprime at u and the off-cycle edge uv, contract
// u,v into w, and attach the pendant path w-w'-u'. Requires deg(u) >= 3 and
// deg(v) >= 2.
TransformOutcome contract_add_path2(const UnicyclicGraph& g, Edge uv, int uprime);

// For girth >= 5 with only pendant paths of length <= 2 on the cycle: rewire
// every attachment of the next two cycle vertices v,w (and w's far cycle
// edge) onto u, shrinking the cycle by 2 and leaving u-v-w as a pendant path.
TransformOutcome cycle_reduce(const UnicyclicGraph& g, int u);

// Variant that keeps one pendant edge on each of v and w: requires pendant
// edges at u, v, w; yields girth g-2 with pendant paths u-v-v' and u-w-w'.
TransformOutcome cycle_reduce_with_pendants(const UnicyclicGraph& g, int u);

// Move every attachment of a girth-3 or girth-4 family graph onto one cycle
// vertex.
TransformOutcome collect_pendants(const UnicyclicGraph& g, int target_index);

enum class RedistributeVariant { G3, G4AllT, G4OneZero, G4TwoZero };

// Canonical redistribution that keeps single pendant edges on designated
// cycle vertices and piles everything else onto one vertex. The variant
// encodes the required pattern of pendant-edge counts around the cycle.
TransformOutcome redistribute_keep_pendants(const UnicyclicGraph& g, RedistributeVariant v);

// ---- matching-effect predicates -----------------------------------------
// Pure hypotheses under which the side results predict the matching number
// of the transformed graph; verified empirically by the test suites.

// contract_add_pendant keeps |M| when some maximum matching avoids all other
// edges at one endpoint of uv.
bool contract_keeps_matching_hypothesis(const UnicyclicGraph& g, Edge uv);

// Per-maximum-matching predictions for contract_add_path2, over matchings
// containing the pendant edge u-uprime.
struct Path2MatchingPrediction {
    bool any_keep = false;  // some matching predicts |M| preserved
    bool any_grow = false;  // some matching predicts |M| + 1
};
Path2MatchingPrediction path2_matching_prediction(const UnicyclicGraph& g, Edge uv, int uprime);

// Predicted |M| change for cycle_reduce from the pendant-edge pattern at
// u,v,w; nullopt when the pattern is not covered.
std::optional<int> cycle_reduce_matching_delta(const UnicyclicGraph& g, int u);

// Predicted |M| change for collect_pendants from the pendant-edge pattern;
// nullopt when not covered.
std::optional<int> collect_matching_delta(const UnicyclicGraph& g);

}  // namespace sigq
