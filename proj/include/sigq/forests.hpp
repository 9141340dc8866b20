#pragma once

#include <vector>

#include "sigq/graph.hpp"
#include "sigq/polynomial.hpp"

namespace sigq {

// Laplacian coefficient c_{n-k}: sum of gamma(F) = prod(component orders)
// over all spanning forests with exactly k components. For bipartite graphs
// this equals phi_{n-k}. Valid k: 1..n.
Int forest_coefficient(const LabeledGraph& g, int k);

// c_{n-k} for k = 1..n; entry [k] of the result (index 0 unused).
std::vector<Int> forest_coefficients(const LabeledGraph& g);

}  // namespace sigq
