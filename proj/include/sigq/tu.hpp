#pragma once

#include <vector>

#include "sigq/graph.hpp"
#include "sigq/polynomial.hpp"

namespace sigq {

// Weight sum over all spanning subgraphs with i edges whose components are
// trees or odd-unicyclic: W(H) = 4^c * prod(tree orders), isolated vertices
// counting as trees of order 1. Enumerates all edge subsets; hosts here have
// |E| = |V|, so this is exact and cheap.
Int tu_coefficient(const UnicyclicGraph& g, int i);

// All of phi_0..phi_n by one subset sweep.
std::vector<Int> tu_coefficients(const UnicyclicGraph& g);

}  // namespace sigq
