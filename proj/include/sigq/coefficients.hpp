#pragma once

#include <string>
#include <vector>

#include "sigq/graph.hpp"
#include "sigq/matrix.hpp"
#include "sigq/polynomial.hpp"

namespace sigq {

// The nonnegative integers phi_0..phi_n with the alternating sign factored
// out: det(xI - Q) = sum_i (-1)^i phi_i x^(n-i); phi_0 = 1.
struct CoefficientVector {
    int n = 0;
    std::vector<Int> phi;  // size n+1

    friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

CoefficientVector coefficients(const LabeledGraph& g);
CoefficientVector coefficients_of(const IntPolynomial& q, int n);

enum class ComparisonResult { Equal, Dominates, DominatedBy, Incomparable };

// Dominates: a_i <= b_i for all i with at least one strict inequality.
ComparisonResult compare_coefficients(const CoefficientVector& a, const CoefficientVector& b);

const char* to_string(ComparisonResult r);

}  // namespace sigq
