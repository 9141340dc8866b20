#include "sigq/coefficients.hpp"

#include <stdexcept>

namespace sigq {

CoefficientVector coefficients_of(const IntPolynomial& q, int n) {
    if (q.degree() != n) throw std::invalid_argument("coefficients: polynomial degree mismatch");
    CoefficientVector out;
    out.n = n;
    out.phi.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        Int c = q.coeff(n - i);
        out.phi[i] = (i % 2 == 0) ? c : Int(-c);
        if (out.phi[i] < 0)
            throw std::runtime_error("coefficients: negative phi_" + std::to_string(i) +
                                     " (signless Laplacian is positive semidefinite)");
    }
    return out;
}

CoefficientVector coefficients(const LabeledGraph& g) {
    return coefficients_of(char_poly(signless_laplacian(g)), g.order());
}

ComparisonResult compare_coefficients(const CoefficientVector& a, const CoefficientVector& b) {
    if (a.n != b.n) throw std::invalid_argument("compare_coefficients: length mismatch");
    bool a_below = false, b_below = false;
    for (int i = 0; i <= a.n; ++i) {
        if (a.phi[i] < b.phi[i]) a_below = true;
        if (b.phi[i] < a.phi[i]) b_below = true;
    }
    if (!a_below && !b_below) return ComparisonResult::Equal;
    if (a_below && !b_below) return ComparisonResult::Dominates;
    if (b_below && !a_below) return ComparisonResult::DominatedBy;
    return ComparisonResult::Incomparable;
}

const char* to_string(ComparisonResult r) {
    switch (r) {
        case ComparisonResult::Equal: return "Equal";
        case ComparisonResult::Dominates: return "Dominates";
        case ComparisonResult::DominatedBy: return "DominatedBy";
        case ComparisonResult::Incomparable: return "Incomparable";
    }
    return "?";
}

}  // namespace sigq
