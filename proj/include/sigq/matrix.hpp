#pragma once

#include "sigq/graph.hpp"
#include "sigq/polynomial.hpp"

namespace sigq {

// Dense symmetric matrix with exact integer entries.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n);

    int size() const { return n_; }
    const Int& at(int i, int j) const { return a_[idx(i, j)]; }
    void set(int i, int j, Int value);

    SymMatrix without(int v) const;  // principal submatrix dropping row/column v

private:
    size_t idx(int i, int j) const;
    int n_ = 0;
    std::vector<Int> a_;
};

SymMatrix signless_laplacian(const LabeledGraph& g);  // D + A
SymMatrix laplacian(const LabeledGraph& g);           // D - A

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const SymMatrix& m);

// det(xI - M), exact and monic of degree n. Evaluates the determinant at
// x = 0..n and interpolates through integer divided differences.
IntPolynomial char_poly(const SymMatrix& m);

}  // namespace sigq
