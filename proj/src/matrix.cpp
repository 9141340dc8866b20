#include "sigq/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace sigq {

SymMatrix::SymMatrix(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("matrix dimension must be nonnegative");
    a_.assign(static_cast<size_t>(n) * n, Int(0));
}

size_t SymMatrix::idx(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::invalid_argument("index out of range");
    return static_cast<size_t>(i) * n_ + j;
}

void SymMatrix::set(int i, int j, Int value) {
    a_[idx(i, j)] = value;
    a_[idx(j, i)] = std::move(value);
}

SymMatrix SymMatrix::without(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    SymMatrix out(n_ - 1);
    for (int i = 0, oi = 0; i < n_; ++i) {
        if (i == v) continue;
        for (int j = 0, oj = 0; j < n_; ++j) {
            if (j == v) continue;
            out.set(oi, oj, at(i, j));
            ++oj;
        }
        ++oi;
    }
    return out;
}

SymMatrix signless_laplacian(const LabeledGraph& g) {
    SymMatrix m(g.order());
    for (int v = 0; v < g.order(); ++v) {
        m.set(v, v, g.degree(v));
        for (int w : g.neighbors(v))
            if (v < w) m.set(v, w, 1);
    }
    return m;
}

SymMatrix laplacian(const LabeledGraph& g) {
    SymMatrix m(g.order());
    for (int v = 0; v < g.order(); ++v) {
        m.set(v, v, g.degree(v));
        for (int w : g.neighbors(v))
            if (v < w) m.set(v, w, -1);
    }
    return m;
}

namespace {

// Fraction-free elimination; all divisions are exact.
Int bareiss_det(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot == -1) return Int(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace

Int determinant(const SymMatrix& m) {
    const int n = m.size();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    return bareiss_det(std::move(a));
}

IntPolynomial char_poly(const SymMatrix& m) {
    const int n = m.size();
    if (n == 0) return IntPolynomial::constant(1);

    // y[t] = det(tI - M) for t = 0..n.
    std::vector<Int> y(n + 1);
    for (int t = 0; t <= n; ++t) {
        std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = (i == j) ? Int(t) - m.at(i, j) : -m.at(i, j);
        y[t] = bareiss_det(std::move(a));
    }

    // Divided differences at consecutive integer nodes stay integral for an
    // integer-coefficient polynomial; every division below is exact.
    std::vector<Int> dd = y;
    for (int level = 1; level <= n; ++level) {
        for (int i = n; i >= level; --i) {
            Int num = dd[i] - dd[i - 1];
            mpz_divexact_ui(dd[i].get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(level));
        }
    }

    // Newton form: P(x) = dd[n]; P = P*(x - k) + dd[k] for k = n-1..0.
    IntPolynomial p = IntPolynomial::constant(dd[n]);
    for (int k = n - 1; k >= 0; --k) {
        IntPolynomial lin({-static_cast<long>(k), 1});
        p = p * lin + IntPolynomial::constant(dd[k]);
    }
    return p;
}

}  // namespace sigq
