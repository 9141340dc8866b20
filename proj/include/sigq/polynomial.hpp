#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace sigq {

using Int = mpz_class;

// Dense univariate polynomial with exact integer coefficients, constant
// term first. The zero polynomial has an empty coefficient list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> cs);
    explicit IntPolynomial(std::vector<Int> cs);

    static IntPolynomial constant(Int c);
    static IntPolynomial monomial(Int c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Int coeff(int power) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int operator()(const Int& x) const;

    // Nonnegative integer power; throws std::invalid_argument for k < 0.
    IntPolynomial pow(int k) const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    // Human-readable form, highest power first, e.g. "x^3 - 6*x^2 + 9*x - 4".
    std::string str() const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs);
IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs);
IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
IntPolynomial operator*(const Int& c, const IntPolynomial& p);
IntPolynomial operator-(const IntPolynomial& p);

}  // namespace sigq
