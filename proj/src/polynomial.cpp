#include "sigq/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace sigq {

IntPolynomial::IntPolynomial(std::initializer_list<long> cs) {
    coeffs_.reserve(cs.size());
    for (long c : cs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial::IntPolynomial(std::vector<Int> cs) : coeffs_(std::move(cs)) { trim(); }

IntPolynomial IntPolynomial::constant(Int c) {
    IntPolynomial p;
    p.coeffs_.push_back(std::move(c));
    p.trim();
    return p;
}

IntPolynomial IntPolynomial::monomial(Int c, int power) {
    if (power < 0) throw std::invalid_argument("monomial: negative power");
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(power + 1, Int(0));
        p.coeffs_[power] = std::move(c);
    }
    return p;
}

Int IntPolynomial::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Int(0);
    return coeffs_[power];
}

Int IntPolynomial::operator()(const Int& x) const {
    Int acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Int> out(lhs.coeffs().size() + rhs.coeffs().size() - 1, Int(0));
    for (size_t i = 0; i < lhs.coeffs().size(); ++i) {
        if (lhs.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs().size(); ++j)
            out[i + j] += lhs.coeffs()[i] * rhs.coeffs()[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const Int& c, const IntPolynomial& p) {
    if (c == 0) return {};
    std::vector<Int> out = p.coeffs();
    for (auto& x : out) x *= c;
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& p) { return Int(-1) * p; }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int p = degree(); p >= 0; --p) {
        const Int& c = coeffs_[p];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || p == 0) os << a.get_str();
        if (p > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (p > 1) os << "^" << p;
        }
    }
    return os.str();
}

}  // namespace sigq
