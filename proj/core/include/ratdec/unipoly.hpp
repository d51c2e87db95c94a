#pragma once

#include <utility>
#include <vector>

#include "ratdec/rational.hpp"

namespace ratdec {

// Dense univariate polynomial over Q, coefficients in ascending degree
// order. Canonical form: no trailing zero coefficient (the zero polynomial
// stores nothing).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly variable();                        // T
    static UniPoly from_term(unsigned k, const Rational& c);  // c * T^k

    int degree() const;  // kDegNegInf when zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(unsigned k) const;
    // Pre: !is_zero().
    const Rational& leading_coeff() const { return c_.back(); }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& c) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly derivative() const;
    Rational eval(const Rational& x) const;
    UniPoly monic() const;  // pre: !is_zero()

private:
    std::vector<Rational> c_;
    void trim();
};

UniPoly operator*(const Rational& c, const UniPoly& p);
UniPoly pow(const UniPoly& base, unsigned exp);

// Euclidean division; remainder degree < divisor degree. Pre: divisor != 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Same sign convention as resultant_wrt_last: res(Y - a, Y - b) = b - a.
Rational resultant(const UniPoly& a, const UniPoly& b);

bool is_squarefree(const UniPoly& p);  // pre: p != 0

// u(inner) for univariate inner values.
UniPoly compose(const UniPoly& u, const UniPoly& inner);

}  // namespace ratdec
