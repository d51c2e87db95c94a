#pragma once

#include "ratdec/multipoly.hpp"
#include "ratdec/unipoly.hpp"

namespace ratdec {

// Quotient of multivariate polynomials.  Every instance keeps a nonzero
// denominator and a coprime numerator/denominator pair; beyond coprimality
// the pair is stored exactly as supplied (no rescaling).
class RationalFunction {
  public:
    RationalFunction() = default;

    // Pre: den nonzero and gcd(num, den) constant; the pair is kept verbatim.
    static RationalFunction from_coprime(MultiPoly num, MultiPoly den);

    // Cancels the gcd and scales so the denominator is primitive with
    // positive leading coefficient.
    static RationalFunction reduced(const MultiPoly& num, const MultiPoly& den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    int nvars() const { return den_.nvars(); }
    // max(deg num, deg den); the zero function has degree kDegNegInf.
    int degree() const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

  private:
    MultiPoly num_;
    MultiPoly den_;
};

bool equal_as_functions(const RationalFunction& f, const RationalFunction& g);

// Univariate quotient, reduced, with monic denominator.
class UniRationalFunction {
  public:
    UniRationalFunction() : num_(), den_(UniPoly::constant(1)) {}

    static UniRationalFunction reduced(const UniPoly& num, const UniPoly& den);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    int degree() const;

    bool operator==(const UniRationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

  private:
    UniRationalFunction(UniPoly num, UniPoly den)
        : num_(std::move(num)), den_(std::move(den)) {}

    UniPoly num_;
    UniPoly den_;
};

bool equal_as_functions(const UniRationalFunction& f, const UniRationalFunction& g);

// T |-> (a*T + b) / (c*T + e) with a*e - b*c != 0.
struct Mobius {
    Rational a, b, c, e;
};

Mobius mobius_inverse(const Mobius& m);
UniRationalFunction mobius_to_function(const Mobius& m);
// u(m(T)).
UniRationalFunction apply_mobius(const UniRationalFunction& u, const Mobius& m);
// m(u(T)).
UniRationalFunction mobius_after(const Mobius& m, const UniRationalFunction& u);
// u(h(X1, ..., Xn)).
RationalFunction compose_uni(const UniRationalFunction& u, const RationalFunction& h);

}  // namespace ratdec
