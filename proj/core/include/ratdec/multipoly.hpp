#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratdec/monomial.hpp"
#include "ratdec/rational.hpp"

namespace ratdec {

// Degree of the zero polynomial.
inline constexpr int kDegNegInf = std::numeric_limits<int>::min();

class UniPoly;

// Sparse multivariate polynomial over Q. Canonical form: no zero
// coefficients are stored; terms are kept sorted in graded-lex order, so the
// leading term is the last map entry.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int index);
    static MultiPoly from_term(int nvars, const Monomial& m, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Pre: is_constant(); the zero polynomial yields 0.
    Rational constant_value() const;

    int degree() const;  // total degree, kDegNegInf when zero
    int degree_in(int var) const;

    const TermMap& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;
    // Pre: !is_zero().
    const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
    const Rational& leading_coeff() const { return terms_.rbegin()->second; }

    // Adds c * X^m and restores canonical form.
    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator*(const Rational& c) const;
    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly derivative(int var) const;

    // Substitutes the assigned variables; the result lives in the same
    // variable list with the assigned variables eliminated.
    MultiPoly eval_partial(const std::vector<std::optional<Rational>>& assignment) const;
    Rational eval(const std::vector<Rational>& point) const;

    // Replaces X_var by the polynomial value (same variable list).
    MultiPoly substitute(int var, const MultiPoly& value) const;

    // Unique representation *this == content_unit() * primitive_part():
    // integer coprime coefficients, positive leading coefficient.
    Rational content_unit() const;
    MultiPoly primitive_part() const;

    bool depends_on(int var) const { return degree_in(var) > 0; }

private:
    int nvars_;
    TermMap terms_;
};

MultiPoly operator*(const Rational& c, const MultiPoly& p);
MultiPoly pow(const MultiPoly& base, unsigned exp);

// Coefficients of p viewed as a polynomial in X_var, each free of X_var.
std::vector<MultiPoly> coeffs_wrt(const MultiPoly& p, int var);
MultiPoly from_coeffs_wrt(const std::vector<MultiPoly>& coeffs, int var, int nvars);

// Conversions between the sparse representation and dense univariate form.
// to_unipoly requires p to depend on no variable other than X_var.
UniPoly to_unipoly(const MultiPoly& p, int var);
MultiPoly from_unipoly(const UniPoly& p, int var, int nvars);

// Drops variable `var` (which p must not depend on), reducing nvars by one.
MultiPoly drop_var(const MultiPoly& p, int var);
// Inserts a fresh unused variable at position `var`.
MultiPoly insert_var(const MultiPoly& p, int var);

// Exact division; throws NotDivisibleError when q does not divide p.
MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q);

// Greatest common divisor, primitive with positive leading coefficient.
// Computed by a primitive pseudo-remainder sequence on the last variable.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

// Content with respect to one variable (gcd of the coefficient polynomials)
// and the matching primitive part.
MultiPoly content_wrt(const MultiPoly& p, int var);
MultiPoly primitive_part_wrt(const MultiPoly& p, int var);

// Pre: p != 0.
bool is_squarefree(const MultiPoly& p);

// Resultant with respect to the last variable, as a polynomial in the
// remaining ones. Sign convention fixed so that res_Y(Y - a, Y - b) = b - a.
MultiPoly resultant_wrt_last(const MultiPoly& a, const MultiPoly& b);

// Deterministic total order used to present factor lists: term sequences are
// compared in graded-lex-descending order, larger monomial first, then larger
// coefficient first. Returns <0, 0, >0.
int compare_display(const MultiPoly& a, const MultiPoly& b);

}  // namespace ratdec
