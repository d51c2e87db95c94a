#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ratdec/decompose.hpp"
#include "ratdec/expr.hpp"
#include "ratdec/multipoly.hpp"
#include "ratdec/rational_function.hpp"
#include "ratdec/unipoly.hpp"

namespace testutil {

using namespace ratdec;

inline const std::vector<std::string>& xy() {
    static const std::vector<std::string> v{"X", "Y"};
    return v;
}

inline MultiPoly mp(const std::string& text) { return parse_polynomial(text, xy()); }

inline MultiPoly mpv(const std::string& text, const std::vector<std::string>& vars) {
    return parse_polynomial(text, vars);
}

inline UniPoly up(const std::string& text) {
    return to_unipoly(parse_polynomial(text, {"T"}), 0);
}

inline RationalFunction rf(const std::string& num, const std::string& den) {
    return RationalFunction::reduced(mp(num), mp(den));
}

inline UniRationalFunction urf(const std::string& num, const std::string& den) {
    return UniRationalFunction::reduced(up(num), up(den));
}

// Fixture A: f1 = (1+X+Y^2)(X+Y), f2 = f1 - (Y^2-X-1)(Y-2X+1).  Degree 3,
// non-composite, with fully known pencil data (factorizations, cofactors,
// recombination matrix); anchors most golden tests.
inline const char* kFixtureANum = "(1+X+Y^2)*(X+Y)";
inline const char* kFixtureADen = "(1+X+Y^2)*(X+Y) - (Y^2-X-1)*(Y-2*X+1)";

inline RationalFunction fixture_noncomposite() { return rf(kFixtureANum, kFixtureADen); }

// Fixture B: u(fixture A) with u = T(T-1)/(T^2+1); composite of degree 6,
// whose pipeline run selects lambda_b = 90/101 and a two-vector kernel basis.
inline UniRationalFunction fixture_outer() { return urf("T^2 - T", "T^2 + 1"); }

inline RationalFunction fixture_composite() {
    return compose_uni(fixture_outer(), fixture_noncomposite());
}

// The recombination matrix of fixture A: columns are the cofactors of the
// four pencil factors [1+X+Y^2, X+Y, Y^2-X-1, 2X-Y-1], rows the 15 monomials
// of total degree <= 4 ordered (0,0),(1,0),...,(4,0),(0,1),...,(0,4).
inline MatrixQ golden_system_matrix() {
    static const int rows[15][4] = {
        {-1, 3, -1, 3}, {2, 6, 2, 6},    {3, 3, 3, 3},   {0, 0, 0, 0}, {0, 0, 0, 0},
        {2, -4, -2, 0}, {-2, 4, -6, 8},  {8, 8, 8, 8},   {0, 0, 0, 0}, {3, -6, -11, 8},
        {7, 0, 1, 6},   {0, 0, 0, 0},    {-6, -2, -6, -2}, {0, 0, 0, 0}, {-6, -3, -6, -3}};
    MatrixQ m;
    for (const auto& row : rows) {
        VectorQ r;
        for (int v : row) r.push_back(Rational(v));
        m.push_back(std::move(r));
    }
    return m;
}

inline bool exactly_equal(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::reduced(a.num(), a.den()) ==
           RationalFunction::reduced(b.num(), b.den());
}

// ---- randomized-input helpers ----

inline Rational rand_nonzero_coeff(std::mt19937_64& rng, int height) {
    std::uniform_int_distribution<int> mag(1, height);
    std::uniform_int_distribution<int> sgn(0, 1);
    return Rational((sgn(rng) ? 1 : -1) * mag(rng));
}

// Random nonzero polynomial of total degree <= deg (== deg when exact_degree).
inline MultiPoly random_poly(std::mt19937_64& rng, int nvars, int deg, int height,
                             int percent = 60, bool exact_degree = false) {
    std::uniform_int_distribution<int> pct(0, 99);
    MultiPoly p(nvars);
    for (const Monomial& m : system_monomials(nvars, deg))
        if (pct(rng) < percent) p.add_term(m, rand_nonzero_coeff(rng, height));
    if (exact_degree && p.degree() < deg) {
        Monomial m(nvars, 0);
        int rem = deg;
        for (int v = 0; v + 1 < nvars; ++v) {
            std::uniform_int_distribution<int> e(0, rem);
            m[static_cast<std::size_t>(v)] = static_cast<unsigned>(e(rng));
            rem -= static_cast<int>(m[static_cast<std::size_t>(v)]);
        }
        m[static_cast<std::size_t>(nvars) - 1] = static_cast<unsigned>(rem);
        p.add_term(m, rand_nonzero_coeff(rng, height));
    }
    if (p.is_zero()) p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), Rational(1));
    return p;
}

inline UniPoly random_unipoly(std::mt19937_64& rng, int deg, int height) {
    std::uniform_int_distribution<int> any(-height, height);
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i) c[static_cast<std::size_t>(i)] = Rational(any(rng));
    c[static_cast<std::size_t>(deg)] = rand_nonzero_coeff(rng, height);
    return UniPoly(std::move(c));
}

// Random reduced function whose parts both have degree in [min_part, max_deg].
inline RationalFunction random_reduced(std::mt19937_64& rng, int nvars, int max_deg,
                                       int height, int min_part = 0) {
    std::uniform_int_distribution<int> dd(min_part, max_deg);
    for (;;) {
        MultiPoly n = random_poly(rng, nvars, dd(rng), height, 60, true);
        MultiPoly d = random_poly(rng, nvars, dd(rng), height, 60, true);
        RationalFunction f = RationalFunction::reduced(n, d);
        if (f.num().is_zero()) continue;
        if (f.num().degree() < min_part || f.den().degree() < min_part) continue;
        return f;
    }
}

// Random reduced univariate function of exact degree deg.
inline UniRationalFunction random_outer(std::mt19937_64& rng, int deg, int height) {
    std::uniform_int_distribution<int> dd(0, deg);
    for (;;) {
        UniPoly n = random_unipoly(rng, deg, height);
        UniPoly d = random_unipoly(rng, dd(rng), height);
        if (d.is_zero()) continue;
        UniRationalFunction u = UniRationalFunction::reduced(n, d);
        if (u.degree() == deg) return u;
    }
}

}  // namespace testutil
