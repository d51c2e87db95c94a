#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ratdec/multipoly.hpp"
#include "ratdec/unipoly.hpp"

namespace ratdec {

// p == unit * prod factors[i].first ^ factors[i].second, each factor
// irreducible over Q, primitive with integer coefficients and positive
// leading coefficient, listed in canonical display order.
struct UniFactorization {
    Rational unit{1};
    std::vector<std::pair<UniPoly, int>> factors;

    UniPoly expand() const;
};

struct Factorization {
    int nvars = 0;
    Rational unit{1};
    std::vector<std::pair<MultiPoly, int>> factors;

    MultiPoly expand() const;
};

// Complete factorization over Q; the input must be nonzero.
UniFactorization factor_univariate(const UniPoly& p);

// Complete factorization over Q of a polynomial in two variables, by Hensel
// lifting from a good specialization of the first variable.
Factorization factor_bivariate(const MultiPoly& p);

// Dispatch: a supplied list of irreducible factors is verified by exact
// division and used for any number of variables; otherwise one- and
// two-variable inputs are factored directly and more variables raise
// MissingOracleError.
Factorization factor_with_oracle(const MultiPoly& p,
                                 const std::optional<std::vector<MultiPoly>>& supplied);

}  // namespace ratdec
