#pragma once

#include <array>
#include <vector>

#include "ratdec/decompose.hpp"
#include "ratdec/rational_function.hpp"

namespace ratdec {

// Exponent vector of a bivariate monomial, possibly off the first quadrant
// while a change of monomial basis is in flight.
using LatticePoint = std::array<long, 2>;

// p |-> A*p + b with det A = +-1.  Acting on exponents this is a monomial
// change of basis of the Laurent ring Q[X^, Y^].
struct AffineMap {
    long a11 = 1, a12 = 0;
    long a21 = 0, a22 = 1;
    long b1 = 0, b2 = 0;
};

long map_det(const AffineMap& m);
LatticePoint map_apply(const AffineMap& m, const LatticePoint& p);
AffineMap map_compose(const AffineMap& outer, const AffineMap& inner);
AffineMap map_inverse(const AffineMap& m);

// Exponent vectors of the terms of a bivariate polynomial.
std::vector<LatticePoint> support(const MultiPoly& p);

// Convex hull, counterclockwise, starting from the lexicographically least
// vertex.  Degenerate inputs give 1 or 2 vertices; empty input is an error.
std::vector<LatticePoint> newton_polygon(std::vector<LatticePoint> pts);

// Number of integer points inside or on the convex hull of pts; invariant
// under any AffineMap.  Pre: pts nonempty.
long lattice_size(const std::vector<LatticePoint>& pts);

// True when pts lies in the first quadrant and touches both axes.
bool is_normalized(const std::vector<LatticePoint>& pts);

// The pure translation moving pts against both axes.
AffineMap normalize_translation(const std::vector<LatticePoint>& pts);

// Bounding-box cost (dx+1)*(dy+1) of pts after translation to the origin.
long dense_size(const std::vector<LatticePoint>& pts);

// Searches products of at most three hull-edge shears and axis swaps for the
// map minimizing dense_size of the image.  The identity is displaced only by
// a strict improvement; other ties go to the lexicographically least
// (a11, a12, a21, a22, b1, b2).  The translation normalizes the image.
AffineMap find_reduction_map(const std::vector<LatticePoint>& pts);

// Image of f under the change of monomial basis: the linear part permutes the
// Laurent monomials of both parts and the pair is cleared back to the first
// quadrant with one joint shift, which leaves the function's value unchanged
// up to the substitution itself.
RationalFunction apply_map_to_function(const RationalFunction& f, const AffineMap& m);

// decompose() conjugated by the reduction map of the joint support: sparse
// inputs whose polygon is far from the full triangle become dense and small
// first, and the inner function is mapped back afterwards.
Decomposition convex_decompose(const RationalFunction& f, const DecomposeOptions& opts = {});

}  // namespace ratdec
