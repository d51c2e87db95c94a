#pragma once

#include <vector>

#include "ratdec/multipoly.hpp"
#include "ratdec/rational_function.hpp"

namespace ratdec {

// One polynomial per component l = 2..n.
using CofactorVector = std::vector<MultiPoly>;

// The derivation attached to f = f1/f2, applied to F.  Component l (= 2..n):
//   (d1(f1) f2 - f1 d1(f2)) * dl(F) - (dl(f1) f2 - f1 dl(f2)) * d1(F)
// where dk is the partial derivative in X_k.
CofactorVector jacobian_apply(const RationalFunction& f, const MultiPoly& F);

// Cofactor vector G of a Darboux polynomial F, defined by D(F)_l == F * G_l;
// throws NotDarbouxError when some component is not divisible by F.
CofactorVector cofactor(const RationalFunction& f, const MultiPoly& F);

// True when g is constant along the level sets of f: numerator and
// denominator of g must be Darboux for the derivation of f with equal
// cofactor vectors.
bool is_first_integral(const RationalFunction& f, const RationalFunction& g);

}  // namespace ratdec
