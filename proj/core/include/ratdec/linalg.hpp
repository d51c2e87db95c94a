#pragma once

#include <vector>

#include "ratdec/rational.hpp"

namespace ratdec {

using VectorQ = std::vector<Rational>;
using MatrixQ = std::vector<VectorQ>;  // row-major

struct RrefResult {
    MatrixQ R;
    std::vector<int> pivot_cols;
    int rank = 0;
};

// Reduced row echelon form with deterministic (topmost nonzero) pivoting.
RrefResult rref(MatrixQ m);

// Basis of the right kernel of m acting on Q^ncols; each basis vector is a
// row, and the rows themselves are in reduced row echelon form.
MatrixQ kernel_basis(const MatrixQ& m, int ncols);

// Restriction of a vector family to the coordinate window [start, start+len):
// slice, re-reduce to row echelon form, drop zero rows.
MatrixQ project_rebase(const MatrixQ& vectors, int start, int len);

}  // namespace ratdec
