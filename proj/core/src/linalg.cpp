#include "ratdec/linalg.hpp"

#include <algorithm>

namespace ratdec {

RrefResult rref(MatrixQ m) {
    RrefResult out;
    std::size_t nrows = m.size();
    std::size_t ncols = nrows ? m[0].size() : 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < nrows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < nrows && m[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(m[sel], m[pivot_row]);
        Rational inv = Rational(1) / m[pivot_row][col];
        for (std::size_t j = col; j < ncols; ++j) m[pivot_row][j] *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == pivot_row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[pivot_row][j];
        }
        out.pivot_cols.push_back(static_cast<int>(col));
        ++pivot_row;
    }
    out.rank = static_cast<int>(pivot_row);
    out.R = std::move(m);
    return out;
}

MatrixQ kernel_basis(const MatrixQ& m, int ncols) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    MatrixQ basis;
    for (int fc = 0; fc < ncols; ++fc) {
        if (is_pivot[fc]) continue;
        VectorQ v(ncols, Rational(0));
        v[fc] = 1;
        for (int k = 0; k < rr.rank; ++k) v[rr.pivot_cols[k]] = -rr.R[k][fc];
        basis.push_back(std::move(v));
    }
    return rref(std::move(basis)).R;
}

MatrixQ project_rebase(const MatrixQ& vectors, int start, int len) {
    MatrixQ sliced;
    sliced.reserve(vectors.size());
    for (const VectorQ& v : vectors)
        sliced.emplace_back(v.begin() + start, v.begin() + start + len);
    RrefResult rr = rref(std::move(sliced));
    rr.R.resize(rr.rank);
    return rr.R;
}

}  // namespace ratdec
