#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ratdec/linalg.hpp"

using namespace ratdec;

namespace {

MatrixQ from_int(const std::vector<std::vector<int>>& rows) {
    MatrixQ m;
    for (const auto& row : rows) {
        VectorQ r;
        for (int v : row) r.push_back(Rational(v));
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace

TEST_CASE("rref basics") {
    MatrixQ id = from_int({{1, 0}, {0, 1}});
    RrefResult r = rref(id);
    CHECK(r.R == id);
    CHECK(r.rank == 2);
    CHECK(r.pivot_cols == std::vector<int>{0, 1});

    RrefResult p = rref(from_int({{2, 4}, {1, 2}}));
    CHECK(p.R == from_int({{1, 2}, {0, 0}}));
    CHECK(p.rank == 1);
    CHECK(p.pivot_cols == std::vector<int>{0});
}

TEST_CASE("rref of the golden recombination matrix has rank 3") {
    RrefResult r = rref(testutil::golden_system_matrix());
    CHECK(r.rank == 3);
    // idempotence
    CHECK(rref(r.R).R == r.R);
}

TEST_CASE("kernel bases") {
    MatrixQ k = kernel_basis(testutil::golden_system_matrix(), 4);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == VectorQ{1, 1, -1, -1});

    CHECK(kernel_basis(from_int({{1, 0}, {0, 1}}), 2).empty());

    MatrixQ k2 = kernel_basis(from_int({{1, 1, 0}}), 3);
    REQUIRE(k2.size() == 2);
    CHECK(k2[0] == VectorQ{1, -1, 0});
    CHECK(k2[1] == VectorQ{0, 0, 1});
}

TEST_CASE("project_rebase") {
    MatrixQ v{{Rational(1), Rational(1), Rational(-1), Rational(-1)}};
    MatrixQ b = project_rebase(v, 0, 2);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == VectorQ{1, 1});

    CHECK(project_rebase({}, 0, 2).empty());

    // a window where every projection vanishes yields the empty basis
    MatrixQ w{{Rational(0), Rational(0), Rational(3)}};
    CHECK(project_rebase(w, 0, 2).empty());
}

TEST_CASE("kernel vectors really solve the system") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> e(-5, 5);
    for (int trial = 0; trial < 8; ++trial) {
        int rows = 3, cols = 5;
        MatrixQ m(rows, VectorQ(cols));
        for (auto& row : m)
            for (auto& x : row) x = Rational(e(rng));
        MatrixQ k = kernel_basis(m, cols);
        RrefResult r = rref(m);
        CHECK(static_cast<int>(k.size()) + r.rank == cols);
        for (const VectorQ& v : k)
            for (const VectorQ& row : m) {
                Rational dot(0);
                for (int c = 0; c < cols; ++c) dot += row[c] * v[c];
                CHECK(dot == 0);
            }
    }
}
