#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "ratdec/errors.hpp"
#include "ratdec/convex.hpp"

using namespace ratdec;
using testutil::mp;
using testutil::rf;
using testutil::urf;

namespace {

std::vector<LatticePoint> mapped(const std::vector<LatticePoint>& pts, const AffineMap& m) {
    std::vector<LatticePoint> out;
    for (const auto& p : pts) out.push_back(map_apply(m, p));
    return out;
}

}  // namespace

TEST_CASE("support and newton_polygon") {
    std::vector<LatticePoint> s = support(mp("X^2 + 3*X*Y - 1"));
    std::sort(s.begin(), s.end());
    CHECK(s == std::vector<LatticePoint>{{0, 0}, {1, 1}, {2, 0}});
    CHECK(support(mp("0")).empty());

    // triangle with an interior-edge point: hull keeps only the vertices
    std::vector<LatticePoint> hull =
        newton_polygon({{0, 0}, {2, 0}, {1, 0}, {0, 2}});
    CHECK(hull == std::vector<LatticePoint>{{0, 0}, {2, 0}, {0, 2}});

    CHECK(newton_polygon({{3, 4}}) == std::vector<LatticePoint>{{3, 4}});
    CHECK(newton_polygon({{0, 0}, {2, 2}, {1, 1}}) ==
          std::vector<LatticePoint>{{0, 0}, {2, 2}});
    CHECK_THROWS_AS(newton_polygon({}), InputError);
}

TEST_CASE("lattice_size goldens and unimodular invariance") {
    CHECK(lattice_size({{0, 0}, {3, 0}, {0, 3}}) == 10);
    CHECK(lattice_size({{5, 7}}) == 1);
    CHECK(lattice_size({{0, 0}, {4, 0}}) == 5);

    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> coord(0, 6);
    std::uniform_int_distribution<long> entry(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<LatticePoint> pts;
        for (int i = 0; i < 5; ++i) pts.push_back({coord(rng), coord(rng)});
        AffineMap m;
        do {
            m = AffineMap{entry(rng), entry(rng), entry(rng), entry(rng),
                          entry(rng), entry(rng)};
        } while (map_det(m) != 1 && map_det(m) != -1);
        CHECK(lattice_size(mapped(pts, m)) == lattice_size(pts));
    }
}

TEST_CASE("normalization helpers") {
    CHECK(is_normalized({{0, 0}, {2, 1}}));
    CHECK(is_normalized({{0, 1}, {1, 0}}));
    CHECK_FALSE(is_normalized({{1, 0}}));       // off the Y axis
    CHECK_FALSE(is_normalized({{0, 0}, {-1, 2}}));

    AffineMap t = normalize_translation({{2, 3}, {5, 3}});
    CHECK(t.a11 == 1);
    CHECK(t.a12 == 0);
    CHECK(t.a21 == 0);
    CHECK(t.a22 == 1);
    CHECK(t.b1 == -2);
    CHECK(t.b2 == -3);
    CHECK(is_normalized(mapped({{2, 3}, {5, 3}}, t)));

    CHECK(dense_size({{2, 3}, {5, 3}}) == 4);
    CHECK(dense_size({{0, 0}, {2, 2}}) == 9);
}

TEST_CASE("map algebra") {
    AffineMap shear{1, 1, 0, 1, 2, -1};
    AffineMap swap{0, 1, 1, 0, 0, 0};
    CHECK(map_det(shear) == 1);
    CHECK(map_det(swap) == -1);

    AffineMap both = map_compose(swap, shear);
    LatticePoint p{3, 4};
    CHECK(map_apply(both, p) == map_apply(swap, map_apply(shear, p)));

    AffineMap inv = map_inverse(shear);
    CHECK(map_apply(inv, map_apply(shear, p)) == p);
    AffineMap id = map_compose(inv, shear);
    CHECK(id.a11 == 1);
    CHECK(id.a12 == 0);
    CHECK(id.a21 == 0);
    CHECK(id.a22 == 1);
    CHECK(id.b1 == 0);
    CHECK(id.b2 == 0);
}

TEST_CASE("find_reduction_map flattens a slope-one staircase") {
    // support of a univariate polynomial evaluated at X*Y
    std::vector<LatticePoint> pts = {{0, 0}, {1, 1}, {2, 2}};
    AffineMap m = find_reduction_map(pts);
    std::vector<LatticePoint> img = mapped(pts, m);
    CHECK(dense_size(img) == 3);
    CHECK(is_normalized(img));
    CHECK(lattice_size(img) == lattice_size(pts));

    std::vector<LatticePoint> wide = {{0, 0}, {2, 2}, {4, 4}};
    std::vector<LatticePoint> wimg = mapped(wide, find_reduction_map(wide));
    std::sort(wimg.begin(), wimg.end());
    CHECK(wimg == std::vector<LatticePoint>{{0, 0}, {2, 0}, {4, 0}});
    CHECK(dense_size(wimg) == 5);

    // an already dense square stays put
    AffineMap sq = find_reduction_map({{0, 0}, {2, 0}, {0, 2}, {2, 2}});
    CHECK(sq.a11 == 1);
    CHECK(sq.a12 == 0);
    CHECK(sq.a21 == 0);
    CHECK(sq.a22 == 1);
    CHECK(sq.b1 == 0);
    CHECK(sq.b2 == 0);

    // a single far-away point reduces to a pure translation
    AffineMap pt = find_reduction_map({{7, 9}});
    CHECK(pt.a11 == 1);
    CHECK(pt.a12 == 0);
    CHECK(pt.a21 == 0);
    CHECK(pt.a22 == 1);
    CHECK(pt.b1 == -7);
    CHECK(pt.b2 == -9);
}

TEST_CASE("apply_map_to_function") {
    RationalFunction f = rf("1 + X*Y", "1 + X^2*Y^2");
    CHECK(apply_map_to_function(f, AffineMap{}) == f);

    // (x, y) -> (x, y - x) sends X*Y to X
    AffineMap unskew{1, 0, -1, 1, 0, 0};
    RationalFunction g = apply_map_to_function(f, unskew);
    CHECK(g == rf("1 + X", "1 + X^2"));

    RationalFunction back = apply_map_to_function(g, map_inverse(unskew));
    CHECK(back == f);

    // a roundtrip through a shear is the identity on any function
    RationalFunction fa = testutil::fixture_noncomposite();
    AffineMap shear{1, 2, 0, 1, 0, 0};
    CHECK(apply_map_to_function(apply_map_to_function(fa, shear), map_inverse(shear)) == fa);
}

TEST_CASE("convex_decompose agrees with the dense path on the composite fixture") {
    RationalFunction fb = testutil::fixture_composite();
    Decomposition dense = decompose(fb);
    Decomposition conv = convex_decompose(fb);
    CHECK(conv.status == DecomposeStatus::Composite);
    CHECK(conv.u.degree() == dense.u.degree());
    CHECK(conv.h.degree() == dense.h.degree());
    CHECK(testutil::exactly_equal(compose_uni(conv.u, conv.h), fb));
}

TEST_CASE("convex_decompose handles sparse composites") {
    // (X*Y + 3)^2 lives on a line segment of the lattice
    RationalFunction f = rf("(X*Y + 3)^2", "1");
    Decomposition dec = convex_decompose(f);
    CHECK(dec.status == DecomposeStatus::Composite);
    CHECK(dec.u.degree() == 2);
    CHECK(dec.h.degree() == 2);
    CHECK(testutil::exactly_equal(compose_uni(dec.u, dec.h), f));

    // u = (T^2 + T) / (T^2 + 1) composed with X^3*Y + 2
    RationalFunction g = rf("(X^3*Y + 2)^2 + X^3*Y + 2", "(X^3*Y + 2)^2 + 1");
    Decomposition dg = convex_decompose(g);
    CHECK(dg.status == DecomposeStatus::Composite);
    CHECK(dg.u.degree() == 2);
    CHECK(dg.h.degree() == 4);
    CHECK(testutil::exactly_equal(compose_uni(dg.u, dg.h), g));
}

TEST_CASE("convex_decompose stays non-composite under a shear transport") {
    RationalFunction fa = testutil::fixture_noncomposite();
    AffineMap shear{1, 1, 0, 1, 0, 0};
    RationalFunction g = apply_map_to_function(fa, shear);
    Decomposition dec = convex_decompose(g);
    CHECK(dec.status == DecomposeStatus::NonComposite);
    CHECK(dec.h == RationalFunction::reduced(g.num(), g.den()));
}
