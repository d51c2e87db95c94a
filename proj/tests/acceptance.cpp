// Acceptance gate: one self-contained check per release criterion, each
// printing a single PASS/FAIL line.  The process exit code is the number of
// failed criteria, so `ctest` (or a shell) sees the full picture at once.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "ratdec/errors.hpp"
#include "ratdec/convex.hpp"
#include "ratdec/decompose.hpp"
#include "ratdec/derivation.hpp"
#include "ratdec/factor.hpp"

using namespace ratdec;
using Clock = std::chrono::steady_clock;

namespace {

// wall-clock limits, fixed as part of the gate
constexpr double kGoldenNonCompositeLimitMs = 1000.0;
constexpr double kGoldenCompositeLimitMs = 2000.0;
constexpr double kRandomBatchLimitMs = 600000.0;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    Rational c = a.leading_coeff() / b.leading_coeff();
    return a == b * c;
}

bool proportional_vec(const VectorQ& a, const VectorQ& b) {
    if (a.size() != b.size()) return false;
    std::size_t i = 0;
    while (i < b.size() && b[i] == 0) ++i;
    if (i == b.size() || a[i] == 0) return false;
    Rational c = a[i] / b[i];
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] != b[j] * c) return false;
    return true;
}

bool same_rows(MatrixQ a, MatrixQ b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::vector<LatticePoint> joint_support(const RationalFunction& f) {
    std::vector<LatticePoint> pts = support(f.num());
    std::vector<LatticePoint> den = support(f.den());
    pts.insert(pts.end(), den.begin(), den.end());
    return pts;
}

// ---- criterion 1: the fully worked non-composite example ----
bool golden_non_composite(std::string& detail) {
    auto t0 = Clock::now();
    RationalFunction fa = testutil::fixture_noncomposite();

    Decomposition dec = decompose(fa);
    bool ok = dec.status == DecomposeStatus::NonComposite;
    if (!ok) detail = "expected a non-composite verdict";

    GoodHomographyResult gh = good_homography(fa);
    if (gh.lambda_a != 0 || gh.lambda_b != 1) {
        ok = false;
        detail = "pencil values, got (" + to_string(gh.lambda_a) + ", " +
                 to_string(gh.lambda_b) + ")";
    }

    CofactorVector g = cofactor(fa, testutil::mp("1 + X + Y^2"));
    if (g.size() != 1 ||
        g[0] != testutil::mp("-6*Y^4 + 8*X^2*Y + 7*X*Y^2 - 6*Y^3 + 3*X^2 - 2*X*Y "
                             "+ 3*Y^2 + 2*X + 2*Y - 1")) {
        ok = false;
        detail = "cofactor of the quadratic numerator factor";
    }

    RecombineResult rec = recombine(gh.F, std::nullopt, std::nullopt);
    if (rec.kernel.size() != 1 ||
        !proportional_vec(rec.kernel[0], {Rational(-1), Rational(-1), Rational(1), Rational(1)})) {
        ok = false;
        detail = "recombination kernel is not the expected line";
    }

    if (check_hypothesis(fa).resultant_r != UniPoly({-4, -24, -92, -64, 8})) {
        ok = false;
        detail = "pencil discriminant polynomial";
    }

    double ms = ms_since(t0);
    if (ms >= kGoldenNonCompositeLimitMs) {
        ok = false;
        detail = "took " + std::to_string(ms) + " ms";
    }
    return ok;
}

// ---- criterion 2: the fully worked composite example ----
bool golden_composite(std::string& detail) {
    auto t0 = Clock::now();
    RationalFunction fb = testutil::fixture_composite();
    MultiPoly h1 = testutil::fixture_noncomposite().num();
    MultiPoly h2 = testutil::fixture_noncomposite().den();

    Decomposition dec = decompose(fb);
    bool ok = dec.status == DecomposeStatus::Composite;
    if (!ok) detail = "expected a composite verdict";

    if (!dec.certificate || dec.certificate->lambda_b != Rational(90, 101)) {
        ok = false;
        detail = "second pencil value is not 90/101";
    }
    if (dec.certificate) {
        MatrixQ want_bn{{Rational(1), Rational(0), Rational(0), Rational(1)},
                        {Rational(0), Rational(1), Rational(1), Rational(0)}};
        MatrixQ want_bd{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
        if (!same_rows(dec.certificate->basis_num, want_bn) ||
            !same_rows(dec.certificate->basis_den, want_bd)) {
            ok = false;
            detail = "exponent bases differ";
        }
    }

    if (!proportional(dec.h.num(), h1) || !proportional(dec.h.den(), h1 * 11 + h2 * 9)) {
        ok = false;
        detail = "inner function is not (h1, 11*h1 + 9*h2) up to scalars";
    }
    if (dec.u.degree() != 2 || dec.h.degree() != 3) {
        ok = false;
        detail = "degrees, got u:" + std::to_string(dec.u.degree()) +
                 " h:" + std::to_string(dec.h.degree());
    }
    if (!testutil::exactly_equal(compose_uni(dec.u, dec.h), fb)) {
        ok = false;
        detail = "recomposition is not exact";
    }

    double ms = ms_since(t0);
    if (ms >= kGoldenCompositeLimitMs) {
        ok = false;
        detail = "took " + std::to_string(ms) + " ms";
    }
    return ok;
}

// ---- criterion 3: random composite round-trips ----
bool random_composites(std::string& detail) {
    std::mt19937_64 rng(271828);
    std::uniform_int_distribution<int> dh_pick(2, 4), du_pick(2, 3);
    auto t0 = Clock::now();

    auto make_composite = [&](int du, int dh) -> RationalFunction {
        for (;;) {
            RationalFunction h = testutil::random_reduced(rng, 2, dh, 10);
            if (h.degree() != dh) continue;
            try {
                if (decompose(h).status != DecomposeStatus::NonComposite) continue;
            } catch (const Error&) {
                continue;
            }
            UniRationalFunction u = testutil::random_outer(rng, du, 10);
            RationalFunction f = compose_uni(u, h);
            if (f.degree() == du * dh) return f;
        }
    };

    int passed = 0;
    for (int i = 0; i < 100; ++i) {
        int du = du_pick(rng), dh = dh_pick(rng);
        RationalFunction f = make_composite(du, dh);
        try {
            Decomposition dec = decompose(f);
            bool good = dec.status == DecomposeStatus::Composite &&
                        dec.h.degree() == dh && dec.u.degree() == du &&
                        testutil::exactly_equal(compose_uni(dec.u, dec.h), f);
            passed += good;
            if (!good && detail.empty())
                detail = "sample " + std::to_string(i) + " (deg u " + std::to_string(du) +
                         ", deg h " + std::to_string(dh) + ") mis-decomposed";
        } catch (const std::exception& e) {
            if (detail.empty()) detail = "sample " + std::to_string(i) + ": " + e.what();
        }
    }

    double ms = ms_since(t0);
    if (passed != 100) {
        detail = std::to_string(passed) + "/100; " + detail;
        return false;
    }
    if (ms >= kRandomBatchLimitMs) {
        detail = "took " + std::to_string(ms) + " ms";
        return false;
    }
    return true;
}

// ---- criterion 4: verdict against a pencil-factoring oracle ----
bool verdict_oracle(std::string& detail) {
    std::mt19937_64 rng(314159);
    std::uniform_int_distribution<long> lam_pick(-1000, 1000);

    int agreed = 0;
    for (int i = 0; i < 25; ++i) {
        RationalFunction f = [&] {
            for (;;) {
                RationalFunction cand = testutil::random_reduced(rng, 2, 5, 5);
                if (cand.degree() < 2) continue;
                if (!check_hypothesis(cand).satisfied) continue;
                return cand;
            }
        }();

        // 30 degree-preserving pencil members; one irreducible member rules
        // out any decomposition with deg u >= 2
        bool found_irreducible = false;
        for (int j = 0; j < 30 && !found_irreducible; ++j) {
            MultiPoly member(2);
            for (;;) {
                member = f.num() - f.den() * Rational(lam_pick(rng));
                if (member.degree() == f.degree()) break;
            }
            Factorization fac = factor_bivariate(member);
            found_irreducible = fac.factors.size() == 1 && fac.factors[0].second == 1;
        }

        try {
            Decomposition dec = decompose(f);
            bool good;
            if (dec.status == DecomposeStatus::Composite)
                good = dec.u.degree() >= 2 &&
                       testutil::exactly_equal(compose_uni(dec.u, dec.h), f);
            else
                good = found_irreducible;
            agreed += good;
            if (!good && detail.empty()) detail = "sample " + std::to_string(i) + " disagrees";
        } catch (const std::exception& e) {
            if (detail.empty()) detail = "sample " + std::to_string(i) + ": " + e.what();
        }
    }
    if (agreed != 25) {
        detail = std::to_string(agreed) + "/25; " + detail;
        return false;
    }
    return true;
}

// ---- criterion 5: factorizations multiply back exactly ----
bool factoring_recovery(std::string& detail) {
    std::mt19937_64 rng(161803);
    int passed = 0;

    for (int i = 0; i < 50; ++i) {
        std::uniform_int_distribution<int> nf(2, 5);
        int parts = nf(rng), total = 0;
        UniPoly prod = UniPoly::constant(testutil::rand_nonzero_coeff(rng, 9));
        for (int j = 0; j < parts && total < 30; ++j) {
            std::uniform_int_distribution<int> dd(1, std::min(10, 30 - total));
            int d = dd(rng);
            total += d;
            prod = prod * testutil::random_unipoly(rng, d, 9);
        }
        passed += factor_univariate(prod).expand() == prod;
    }

    for (int i = 0; i < 25; ++i) {
        std::uniform_int_distribution<int> nf(2, 4);
        int parts = nf(rng), total = 0;
        MultiPoly prod = MultiPoly::constant(2, testutil::rand_nonzero_coeff(rng, 5));
        for (int j = 0; j < parts && total < 12; ++j) {
            std::uniform_int_distribution<int> dd(1, std::min(3, 12 - total));
            int d = dd(rng);
            total += d;
            prod = prod * testutil::random_poly(rng, 2, d, 5, 70, true);
        }
        passed += factor_bivariate(prod).expand() == prod;
    }

    if (passed != 75) {
        detail = std::to_string(passed) + "/75 products recovered";
        return false;
    }
    return true;
}

// ---- criterion 6: derivation and cofactor identities ----
bool derivation_identities(std::string& detail) {
    std::mt19937_64 rng(577215);
    for (int i = 0; i < 50; ++i) {
        RationalFunction f = testutil::random_reduced(rng, 2, 6, 5, 1);
        MultiPoly p = testutil::random_poly(rng, 2, 3, 5);
        MultiPoly q = testutil::random_poly(rng, 2, 3, 5);

        CofactorVector dp = jacobian_apply(f, p);
        CofactorVector dq = jacobian_apply(f, q);
        CofactorVector dpq = jacobian_apply(f, p * q);
        if (dpq[0] != p * dq[0] + q * dp[0]) {
            detail = "Leibniz rule fails on sample " + std::to_string(i);
            return false;
        }

        try {
            CofactorVector gn = cofactor(f, f.num());
            CofactorVector gd = cofactor(f, f.den());
            CofactorVector gp = cofactor(f, f.num() * f.den());
            if (gp[0] != gn[0] + gd[0]) {
                detail = "cofactor additivity fails on sample " + std::to_string(i);
                return false;
            }
            for (const MultiPoly& side : {f.num(), f.den()})
                for (const auto& fm : factor_bivariate(side).factors)
                    cofactor(f, fm.first);
        } catch (const NotDarbouxError&) {
            detail = "a part or factor is not invariant on sample " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// ---- criterion 7: pencil squarefreeness and root divisibility ----
bool pencil_properties(std::string& detail) {
    std::mt19937_64 rng(141421);

    for (int i = 0; i < 50; ++i) {
        RationalFunction f = testutil::random_reduced(rng, 2, 5, 5);
        MultiPoly pencil3 =
            insert_var(f.num(), 2) + insert_var(f.den(), 2) * MultiPoly::variable(3, 2);
        if (!is_squarefree(pencil3)) {
            detail = "trivariate pencil has a repeated factor, sample " + std::to_string(i);
            return false;
        }
    }

    std::uniform_int_distribution<int> kpick(2, 3);
    std::uniform_int_distribution<long> tnum(-9, 9), tden(1, 9);
    for (int i = 0; i < 25; ++i) {
        int k = kpick(rng);
        UniRationalFunction u = [&] {
            for (;;) {
                UniRationalFunction c = testutil::random_outer(rng, k, 5);
                if (c.num().degree() == k && c.den().degree() == k) return c;
            }
        }();
        RationalFunction h = testutil::random_reduced(rng, 2, 3, 5, 1);
        RationalFunction f = compose_uni(u, h);

        Rational lam;
        UniPoly pencil;
        for (;;) {
            Rational t = make_rational(Integer(tnum(rng)), Integer(tden(rng)));
            if (u.den().eval(t) == 0) continue;
            lam = u.num().eval(t) / u.den().eval(t);
            pencil = u.num() - u.den() * lam;
            if (pencil.degree() == k) break;
        }

        MultiPoly member = f.num() - f.den() * lam;
        bool divided_any = false;
        for (const auto& fm : factor_univariate(pencil).factors) {
            if (fm.first.degree() != 1) continue;
            Rational root = -fm.first.coeff(0) / fm.first.coeff(1);
            try {
                divide_exact(member, h.num() - h.den() * root);
                divided_any = true;
            } catch (const NotDivisibleError&) {
                detail = "member not divisible at a rational root, sample " + std::to_string(i);
                return false;
            }
        }
        if (!divided_any) {
            detail = "no rational root surfaced on sample " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// ---- criterion 8: convex preprocessing agrees with the dense path ----
bool convex_agreement(std::string& detail) {
    std::mt19937_64 rng(662607);
    std::uniform_int_distribution<int> spick(1, 2), axis(0, 1);

    for (int i = 0; i < 25; ++i) {
        RationalFunction f = [&] {
            for (;;) {
                UniRationalFunction u = testutil::random_outer(rng, 2, 5);
                RationalFunction h = testutil::random_reduced(rng, 2, 2, 5, 1);
                if (h.degree() != 2) continue;
                RationalFunction c = compose_uni(u, h);
                if (c.degree() == 4) return c;
            }
        }();
        int s = spick(rng);
        AffineMap shear = axis(rng) ? AffineMap{1, s, 0, 1, 0, 0} : AffineMap{1, 0, s, 1, 0, 0};
        RationalFunction g = apply_map_to_function(f, shear);

        std::vector<LatticePoint> pts = joint_support(g);
        AffineMap m = find_reduction_map(pts);
        std::vector<LatticePoint> img;
        for (const LatticePoint& p : pts) img.push_back(map_apply(m, p));
        if (map_det(m) != 1 && map_det(m) != -1) {
            detail = "reduction map is not unimodular, sample " + std::to_string(i);
            return false;
        }
        if (lattice_size(img) != lattice_size(pts)) {
            detail = "lattice count changed, sample " + std::to_string(i);
            return false;
        }
        if (!is_normalized(img)) {
            detail = "transformed support not normalized, sample " + std::to_string(i);
            return false;
        }
        if (dense_size(img) > dense_size(pts)) {
            detail = "dense size grew, sample " + std::to_string(i);
            return false;
        }

        try {
            Decomposition dc = convex_decompose(g);
            Decomposition dd = decompose(g);
            bool good = dc.status == DecomposeStatus::Composite &&
                        dd.status == DecomposeStatus::Composite &&
                        dc.u.degree() == dd.u.degree() && dc.h.degree() == dd.h.degree() &&
                        testutil::exactly_equal(compose_uni(dc.u, dc.h), g) &&
                        testutil::exactly_equal(compose_uni(dd.u, dd.h), g);
            if (!good) {
                detail = "paths disagree on sample " + std::to_string(i);
                return false;
            }
        } catch (const std::exception& e) {
            detail = "sample " + std::to_string(i) + ": " + e.what();
            return false;
        }
    }
    return true;
}

// ---- criterion 9: round-trip timings, reported but never asserted ----
bool timing_report(std::string& detail) {
    std::mt19937_64 rng(999983);
    std::ostringstream report;
    report << std::fixed << std::setprecision(1);

    for (int d : {4, 8, 16}) {
        RationalFunction f = [&] {
            for (;;) {
                UniRationalFunction u = testutil::random_outer(rng, 2, 3);
                RationalFunction h = testutil::random_reduced(rng, 2, d / 2, 3, 1);
                if (h.degree() != d / 2) continue;
                RationalFunction c = compose_uni(u, h);
                if (c.degree() == d) return c;
            }
        }();
        auto t0 = Clock::now();
        Decomposition dec = decompose(f);
        double ms = ms_since(t0);
        bool roundtrip = dec.status == DecomposeStatus::Composite &&
                         testutil::exactly_equal(compose_uni(dec.u, dec.h), f);
        report << " d=" << d << ": " << ms << " ms" << (roundtrip ? "" : " (round-trip broke)");
    }
    detail = report.str();
    return true;
}

struct Criterion {
    const char* name;
    bool (*run)(std::string&);
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"golden non-composite fixture", golden_non_composite},
        {"golden composite fixture", golden_composite},
        {"random composite round-trips (100)", random_composites},
        {"verdict vs pencil factoring oracle (25)", verdict_oracle},
        {"exact factorization recovery (75)", factoring_recovery},
        {"derivation and cofactor identities (50)", derivation_identities},
        {"pencil squarefreeness and root divisibility", pencil_properties},
        {"convex preprocessing agreement (25)", convex_agreement},
        {"timing report", timing_report},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        auto t0 = Clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        double ms = ms_since(t0);
        std::cout << (ok ? "PASS" : "FAIL") << " " << c.name << " [" << std::fixed
                  << std::setprecision(1) << ms << " ms]";
        if (!detail.empty()) std::cout << " — " << detail;
        std::cout << "\n" << std::flush;
        failures += !ok;
    }
    return failures;
}
