#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ratdec/convex.hpp"
#include "ratdec/decompose.hpp"
#include "ratdec/derivation.hpp"
#include "ratdec/expr.hpp"
#include "ratdec/factor.hpp"

using namespace ratdec;

namespace {

const std::vector<std::string> kXY = {"X", "Y"};

MultiPoly poly(const std::string& s) { return parse_polynomial(s, kXY); }

MultiPoly random_dense(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    MultiPoly p(2);
    for (const Monomial& m : system_monomials(2, deg)) {
        int c = coeff(rng);
        if (c != 0) p.add_term(m, Rational(c));
    }
    p.add_term(Monomial{0, static_cast<unsigned>(deg)}, Rational(1));
    return p;
}

// f = u(h) with deg u = 2 and a dense random h of degree d/2
RationalFunction roundtrip_input(int d) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(d) * 1000003);
    UniRationalFunction u =
        UniRationalFunction::reduced(UniPoly({0, -1, 1}), UniPoly({1, 0, 1}));
    for (;;) {
        RationalFunction h =
            RationalFunction::reduced(random_dense(rng, d / 2), random_dense(rng, d / 2));
        RationalFunction f = compose_uni(u, h);
        if (f.degree() == d) return f;
    }
}

}  // namespace

static void BM_decompose_roundtrip(benchmark::State& state) {
    RationalFunction f = roundtrip_input(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Decomposition dec = decompose(f);
        benchmark::DoNotOptimize(dec.status);
    }
}
BENCHMARK(BM_decompose_roundtrip)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_factor_bivariate_pencil_member(benchmark::State& state) {
    MultiPoly h1 = poly("(1+X+Y^2)*(X+Y)");
    MultiPoly h2 = poly("(1+X+Y^2)*(X+Y) - (Y^2-X-1)*(Y-2*X+1)");
    MultiPoly p = h1 * (h1 - h2) * Rational(101) - (h1 * h1 + h2 * h2) * Rational(90);
    for (auto _ : state) {
        Factorization fac = factor_bivariate(p);
        benchmark::DoNotOptimize(fac.factors.size());
    }
}
BENCHMARK(BM_factor_bivariate_pencil_member)->Unit(benchmark::kMillisecond);

static void BM_convex_decompose_sparse(benchmark::State& state) {
    RationalFunction f = RationalFunction::reduced(poly("(X^3*Y + 2)^2 + X^3*Y + 2"),
                                                   poly("(X^3*Y + 2)^2 + 1"));
    for (auto _ : state) {
        Decomposition dec = convex_decompose(f);
        benchmark::DoNotOptimize(dec.status);
    }
}
BENCHMARK(BM_convex_decompose_sparse)->Unit(benchmark::kMillisecond);

static void BM_cofactor(benchmark::State& state) {
    RationalFunction f = RationalFunction::reduced(
        poly("(1+X+Y^2)*(X+Y)"), poly("(1+X+Y^2)*(X+Y) - (Y^2-X-1)*(Y-2*X+1)"));
    MultiPoly g = poly("1 + X + Y^2");
    for (auto _ : state) {
        CofactorVector c = cofactor(f, g);
        benchmark::DoNotOptimize(c.size());
    }
}
BENCHMARK(BM_cofactor)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
