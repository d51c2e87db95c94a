#include <algorithm>

#include "ratdec/errors.hpp"
#include "ratdec/factor.hpp"

namespace ratdec {

MultiPoly Factorization::expand() const {
    MultiPoly r = MultiPoly::constant(nvars, unit);
    for (const auto& [f, e] : factors) r = r * pow(f, static_cast<unsigned>(e));
    return r;
}

namespace {

Factorization factor_from_supplied(const MultiPoly& p, const std::vector<MultiPoly>& supplied) {
    Factorization out;
    out.nvars = p.nvars();
    MultiPoly rem = p;
    std::vector<MultiPoly> seen;
    for (const MultiPoly& s : supplied) {
        if (s.nvars() != p.nvars())
            throw UnverifiedFactorsError("supplied factor has the wrong variable count");
        if (s.is_zero() || s.is_constant())
            throw UnverifiedFactorsError("supplied factor is constant");
        MultiPoly f = s.primitive_part();
        if (std::find(seen.begin(), seen.end(), f) != seen.end()) continue;
        seen.push_back(f);
        int mult = 0;
        while (true) {
            try {
                MultiPoly q = divide_exact(rem, f);
                rem = std::move(q);
                ++mult;
            } catch (const NotDivisibleError&) {
                break;
            }
        }
        if (mult == 0)
            throw UnverifiedFactorsError("supplied factor does not divide the input");
        out.factors.emplace_back(std::move(f), mult);
    }
    if (!rem.is_constant())
        throw UnverifiedFactorsError("supplied factors do not multiply back to the input");
    out.unit = rem.constant_value();
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        return compare_display(a.first, b.first) < 0;
    });
    return out;
}

Factorization factor_univariate_as_multi(const MultiPoly& p) {
    UniFactorization uf = factor_univariate(to_unipoly(p, 0));
    Factorization out;
    out.nvars = 1;
    out.unit = uf.unit;
    for (const auto& [f, e] : uf.factors) out.factors.emplace_back(from_unipoly(f, 0, 1), e);
    return out;
}

}  // namespace

Factorization factor_with_oracle(const MultiPoly& p,
                                 const std::optional<std::vector<MultiPoly>>& supplied) {
    if (p.is_zero()) throw InputError("cannot factor the zero polynomial");
    if (supplied) return factor_from_supplied(p, *supplied);
    if (p.is_constant()) {
        Factorization out;
        out.nvars = p.nvars();
        out.unit = p.constant_value();
        return out;
    }
    switch (p.nvars()) {
        case 1:
            return factor_univariate_as_multi(p);
        case 2:
            return factor_bivariate(p);
        default:
            throw MissingOracleError(
                "factoring in three or more variables requires a supplied factor list");
    }
}

}  // namespace ratdec
