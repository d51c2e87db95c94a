#include <algorithm>
#include <utility>
#include <vector>

#include "ratdec/errors.hpp"
#include "ratdec/factor.hpp"

namespace ratdec {

namespace {

// Polynomials in Q[X][Y]: entry k is the coefficient of Y^k, a UniPoly in X.
using YPoly = std::vector<UniPoly>;

UniPoly trunc_x(const UniPoly& f, int m) {
    std::vector<Rational> cs(f.coeffs());
    if (static_cast<int>(cs.size()) > m) cs.resize(m);
    return UniPoly(std::move(cs));
}

void ypoly_trim(YPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

YPoly ypoly_mul_trunc(const YPoly& a, const YPoly& b, int m) {
    if (a.empty() || b.empty()) return {};
    YPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + trunc_x(a[i] * b[j], m);
    ypoly_trim(r);
    return r;
}

YPoly multipoly_to_ypoly(const MultiPoly& p) {
    std::vector<std::vector<Rational>> cs;
    for (const auto& [mono, c] : p.terms()) {
        if (cs.size() <= mono[1]) cs.resize(mono[1] + 1);
        if (cs[mono[1]].size() <= mono[0]) cs[mono[1]].resize(mono[0] + 1, Rational(0));
        cs[mono[1]][mono[0]] = c;
    }
    YPoly r(cs.size());
    for (std::size_t k = 0; k < cs.size(); ++k) r[k] = UniPoly(std::move(cs[k]));
    return r;
}

MultiPoly ypoly_to_multipoly(const YPoly& a) {
    MultiPoly p(2);
    for (std::size_t k = 0; k < a.size(); ++k)
        for (int j = 0; j <= a[k].degree(); ++j) {
            Rational c = a[k].coeff(static_cast<unsigned>(j));
            if (c != 0) p.add_term({static_cast<unsigned>(j), static_cast<unsigned>(k)}, c);
        }
    return p;
}

// Inverse of a modulo f over Q; pre: gcd(a, f) == 1.
UniPoly uq_inverse_mod(const UniPoly& a, const UniPoly& f) {
    UniPoly r0 = f, r1 = divmod(a, f).second;
    UniPoly s0, s1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        UniPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw InternalError("inverse of a non-unit residue");
    return divmod(s0 * (Rational(1) / r0.coeff(0)), f).second;
}

// Lifts the coprime monic factorization of G(0, Y) to a factorization of G
// modulo X^m; every H_i stays monic in Y.
std::vector<YPoly> lift_in_x(const MultiPoly& G, const std::vector<UniPoly>& base, int m) {
    std::size_t r = base.size();
    std::vector<UniPoly> sigma(r);
    for (std::size_t i = 0; i < r; ++i) {
        UniPoly prod = UniPoly::constant(1);
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) prod = divmod(prod * base[j], base[i]).second;
        sigma[i] = uq_inverse_mod(prod, base[i]);
    }

    std::vector<YPoly> lifted(r);
    for (std::size_t i = 0; i < r; ++i) {
        lifted[i].resize(base[i].degree() + 1);
        for (int k = 0; k <= base[i].degree(); ++k)
            lifted[i][k] = UniPoly::constant(base[i].coeff(static_cast<unsigned>(k)));
    }

    YPoly gy = multipoly_to_ypoly(G);
    for (int j = 1; j < m; ++j) {
        YPoly prod = {UniPoly::constant(1)};
        for (const YPoly& h : lifted) prod = ypoly_mul_trunc(prod, h, j + 1);
        // coefficient of X^j in G - prod, as a polynomial in Y
        std::vector<Rational> ej(std::max(gy.size(), prod.size()), Rational(0));
        for (std::size_t k = 0; k < ej.size(); ++k) {
            Rational c(0);
            if (k < gy.size()) c += gy[k].coeff(static_cast<unsigned>(j));
            if (k < prod.size()) c -= prod[k].coeff(static_cast<unsigned>(j));
            ej[k] = c;
        }
        UniPoly e(std::move(ej));
        if (e.is_zero()) continue;
        for (std::size_t i = 0; i < r; ++i) {
            UniPoly delta = divmod(e * sigma[i], base[i]).second;
            for (int k = 0; k <= delta.degree(); ++k) {
                Rational c = delta.coeff(static_cast<unsigned>(k));
                if (c != 0)
                    lifted[i][k] = lifted[i][k] + UniPoly::from_term(static_cast<unsigned>(j), c);
            }
        }
    }
    return lifted;
}

// Subset recombination against exact division in Q[X, Y].
std::vector<MultiPoly> recombine_bivariate(MultiPoly g, std::vector<YPoly> lifted, int m) {
    std::vector<MultiPoly> out;
    std::size_t card = 1;
    while (!lifted.empty() && 2 * card <= lifted.size()) {
        std::vector<std::size_t> pick(card);
        for (std::size_t i = 0; i < card; ++i) pick[i] = i;
        bool found = false;
        while (true) {
            YPoly prod = {UniPoly::constant(1)};
            for (std::size_t i : pick) prod = ypoly_mul_trunc(prod, lifted[i], m);
            MultiPoly cand = ypoly_to_multipoly(prod).primitive_part();
            bool exact = true;
            MultiPoly quot(2);
            try {
                quot = divide_exact(g, cand);
            } catch (const NotDivisibleError&) {
                exact = false;
            }
            if (exact) {
                out.push_back(std::move(cand));
                g = std::move(quot);
                std::vector<YPoly> rest;
                for (std::size_t i = 0; i < lifted.size(); ++i)
                    if (std::find(pick.begin(), pick.end(), i) == pick.end())
                        rest.push_back(std::move(lifted[i]));
                lifted = std::move(rest);
                found = true;
                break;
            }
            std::size_t i = card;
            while (i > 0 && pick[i - 1] == lifted.size() - card + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < card; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!found) ++card;
    }
    if (!g.is_constant()) out.push_back(g.primitive_part());
    return out;
}

// Factors a squarefree primitive bivariate polynomial every irreducible
// factor of which involves the last variable.
std::vector<MultiPoly> factor_squarefree_bivariate(const MultiPoly& g) {
    int d = g.degree();
    if (d == 1) return {g};
    MultiPoly X = MultiPoly::variable(2, 0);
    MultiPoly Y = MultiPoly::variable(2, 1);

    // Shear X <- X + c*Y so that the coefficient of Y^d becomes a nonzero
    // constant; c is a non-root of the top homogeneous form at (c, 1).
    MultiPoly top(2);
    for (const auto& [mono, coef] : g.terms())
        if (static_cast<int>(mono[0] + mono[1]) == d) top.add_term(mono, coef);
    long c = 0;
    for (long t = 0;; t = t > 0 ? -t : -t + 1) {
        if (top.eval({Rational(t), Rational(1)}) != 0) {
            c = t;
            break;
        }
    }
    MultiPoly g1 = c == 0 ? g : g.substitute(0, X + Y * Rational(c));
    Rational gamma = coeffs_wrt(g1, 1)[d].constant_value();
    MultiPoly ghat = g1 * (Rational(1) / gamma);

    // Specialization point x0 with ghat(x0, Y) squarefree.
    long x0 = 0;
    bool found_x0 = false;
    long limit = 2 * static_cast<long>(d) * d + 2;
    long tested = 0;
    for (long t = 0; tested <= limit; t = t > 0 ? -t : -t + 1, ++tested) {
        std::vector<std::optional<Rational>> at = {Rational(t), std::nullopt};
        UniPoly u0 = to_unipoly(ghat.eval_partial(at), 1);
        if (is_squarefree(u0)) {
            x0 = t;
            found_x0 = true;
            break;
        }
    }
    if (!found_x0) throw NoGoodSpecializationError("no squarefree specialization found");

    MultiPoly G = x0 == 0 ? ghat : ghat.substitute(0, X + MultiPoly::constant(2, Rational(x0)));
    UniPoly u0 = to_unipoly(G.eval_partial({Rational(0), std::nullopt}), 1);

    std::vector<UniPoly> base;
    for (const auto& fm : factor_univariate(u0).factors) base.push_back(fm.first.monic());
    if (base.size() == 1) return {g};

    int m = d + 1;  // true factors have X-degree below this precision
    std::vector<YPoly> lifted = lift_in_x(G, base, m);
    std::vector<MultiPoly> raw = recombine_bivariate(G, std::move(lifted), m);

    std::vector<MultiPoly> out;
    for (MultiPoly f : raw) {
        if (x0 != 0) f = f.substitute(0, X - MultiPoly::constant(2, Rational(x0)));
        if (c != 0) f = f.substitute(0, X - Y * Rational(c));
        out.push_back(f.primitive_part());
    }
    return out;
}

// Yun decomposition with respect to the last variable; the input is primitive
// with respect to it, so the parts collect the factors that involve it.
std::vector<std::pair<MultiPoly, int>> yun_wrt_last(const MultiPoly& f) {
    std::vector<std::pair<MultiPoly, int>> parts;
    MultiPoly fp = f.derivative(1);
    MultiPoly g = gcd(f, fp);
    if (g.is_constant()) {
        parts.emplace_back(f.primitive_part(), 1);
        return parts;
    }
    MultiPoly b = divide_exact(f, g);
    MultiPoly c = divide_exact(fp, g);
    MultiPoly d = c - b.derivative(1);
    int i = 1;
    while (!b.is_constant()) {
        MultiPoly a = gcd(b, d);
        if (!a.is_constant()) parts.emplace_back(a, i);
        b = divide_exact(b, a);
        c = divide_exact(d, a);
        d = c - b.derivative(1);
        ++i;
    }
    return parts;
}

}  // namespace

Factorization factor_bivariate(const MultiPoly& p) {
    if (p.nvars() != 2) throw InternalError("factor_bivariate expects two variables");
    if (p.is_zero()) throw InputError("cannot factor the zero polynomial");
    Factorization out;
    out.nvars = 2;
    if (p.is_constant()) {
        out.unit = p.constant_value();
        return out;
    }

    MultiPoly prim = p.primitive_part();
    MultiPoly cont = content_wrt(prim, 1);
    MultiPoly main = divide_exact(prim, cont);

    if (!cont.is_constant()) {
        UniFactorization cf = factor_univariate(to_unipoly(drop_var(cont, 1), 0));
        for (const auto& [f, mult] : cf.factors)
            out.factors.emplace_back(insert_var(from_unipoly(f, 0, 1), 1), mult);
    }
    if (!main.is_constant()) {
        for (const auto& [part, mult] : yun_wrt_last(main))
            for (const MultiPoly& f : factor_squarefree_bivariate(part))
                out.factors.emplace_back(f, mult);
    }

    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        return compare_display(a.first, b.first) < 0;
    });

    Rational lc_prod(1);
    for (const auto& [f, e] : out.factors)
        for (int i = 0; i < e; ++i) lc_prod *= f.leading_coeff();
    out.unit = p.leading_coeff() / lc_prod;
    return out;
}

}  // namespace ratdec
