#include <algorithm>
#include <optional>
#include <vector>

#include "ratdec/errors.hpp"
#include "ratdec/multipoly.hpp"
#include "ratdec/unipoly.hpp"

namespace ratdec {

MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw NotDivisibleError("division by the zero polynomial");
    if (p.is_zero()) return MultiPoly(p.nvars());
    if (q.is_constant()) return p * (Rational(1) / q.constant_value());
    MultiPoly r = p;
    MultiPoly quot(p.nvars());
    while (!r.is_zero()) {
        const Monomial& mr = r.leading_monomial();
        const Monomial& mq = q.leading_monomial();
        if (!mono_divides(mq, mr))
            throw NotDivisibleError("polynomial division left a remainder");
        Monomial m = mono_div(mr, mq);
        Rational c = r.leading_coeff() / q.leading_coeff();
        quot.add_term(m, c);
        r -= MultiPoly::from_term(p.nvars(), m, c) * q;
    }
    return quot;
}

namespace {

bool depends_only_on(const MultiPoly& p, int var) {
    for (int v = 0; v < p.nvars(); ++v)
        if (v != var && p.depends_on(v)) return false;
    return true;
}

// Pseudo-remainder of a by b with respect to var: lc_var(b)^(da-db+1) * a mod b.
MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, int var) {
    std::vector<MultiPoly> r = coeffs_wrt(a, var);
    std::vector<MultiPoly> cb = coeffs_wrt(b, var);
    int da = static_cast<int>(r.size()) - 1;
    int db = static_cast<int>(cb.size()) - 1;
    const MultiPoly& lcb = cb[db];
    for (int k = da - db; k >= 0; --k) {
        MultiPoly t = r[db + k];
        for (auto& c : r) c = c * lcb;
        for (int i = 0; i <= db; ++i) r[k + i] -= t * cb[i];
    }
    r.resize(db > 0 ? db : 1, MultiPoly(a.nvars()));
    return from_coeffs_wrt(r, var, a.nvars());
}

// Degree-preserving specialization of everything except `var`; a constant
// univariate gcd certifies that the primitive parts are coprime.  (A common
// factor has leading coefficient dividing both specialized-nonzero leading
// coefficients, so its image keeps full degree and would show up.)  A point
// whose images share a factor proves nothing — coprime inputs meet over any
// root of their resultant — so only a constant-gcd point ends the search.
bool coprime_by_specialization(const MultiPoly& a, const MultiPoly& b, int var) {
    int n = a.nvars();
    std::vector<MultiPoly> ca = coeffs_wrt(a, var);
    std::vector<MultiPoly> cb = coeffs_wrt(b, var);
    const MultiPoly& lca = ca.back();
    const MultiPoly& lcb = cb.back();
    static const long small_vals[] = {0,  1, -1, 2,  -2, 3,  -3,  5,
                                      -5, 7, -7, 11, 13, 17, -13, 19};
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<std::optional<Rational>> point(n);
        std::vector<Rational> full(n, Rational(0));
        for (int v = 0; v < n; ++v) {
            if (v == var) continue;
            Rational val(small_vals[(attempt + v) % 16]);
            point[v] = val;
            full[v] = val;
        }
        if (lca.eval(full) == 0 || lcb.eval(full) == 0) continue;
        UniPoly ua = to_unipoly(a.eval_partial(point), var);
        UniPoly ub = to_unipoly(b.eval_partial(point), var);
        if (gcd(ua, ub).degree() == 0) return true;
    }
    return false;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_rec(const MultiPoly& p, int var) {
    MultiPoly g(p.nvars());
    for (const MultiPoly& c : coeffs_wrt(p, var)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.primitive_part() : gcd_rec(g, c);
        if (g.is_constant()) return MultiPoly::constant(p.nvars(), Rational(1));
    }
    return g;
}

// Both arguments nonzero; result is primitive with positive leading coefficient.
MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
    int var = -1;
    for (int v = a.nvars() - 1; v >= 0; --v)
        if (a.depends_on(v) || b.depends_on(v)) {
            var = v;
            break;
        }
    if (var < 0) return MultiPoly::constant(a.nvars(), Rational(1));

    MultiPoly ca = content_rec(a, var);
    MultiPoly cb = content_rec(b, var);
    MultiPoly cg = ca.is_constant() || cb.is_constant()
                       ? MultiPoly::constant(a.nvars(), Rational(1))
                       : gcd_rec(ca, cb);
    MultiPoly pa = divide_exact(a, ca).primitive_part();
    MultiPoly pb = divide_exact(b, cb).primitive_part();
    if (!pa.depends_on(var) || !pb.depends_on(var)) return cg;

    if (depends_only_on(pa, var) && depends_only_on(pb, var)) {
        UniPoly g = gcd(to_unipoly(pa, var), to_unipoly(pb, var));
        return (cg * from_unipoly(g, var, a.nvars())).primitive_part();
    }
    if (coprime_by_specialization(pa, pb, var)) return cg;

    MultiPoly A = pa, B = pb;
    if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);
    while (true) {
        MultiPoly r = pseudo_rem(A, B, var);
        if (r.is_zero()) break;
        A = B;
        B = divide_exact(r, content_rec(r, var)).primitive_part();
        if (!B.depends_on(var)) return cg;
    }
    return (cg * B).primitive_part();
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars()) throw InternalError("gcd: variable count mismatch");
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    return gcd_rec(a.primitive_part(), b.primitive_part());
}

MultiPoly content_wrt(const MultiPoly& p, int var) {
    if (p.is_zero()) return MultiPoly(p.nvars());
    return content_rec(p, var);
}

MultiPoly primitive_part_wrt(const MultiPoly& p, int var) {
    if (p.is_zero()) return p;
    return divide_exact(p, content_rec(p, var));
}

bool is_squarefree(const MultiPoly& p) {
    if (p.is_zero()) return false;
    if (p.is_constant()) return true;
    MultiPoly g = p;
    for (int v = 0; v < p.nvars(); ++v) {
        if (!p.depends_on(v)) continue;
        g = gcd(g, p.derivative(v));
        if (g.is_constant()) return true;
    }
    return g.is_constant();
}

namespace {

// Fraction-free determinant; exact because every intermediate entry is a
// minor of the original matrix.
MultiPoly bareiss_det(std::vector<std::vector<MultiPoly>> m, int nvars) {
    int n = static_cast<int>(m.size());
    if (n == 0) return MultiPoly::constant(nvars, Rational(1));
    bool negate = false;
    MultiPoly prev = MultiPoly::constant(nvars, Rational(1));
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return MultiPoly(nvars);
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = MultiPoly(nvars);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& a, const MultiPoly& b,
                                                     int var) {
    std::vector<MultiPoly> ca = coeffs_wrt(a, var);
    std::vector<MultiPoly> cb = coeffs_wrt(b, var);
    int da = static_cast<int>(ca.size()) - 1;
    int db = static_cast<int>(cb.size()) - 1;
    int n = da + db;
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(a.nvars())));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j) m[i][i + j] = ca[da - j];
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j) m[db + i][i + j] = cb[db - j];
    return m;
}

UniPoly lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    UniPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UniPoly basis = UniPoly::constant(1);
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * (UniPoly::variable() - UniPoly::constant(xs[j]));
            denom *= xs[i] - xs[j];
        }
        acc = acc + basis * (ys[i] / denom);
    }
    return acc;
}

// Bivariate case: interpolate the resultant from exact univariate resultants
// at integer specializations of the first variable.  Points where either
// leading coefficient vanishes are skipped since they change the degree.
MultiPoly resultant_bivariate(const MultiPoly& a, const MultiPoly& b) {
    std::vector<MultiPoly> ca = coeffs_wrt(a, 1);
    std::vector<MultiPoly> cb = coeffs_wrt(b, 1);
    int da = static_cast<int>(ca.size()) - 1;
    int db = static_cast<int>(cb.size()) - 1;
    UniPoly lca = to_unipoly(drop_var(ca.back(), 1), 0);
    UniPoly lcb = to_unipoly(drop_var(cb.back(), 1), 0);
    int bound = db * std::max(a.degree_in(0), 0) + da * std::max(b.degree_in(0), 0);
    std::vector<Rational> xs, ys;
    for (long t = 0; static_cast<int>(xs.size()) <= bound; t = t > 0 ? -t : -t + 1) {
        Rational x(t);
        if (lca.eval(x) == 0 || lcb.eval(x) == 0) continue;
        std::vector<std::optional<Rational>> point = {x, std::nullopt};
        UniPoly ax = to_unipoly(a.eval_partial(point), 1);
        UniPoly bx = to_unipoly(b.eval_partial(point), 1);
        xs.push_back(x);
        ys.push_back(resultant(ax, bx));
    }
    return from_unipoly(lagrange_interpolate(xs, ys), 0, 2);
}

}  // namespace

MultiPoly resultant_wrt_last(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars() || a.nvars() == 0)
        throw InternalError("resultant: bad variable count");
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.nvars());
    int var = a.nvars() - 1;
    if (a.degree_in(var) == 0 && b.degree_in(var) == 0)
        return MultiPoly::constant(a.nvars(), Rational(-1));
    if (a.nvars() == 2) return resultant_bivariate(a, b);
    return -bareiss_det(sylvester_matrix(a, b, var), a.nvars());
}

}  // namespace ratdec
