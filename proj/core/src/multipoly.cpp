#include "ratdec/multipoly.hpp"

#include <algorithm>

#include "ratdec/errors.hpp"
#include "ratdec/unipoly.hpp"

namespace ratdec {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    Monomial m(nvars, 0);
    m[index] = 1;
    return from_term(nvars, m, 1);
}

MultiPoly MultiPoly::from_term(int nvars, const Monomial& m, const Rational& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_value() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return kDegNegInf;
    return static_cast<int>(total_degree(leading_monomial()));
}

int MultiPoly::degree_in(int var) const {
    if (terms_.empty()) return kDegNegInf;
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return static_cast<int>(d);
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    return p * c;
}

MultiPoly pow(const MultiPoly& base, unsigned exp) {
    MultiPoly r = MultiPoly::constant(base.nvars(), 1);
    MultiPoly b = base;
    while (exp > 0) {
        if (exp & 1u) r = r * b;
        exp >>= 1;
        if (exp > 0) b = b * b;
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * Rational(m[var]));
    }
    return r;
}

MultiPoly MultiPoly::eval_partial(const std::vector<std::optional<Rational>>& assignment) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        Rational value = c;
        Monomial rest(nvars_, 0);
        for (int v = 0; v < nvars_; ++v) {
            if (!assignment[v]) {
                rest[v] = m[v];
                continue;
            }
            for (unsigned k = 0; k < m[v]; ++k) value *= *assignment[v];
        }
        r.add_term(rest, value);
    }
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    std::vector<std::optional<Rational>> a(point.begin(), point.end());
    return eval_partial(a).constant_value();
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
    // Horner on the X_var coefficient list.
    std::vector<MultiPoly> cs = coeffs_wrt(*this, var);
    MultiPoly r(nvars_);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) r = r * value + *it;
    return r;
}

Rational MultiPoly::content_unit() const {
    if (terms_.empty()) return Rational(0);
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& [m, c] : terms_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rational unit = make_rational(num_gcd, den_lcm);
    if (leading_coeff() < 0) unit = -unit;
    return unit;
}

MultiPoly MultiPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    Rational u = content_unit();
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / u);
    return r;
}

std::vector<MultiPoly> coeffs_wrt(const MultiPoly& p, int var) {
    int d = std::max(p.degree_in(var), 0);
    std::vector<MultiPoly> cs(d + 1, MultiPoly(p.nvars()));
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        unsigned k = rest[var];
        rest[var] = 0;
        cs[k].add_term(rest, c);
    }
    while (cs.size() > 1 && cs.back().is_zero()) cs.pop_back();
    return cs;
}

MultiPoly from_coeffs_wrt(const std::vector<MultiPoly>& coeffs, int var, int nvars) {
    MultiPoly r(nvars);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [m, c] : coeffs[k].terms()) {
            Monomial full = m;
            full[var] += static_cast<unsigned>(k);
            r.add_term(full, c);
        }
    }
    return r;
}

UniPoly to_unipoly(const MultiPoly& p, int var) {
    std::vector<Rational> cs(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) {
        for (int v = 0; v < p.nvars(); ++v)
            if (v != var && m[v] != 0) throw InternalError("polynomial is not univariate in the requested variable");
        cs[m[var]] = c;
    }
    return UniPoly(std::move(cs));
}

MultiPoly from_unipoly(const UniPoly& p, int var, int nvars) {
    MultiPoly r(nvars);
    const auto& cs = p.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k] == 0) continue;
        Monomial m(nvars, 0);
        m[var] = static_cast<unsigned>(k);
        r.add_term(m, cs[k]);
    }
    return r;
}

MultiPoly drop_var(const MultiPoly& p, int var) {
    MultiPoly r(p.nvars() - 1);
    for (const auto& [m, c] : p.terms()) {
        if (m[var] != 0) throw InternalError("cannot drop a variable the polynomial depends on");
        Monomial small;
        small.reserve(m.size() - 1);
        for (int v = 0; v < p.nvars(); ++v)
            if (v != var) small.push_back(m[v]);
        r.add_term(small, c);
    }
    return r;
}

MultiPoly insert_var(const MultiPoly& p, int var) {
    MultiPoly r(p.nvars() + 1);
    for (const auto& [m, c] : p.terms()) {
        Monomial big;
        big.reserve(m.size() + 1);
        for (int v = 0; v < var; ++v) big.push_back(m[v]);
        big.push_back(0);
        for (int v = var; v < p.nvars(); ++v) big.push_back(m[v]);
        r.add_term(big, c);
    }
    return r;
}

int compare_display(const MultiPoly& a, const MultiPoly& b) {
    auto ia = a.terms().rbegin(), ea = a.terms().rend();
    auto ib = b.terms().rbegin(), eb = b.terms().rend();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (ia->first != ib->first) return grlex_less(ia->first, ib->first) ? 1 : -1;
        if (ia->second != ib->second) return ia->second < ib->second ? 1 : -1;
    }
    if (ia != ea) return 1;
    if (ib != eb) return -1;
    return 0;
}

}  // namespace ratdec
