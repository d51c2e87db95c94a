#include "ratdec/unipoly.hpp"

#include "ratdec/errors.hpp"
#include "ratdec/multipoly.hpp"

namespace ratdec {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
    return UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::variable() {
    return UniPoly(std::vector<Rational>{Rational(0), Rational(1)});
}

UniPoly UniPoly::from_term(unsigned k, const Rational& c) {
    std::vector<Rational> cs(k + 1, Rational(0));
    cs[k] = c;
    return UniPoly(std::move(cs));
}

int UniPoly::degree() const {
    return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1;
}

Rational UniPoly::coeff(unsigned k) const {
    return k < c_.size() ? c_[k] : Rational(0);
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> cs(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) cs[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) cs[i] += o.c_[i];
    return UniPoly(std::move(cs));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    return *this + (-o);
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UniPoly();
    std::vector<Rational> cs(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) cs[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(cs));
}

UniPoly UniPoly::operator*(const Rational& c) const {
    if (c == 0) return UniPoly();
    UniPoly r = *this;
    for (auto& k : r.c_) k *= c;
    return r;
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
    return p * c;
}

UniPoly pow(const UniPoly& base, unsigned exp) {
    UniPoly r = UniPoly::constant(1);
    UniPoly b = base;
    while (exp > 0) {
        if (exp & 1u) r = r * b;
        exp >>= 1;
        if (exp > 0) b = b * b;
    }
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> cs(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) cs[i - 1] = c_[i] * Rational(static_cast<unsigned long>(i));
    return UniPoly(std::move(cs));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::monic() const {
    return *this * (Rational(1) / leading_coeff());
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw ZeroDenominatorError();
    UniPoly r = num;
    if (num.degree() < den.degree()) return {UniPoly(), r};
    std::vector<Rational> q(num.degree() - den.degree() + 1, Rational(0));
    const Rational& lc = den.leading_coeff();
    while (!r.is_zero() && r.degree() >= den.degree()) {
        unsigned shift = static_cast<unsigned>(r.degree() - den.degree());
        Rational c = r.leading_coeff() / lc;
        q[shift] = c;
        r = r - UniPoly::from_term(shift, c) * den;
    }
    return {UniPoly(std::move(q)), r};
}

namespace {

// Denominators cleared, integer content stripped.  Pre: !p.is_zero().
std::vector<Integer> primitive_integer_coeffs(const UniPoly& p) {
    Integer den(1);
    for (const Rational& c : p.coeffs()) den = lcm(den, c.get_den());
    std::vector<Integer> z;
    z.reserve(p.coeffs().size());
    Integer g(0);
    for (const Rational& c : p.coeffs()) {
        Integer v = c.get_num() * (den / c.get_den());
        g = gcd(g, v);
        z.push_back(std::move(v));
    }
    for (Integer& v : z) v /= g;
    return z;
}

}  // namespace

// Primitive remainder sequence over Z: each remainder is stripped to its
// primitive part, which is what keeps the coefficients bounded (a plain
// remainder sequence over Q blows up exponentially).
UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Integer> x = primitive_integer_coeffs(a);
    std::vector<Integer> y = primitive_integer_coeffs(b);
    if (x.size() < y.size()) x.swap(y);
    while (true) {
        // Pseudo-remainder lc(y)^(deg x - deg y + 1) * x mod y, in place.
        int dx = static_cast<int>(x.size()) - 1, dy = static_cast<int>(y.size()) - 1;
        const Integer lc = y.back();
        for (int k = dx - dy; k >= 0; --k) {
            Integer t = x[dy + k];
            for (Integer& c : x) c *= lc;
            for (int i = 0; i <= dy; ++i) x[k + i] -= t * y[i];
        }
        x.resize(dy);
        while (!x.empty() && x.back() == 0) x.pop_back();
        if (x.empty()) break;
        Integer g(0);
        for (const Integer& c : x) g = gcd(g, c);
        for (Integer& c : x) c /= g;
        x.swap(y);
    }
    std::vector<Rational> out;
    out.reserve(y.size());
    for (const Integer& c : y) out.emplace_back(c);
    return UniPoly(std::move(out)).monic();
}

// Classical resultant by remainder sequence:
//   res(A, B) = (-1)^(deg A * deg B) * lc(B)^(deg A - deg R) * res(B, R)
// with R = A rem B; the project-wide sign flip is applied at the end.
static Rational resultant_classical(UniPoly a, UniPoly b) {
    if (a.is_zero() || b.is_zero()) return Rational(0);
    Rational acc(1);
    while (true) {
        if (b.degree() == 0) {
            Rational lc = b.leading_coeff();
            Rational p(1);
            for (int i = 0; i < a.degree(); ++i) p *= lc;
            return acc * p;
        }
        if (a.degree() == 0) {
            Rational lc = a.leading_coeff();
            Rational p(1);
            for (int i = 0; i < b.degree(); ++i) p *= lc;
            return acc * p;
        }
        if (a.degree() < b.degree()) {
            if ((a.degree() & 1) && (b.degree() & 1)) acc = -acc;
            std::swap(a, b);
            continue;
        }
        UniPoly r = divmod(a, b).second;
        if (r.is_zero()) return Rational(0);
        if ((a.degree() & 1) && (b.degree() & 1)) acc = -acc;
        Rational lc = b.leading_coeff();
        for (int i = 0; i < a.degree() - r.degree(); ++i) acc *= lc;
        a = b;
        b = r;
    }
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
    return -resultant_classical(a, b);
}

bool is_squarefree(const UniPoly& p) {
    if (p.is_constant()) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

UniPoly compose(const UniPoly& u, const UniPoly& inner) {
    UniPoly r;
    const auto& cs = u.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) r = r * inner + UniPoly::constant(*it);
    return r;
}

}  // namespace ratdec
