#include "ratdec/rational_function.hpp"

#include <algorithm>

#include "ratdec/errors.hpp"

namespace ratdec {

RationalFunction RationalFunction::from_coprime(MultiPoly num, MultiPoly den) {
    if (den.is_zero()) throw ZeroDenominatorError();
    if (num.nvars() != den.nvars())
        throw InternalError("rational function: variable count mismatch");
    if (!num.is_zero() && !gcd(num, den).is_constant())
        throw InternalError("from_coprime: arguments share a factor");
    RationalFunction f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    return f;
}

RationalFunction RationalFunction::reduced(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw ZeroDenominatorError();
    MultiPoly n = num, d = den;
    if (!n.is_zero()) {
        MultiPoly g = gcd(n, d);
        if (!g.is_constant()) {
            n = divide_exact(n, g);
            d = divide_exact(d, g);
        }
    }
    Rational unit = d.content_unit();
    n = n * (Rational(1) / unit);
    d = d * (Rational(1) / unit);
    RationalFunction f;
    f.num_ = std::move(n);
    f.den_ = std::move(d);
    return f;
}

int RationalFunction::degree() const {
    if (num_.is_zero()) return kDegNegInf;
    return std::max(num_.degree(), den_.degree());
}

bool equal_as_functions(const RationalFunction& f, const RationalFunction& g) {
    return f.num() * g.den() == g.num() * f.den();
}

UniRationalFunction UniRationalFunction::reduced(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw ZeroDenominatorError();
    UniPoly n = num, d = den;
    if (!n.is_zero()) {
        UniPoly g = gcd(n, d);
        if (g.degree() > 0) {
            n = divmod(n, g).first;
            d = divmod(d, g).first;
        }
    }
    Rational lc = d.leading_coeff();
    return UniRationalFunction(n * (Rational(1) / lc), d * (Rational(1) / lc));
}

int UniRationalFunction::degree() const {
    if (num_.is_zero()) return kDegNegInf;
    return std::max(num_.degree(), den_.degree());
}

bool equal_as_functions(const UniRationalFunction& f, const UniRationalFunction& g) {
    return f.num() * g.den() == g.num() * f.den();
}

Mobius mobius_inverse(const Mobius& m) {
    if (m.a * m.e - m.b * m.c == 0) throw InternalError("mobius_inverse: singular map");
    return Mobius{m.e, -m.b, -m.c, m.a};
}

UniRationalFunction mobius_to_function(const Mobius& m) {
    UniPoly num({m.b, m.a});
    UniPoly den({m.e, m.c});
    return UniRationalFunction::reduced(num, den);
}

UniRationalFunction apply_mobius(const UniRationalFunction& u, const Mobius& m) {
    UniPoly p({m.b, m.a});
    UniPoly q({m.e, m.c});
    int d = u.degree();
    if (d <= 0) return u;
    UniPoly num, den;
    for (int i = 0; i <= d; ++i) {
        UniPoly basis = pow(p, static_cast<unsigned>(i)) * pow(q, static_cast<unsigned>(d - i));
        num = num + basis * u.num().coeff(static_cast<unsigned>(i));
        den = den + basis * u.den().coeff(static_cast<unsigned>(i));
    }
    return UniRationalFunction::reduced(num, den);
}

UniRationalFunction mobius_after(const Mobius& m, const UniRationalFunction& u) {
    UniPoly num = u.num() * m.a + u.den() * m.b;
    UniPoly den = u.num() * m.c + u.den() * m.e;
    return UniRationalFunction::reduced(num, den);
}

RationalFunction compose_uni(const UniRationalFunction& u, const RationalFunction& h) {
    int d = u.degree();
    if (d <= 0) {
        if (u.num().is_zero())
            return RationalFunction::reduced(MultiPoly(h.nvars()),
                                             MultiPoly::constant(h.nvars(), Rational(1)));
        return RationalFunction::reduced(
            MultiPoly::constant(h.nvars(), u.num().coeff(0) / u.den().coeff(0)),
            MultiPoly::constant(h.nvars(), Rational(1)));
    }
    MultiPoly num(h.nvars()), den(h.nvars());
    for (int i = 0; i <= d; ++i) {
        MultiPoly basis = pow(h.num(), static_cast<unsigned>(i)) *
                          pow(h.den(), static_cast<unsigned>(d - i));
        num += basis * u.num().coeff(static_cast<unsigned>(i));
        den += basis * u.den().coeff(static_cast<unsigned>(i));
    }
    return RationalFunction::reduced(num, den);
}

}  // namespace ratdec
