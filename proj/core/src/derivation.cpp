#include "ratdec/derivation.hpp"

#include "ratdec/errors.hpp"

namespace ratdec {

CofactorVector jacobian_apply(const RationalFunction& f, const MultiPoly& F) {
    int n = f.nvars();
    if (n < 2) throw InternalError("the derivation needs at least two variables");
    const MultiPoly& f1 = f.num();
    const MultiPoly& f2 = f.den();
    MultiPoly w1 = f1.derivative(0) * f2 - f1 * f2.derivative(0);
    MultiPoly dF1 = F.derivative(0);
    CofactorVector out;
    out.reserve(n - 1);
    for (int l = 1; l < n; ++l) {
        MultiPoly wl = f1.derivative(l) * f2 - f1 * f2.derivative(l);
        out.push_back(w1 * F.derivative(l) - wl * dF1);
    }
    return out;
}

CofactorVector cofactor(const RationalFunction& f, const MultiPoly& F) {
    CofactorVector out;
    for (const MultiPoly& component : jacobian_apply(f, F)) {
        try {
            out.push_back(divide_exact(component, F));
        } catch (const NotDivisibleError&) {
            throw NotDarbouxError();
        }
    }
    return out;
}

bool is_first_integral(const RationalFunction& f, const RationalFunction& g) {
    if (g.num().is_zero() || g.degree() == 0) return true;
    try {
        return cofactor(f, g.num()) == cofactor(f, g.den());
    } catch (const NotDarbouxError&) {
        return false;
    }
}

}  // namespace ratdec
