#include "ratdec/rational.hpp"

#include "ratdec/errors.hpp"

namespace ratdec {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ZeroDenominatorError();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw InputError("malformed rational literal: " + text);
    if (q.get_den() == 0) throw ZeroDenominatorError();
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

bool fits_long(const Integer& value) {
    return value.fits_slong_p();
}

}  // namespace ratdec
