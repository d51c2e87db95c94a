#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ratdec/errors.hpp"
#include "ratdec/expr.hpp"

using namespace ratdec;
using testutil::mp;
using testutil::xy;

TEST_CASE("parse golden values") {
    MultiPoly x = MultiPoly::variable(2, 0);
    MultiPoly y = MultiPoly::variable(2, 1);
    MultiPoly one = MultiPoly::constant(2, 1);

    CHECK(mp("(1+X+Y^2)*(X+Y)") == (one + x + y * y) * (x + y));
    CHECK(mp("0").is_zero());
    CHECK(mp("3/2*X^2 - Y") == x * x * Rational(3, 2) - y);
    CHECK(mp("4/2") == MultiPoly::constant(2, 2));
    CHECK(mp(" ( X + Y ) * 3 ") == (x + y) * Rational(3));
    CHECK(mp("1 - -2") == MultiPoly::constant(2, 3));
}

TEST_CASE("unary minus binds looser than exponentiation") {
    CHECK(mp("-X^2") == -(mp("X") * mp("X")));
    CHECK(mp("-X^2 + X^2").is_zero());
    CHECK(mp("-2^2") == MultiPoly::constant(2, -4));
}

TEST_CASE("parse errors carry a 1-based position") {
    auto expect_parse_error = [](const std::string& text, std::size_t pos) {
        try {
            parse_polynomial(text, xy());
            FAIL("expected ParseError for: ", text);
        } catch (const ParseError& e) {
            CHECK(e.position == pos);
            CHECK(std::string(e.what()).find("position") != std::string::npos);
        }
    };
    expect_parse_error("X + * Y", 5);
    expect_parse_error("", 1);
    expect_parse_error("(X + Y", 7);
    expect_parse_error("X^", 3);
    expect_parse_error("X + Z", 5);  // Z is not a declared variable
    expect_parse_error("2^123456", 3);
}

TEST_CASE("to_string golden values") {
    CHECK(to_string(mp("1 + X + Y^2"), xy()) == "Y^2 + X + 1");
    CHECK(to_string(mp("-X^2 + 3*X*Y - 1/2"), xy()) == "-X^2 + 3*X*Y - 1/2");
    CHECK(to_string(MultiPoly::constant(2, 0), xy()) == "0");
    CHECK(to_string(mp("X*Y^2"), xy()) == "X*Y^2");

    UniPoly r({-4, -24, -92, -64, 8});
    CHECK(to_string(r, "L") == "8*L^4 - 64*L^3 - 92*L^2 - 24*L - 4");
    CHECK(to_string(UniPoly::constant(Rational(-3, 7)), "T") == "-3/7");
    CHECK(to_string(UniPoly(), "T") == "0");
}

TEST_CASE("print then parse is the identity") {
    auto roundtrip = [](const MultiPoly& p) {
        CHECK(parse_polynomial(to_string(p, xy()), xy()) == p);
    };
    roundtrip(testutil::fixture_noncomposite().num());
    roundtrip(testutil::fixture_noncomposite().den());
    roundtrip(MultiPoly::constant(2, Rational(-5, 3)));

    std::mt19937_64 rng(99);
    for (int i = 0; i < 10; ++i) roundtrip(testutil::random_poly(rng, 2, 4, 9));
}
