#include "doctest.h"

#include "bcx/error.hpp"
#include "bcx/examples.hpp"
#include "bcx/expr.hpp"
#include "bcx/random.hpp"

using namespace bcx;

namespace {

std::size_t error_position(std::string_view text, const ParseOptions& options = {}) {
  try {
    (void)parse(text, options);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string_view::npos;
}

BicomplexFunction Z() { return BicomplexFunction::identity(); }

}  // namespace

TEST_CASE("precedence and associativity") {
  CHECK(parse("1 + 2*3") == BicomplexFunction::constant(Bicomplex(7)));
  CHECK(parse("2*3^2") == BicomplexFunction::constant(Bicomplex(18)));
  CHECK(parse("-2^2") == BicomplexFunction::constant(Bicomplex(-4)));
  CHECK(parse("(-2)^2") == BicomplexFunction::constant(Bicomplex(4)));
  CHECK(parse("10 - 3 - 2") == BicomplexFunction::constant(Bicomplex(5)));
  CHECK(parse("12/2/3") == BicomplexFunction::constant(Bicomplex(2)));
  CHECK(parse("2Z") == Z() * Bicomplex(2));
  CHECK(parse("2(Z + 1)") == (Z() + BicomplexFunction::constant(Bicomplex(1))) * Bicomplex(2));
  CHECK(parse("Z^0") == BicomplexFunction::constant(Bicomplex(1)));
  CHECK(parse("i*j") == BicomplexFunction::constant(Bicomplex::unit_k()));
  CHECK(parse("e+ + e-") == BicomplexFunction::constant(Bicomplex(1)));
  CHECK(parse("e+ - e-") == BicomplexFunction::constant(Bicomplex::unit_k()));
}

TEST_CASE("conjugation and real-part functions") {
  const BicomplexFunction z = Z();
  CHECK(parse("(Z + star(Z)) / 2") == z.hyperbolic_part());
  CHECK(parse("rehyp(Z)") == z.hyperbolic_part());
  CHECK(parse("(Z + dag(Z) + til(Z) + star(Z)) / 4") == z.real_part());
  CHECK(parse("rec(Z)") == z.real_part());
  CHECK(parse("2*star(Z)*(dag(Z) + til(Z))") == reference_G1());
}

TEST_CASE("raw idempotent tokens") {
  ParseOptions raw;
  raw.raw_idempotent = true;
  CHECK(parse("(a + ac)(b + bc)", raw) == reference_F1());
  CHECK(parse("a | b") == Z());
  CHECK(parse("ac^2 | bc") == BicomplexFunction(Poly4::monomial({0, 2, 0, 0}), Poly4::monomial({0, 0, 0, 1})));
  CHECK(error_position("(a + ac)(b + bc)") == 1);
  CHECK(error_position("Z + bc") == 4);
}

TEST_CASE("syntax errors carry positions") {
  CHECK(error_position("1 +") == 3);
  CHECK(error_position("(Z") == 2);
  CHECK(error_position("Z $ 1") == 2);
  CHECK(error_position("foo(Z)") == 0);
  CHECK(error_position("Z^2^3") == 3);
  CHECK(error_position("Z / Z") == 2);
  CHECK(error_position("Z / 0") == 2);
  CHECK(error_position("Z^1234567") == 2);
  CHECK(error_position("") == 0);
  CHECK(error_position("1 | 2 | 3") == 6);
}

TEST_CASE("bicomplex literals") {
  CHECK(parse_bicomplex("1 + 2i + 3j + 4k") == Bicomplex::from_units(1, 2, 3, 4));
  CHECK(parse_bicomplex("2j") == parse_bicomplex("2*j"));
  CHECK(parse_bicomplex("-1/2 + e+") == Bicomplex(GaussianRational(Rational(1, 2)), GaussianRational(Rational(-1, 2))));
  CHECK_THROWS_AS(parse_bicomplex("Z"), ParseError);
  CHECK_THROWS_AS(parse_bicomplex("a"), ParseError);
}

TEST_CASE("canonical format") {
  CHECK(format(BicomplexFunction()) == "0 | 0");
  CHECK(format(reference_F1()) == "ac*bc + ac*b + a*bc + a*b | ac*bc + ac*b + a*bc + a*b");
  CHECK(parse(format(BicomplexFunction())) == BicomplexFunction());
}

TEST_CASE("parse inverts format on random functions") {
  Rng rng(51);
  GenConfig cfg;
  for (int t = 0; t < 300; ++t) {
    const BicomplexFunction f = random_function(rng, cfg);
    const std::string text = format(f);
    CHECK(parse(text) == f);
    CHECK(format(parse(text)) == text);
  }
}
