#include "doctest.h"
#include "oracles.hpp"

#include "bcx/examples.hpp"
#include "bcx/expr.hpp"
#include "bcx/random.hpp"

using namespace bcx;

namespace {

Poly4 v(Var x) { return Poly4::variable(x); }

BicomplexFunction Z() { return BicomplexFunction::identity(); }
BicomplexFunction Zs() { return Z().conjugate(Conjugation::star); }
BicomplexFunction Zd() { return Z().conjugate(Conjugation::dagger); }

std::array<GaussianRational, 4> coords(const Bicomplex& z) {
  return {z.alpha(), z.alpha().conj(), z.beta(), z.beta().conj()};
}

}  // namespace

TEST_CASE("poly stores no zero coefficients") {
  Poly4 p = v(Var::alpha) - v(Var::alpha);
  CHECK(p.is_zero());
  CHECK(p.size() == 0);
  p.add_term({1, 0, 0, 0}, GaussianRational(3));
  p.add_term({1, 0, 0, 0}, GaussianRational(-3));
  CHECK(p.terms().empty());
  CHECK_FALSE(p.degrees().has_value());
}

TEST_CASE("coordinate products") {
  const BicomplexFunction prod = Zs() * Zd();
  CHECK(prod.plus() == v(Var::alpha_bar) * v(Var::beta));
  CHECK(prod.minus() == v(Var::beta_bar) * v(Var::alpha));
  const BicomplexFunction mod = Z() * Zs();
  CHECK(mod.plus() == v(Var::alpha) * v(Var::alpha_bar));
  CHECK(mod.minus() == v(Var::beta) * v(Var::beta_bar));
  CHECK(prod * BicomplexFunction::constant(Bicomplex(1)) == prod);
}

TEST_CASE("function conjugations") {
  const BicomplexFunction zs = Zs();
  CHECK(zs.plus() == v(Var::alpha_bar));
  CHECK(zs.minus() == v(Var::beta_bar));
  CHECK(Zd().conjugate(Conjugation::dagger) == Z());
  const BicomplexFunction F1 = reference_F1();
  CHECK(F1.conjugate(Conjugation::star) == F1);
  CHECK(F1.is_real_valued());
}

TEST_CASE("conjugation commutes with evaluation") {
  Rng rng(11);
  GenConfig cfg;
  cfg.max_degree = 3;
  for (int t = 0; t < 100; ++t) {
    const BicomplexFunction f = random_function(rng, cfg);
    const Bicomplex z = random_bicomplex(rng, 5);
    for (auto kind : {Conjugation::dagger, Conjugation::tilde, Conjugation::star}) {
      CHECK(f.conjugate(kind).evaluate(z) == f.evaluate(z).conjugate(kind));
      CHECK(f.conjugate(kind).conjugate(kind) == f);
    }
  }
}

TEST_CASE("evaluation matches a direct monomial sum") {
  Rng rng(12);
  GenConfig cfg;
  for (int t = 0; t < 100; ++t) {
    const BicomplexFunction f = random_function(rng, cfg);
    const Bicomplex z = random_bicomplex(rng, 5);
    const Bicomplex got = f.evaluate(z);
    CHECK(got.alpha() == oracle::evaluate(f.plus(), coords(z)));
    CHECK(got.beta() == oracle::evaluate(f.minus(), coords(z)));
    CHECK(oracle::bar(f.plus()) == f.plus().bar());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  Rng rng(13);
  GenConfig cfg;
  cfg.max_degree = 2;
  for (int t = 0; t < 100; ++t) {
    const BicomplexFunction f = random_function(rng, cfg);
    const BicomplexFunction g = random_function(rng, cfg);
    const Bicomplex z = random_bicomplex(rng, 5);
    CHECK((f * g).evaluate(z) == f.evaluate(z) * g.evaluate(z));
    CHECK((f + g).evaluate(z) == f.evaluate(z) + g.evaluate(z));
  }
}

TEST_CASE("worked evaluations") {
  CHECK(Z().pow(2).evaluate(parse_bicomplex("1 + j")) == Bicomplex(2) * Bicomplex::unit_j());
  CHECK(reference_F1().evaluate(Bicomplex::e_plus()).is_zero());
  const BicomplexFunction c = parse("3 + Z*Z + 2i");
  CHECK(c.evaluate(Bicomplex(0)) == parse_bicomplex("3 + 2i"));
}

TEST_CASE("real parts of functions") {
  const BicomplexFunction h = Z().hyperbolic_part();
  const GaussianRational half(Rational(1, 2));
  CHECK(h.plus() == (v(Var::alpha) + v(Var::alpha_bar)) * half);
  CHECK(h.minus() == (v(Var::beta) + v(Var::beta_bar)) * half);
  CHECK(reference_G1().real_part() == reference_F1());
  CHECK(BicomplexFunction::constant(Bicomplex::unit_i() * Bicomplex(7)).hyperbolic_part().is_zero());
}

TEST_CASE("degrees") {
  const auto d = degrees(reference_F1());
  REQUIRE(d.plus.has_value());
  CHECK(*d.plus == Exponents{1, 1, 1, 1});
  CHECK(*degrees(BicomplexFunction::constant(Bicomplex(5))).plus == Exponents{0, 0, 0, 0});
  const auto zs3 = degrees(Zs().pow(3));
  CHECK(*zs3.plus == Exponents{0, 3, 0, 0});
  CHECK(*zs3.minus == Exponents{0, 0, 0, 3});
}

TEST_CASE("poly derivative matches the power rule") {
  Rng rng(14);
  GenConfig cfg;
  for (int t = 0; t < 200; ++t) {
    const Poly4 p = random_poly(rng, cfg);
    for (auto x : {Var::alpha, Var::alpha_bar, Var::beta, Var::beta_bar}) {
      CHECK(p.derivative(x) == oracle::derivative(p, x));
      CHECK(p.derivative(x, 2) == oracle::derivative(oracle::derivative(p, x), x));
    }
  }
}
