#include "doctest.h"
#include "oracles.hpp"

#include <functional>

#include "bcx/classify.hpp"
#include "bcx/decompose.hpp"
#include "bcx/error.hpp"
#include "bcx/examples.hpp"
#include "bcx/expr.hpp"
#include "bcx/random.hpp"

using namespace bcx;

namespace {

ParseOptions raw() {
  ParseOptions o;
  o.raw_idempotent = true;
  return o;
}

BicomplexFunction fn(const char* text) { return parse(text, raw()); }
Poly4 poly(const char* text) { return fn(text).plus(); }
BicomplexFunction constant(long c) { return BicomplexFunction::constant(Bicomplex(c)); }

std::string precondition(const std::function<void()>& call) {
  try {
    call();
  } catch (const PreconditionViolation& e) {
    return e.condition();
  }
  return "none";
}

}  // namespace

TEST_CASE("conjugate basis expansion") {
  const auto g1 = expand_conjugate_basis(reference_G1());
  const std::map<Index3, BicomplexFunction> expected = {{{1, 0, 1}, constant(2)}, {{1, 1, 0}, constant(2)}};
  CHECK(g1.coeffs == expected);
  CHECK(g1.reconstruct() == reference_G1());

  const BicomplexFunction holo = fn("Z^3 + 2i*Z");
  const auto h = expand_conjugate_basis(holo);
  REQUIRE(h.coeffs.size() == 1);
  CHECK(h.coeffs.at({0, 0, 0}) == holo);

  const auto p = expand_conjugate_basis(fn("star(Z)*dag(Z)"));
  REQUIRE(p.coeffs.size() == 1);
  CHECK(p.coeffs.at({1, 0, 1}) == constant(1));
}

TEST_CASE("conjugate basis coefficients are bc-holomorphic and reconstruct") {
  Rng rng(41);
  GenConfig cfg;
  for (int t = 0; t < 100; ++t) {
    const BicomplexFunction f = random_function(rng, cfg);
    const auto e = expand_conjugate_basis(f);
    CHECK(e.reconstruct() == f);
    for (const auto& [idx, h] : e.coeffs) {
      CHECK_FALSE(h.is_zero());
      CHECK(class_membership(h).is_bc_holomorphic);
    }
  }
}

TEST_CASE("Z* expansion") {
  const auto parts = expand_zstar(fn("ac^2 | bc"));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].is_zero());
  CHECK(parts[1] == BicomplexFunction::constant(Bicomplex::e_minus()));
  CHECK(parts[2] == BicomplexFunction::constant(Bicomplex::e_plus()));
  CHECK(reconstruct_zstar(parts) == fn("ac^2 | bc"));

  const BicomplexFunction holo = fn("Z^2 - 1");
  CHECK(expand_zstar(holo) == std::vector<BicomplexFunction>{holo});
  CHECK(expand_zstar(BicomplexFunction()).empty());
  CHECK_THROWS_AS(expand_zstar(reference_F1()), NotInClass);
}

TEST_CASE("complex Almansi") {
  const auto a = almansi_complex(poly("a^2*ac^3"), VariablePair::alpha);
  REQUIRE(a.parts.size() == 3);
  CHECK(a.parts[0].is_zero());
  CHECK(a.parts[1].is_zero());
  CHECK(a.parts[2] == poly("ac"));

  const auto d = almansi_complex(poly("(a*ac)^2"), VariablePair::alpha);
  REQUIRE(d.parts.size() == 3);
  CHECK(d.parts[0].is_zero());
  CHECK(d.parts[1].is_zero());
  CHECK(d.parts[2] == Poly4::constant(1));

  const Poly4 harmonic = poly("a^3 + 2*ac - 5");
  const auto h = almansi_complex(harmonic, VariablePair::alpha);
  CHECK(h.parts == std::vector<Poly4>{harmonic});

  CHECK_THROWS_AS(almansi_complex(poly("a*b"), VariablePair::alpha), WrongVariables);
  const auto beta = almansi_complex(fn("0 | b*bc").minus(), VariablePair::beta);
  REQUIRE(beta.parts.size() == 2);
  CHECK(beta.parts[1] == Poly4::constant(1));
}

TEST_CASE("complex Almansi parts are harmonic and count the order") {
  Rng rng(42);
  GenConfig cfg;
  for (int t = 0; t < 200; ++t) {
    const Poly4 u = random_poly(rng, cfg, {4, 4, 0, 0});
    const auto a = almansi_complex(u, VariablePair::alpha);
    CHECK(a.reconstruct() == u);
    CHECK(a.parts.size() == oracle::harmonic_order(u, Var::alpha, Var::alpha_bar));
    for (const auto& h : a.parts) {
      CHECK(oracle::derivative(oracle::derivative(h, Var::alpha), Var::alpha_bar).is_zero());
    }
  }
}

TEST_CASE("bicomplex Almansi") {
  const auto f1 = almansi_bicomplex(reference_F1());
  CHECK(f1.parts == std::vector<BicomplexFunction>{reference_F1()});

  const auto zz = almansi_bicomplex(fn("Z*star(Z)"));
  REQUIRE(zz.parts.size() == 2);
  CHECK(zz.parts[0].is_zero());
  CHECK(zz.parts[1] == constant(1));

  const auto a = almansi_bicomplex(fn("a^2*ac | 0"));
  REQUIRE(a.parts.size() == 2);
  CHECK(a.parts[0].is_zero());
  CHECK(a.parts[1] == fn("a | 0"));
}

TEST_CASE("real part inversion in one pair") {
  CHECK(repart_to_polyanalytic(poly("a^2*ac + ac^2*a"), VariablePair::alpha) == poly("2*a^2*ac"));
  CHECK(repart_to_polyanalytic(poly("(a + ac)/2"), VariablePair::alpha) == poly("a"));
  CHECK(repart_to_polyanalytic(poly("a*ac"), VariablePair::alpha) == poly("a*ac"));
  CHECK_THROWS_AS(repart_to_polyanalytic(poly("a"), VariablePair::alpha), NotRealValued);
  CHECK_THROWS_AS(repart_to_polyanalytic(poly("b + bc"), VariablePair::alpha), WrongVariables);

  Rng rng(43);
  GenConfig cfg;
  for (int t = 0; t < 200; ++t) {
    const Poly4 u = random_real_valued(rng, cfg, VariablePair::alpha, 4);
    const Poly4 f = repart_to_polyanalytic(u, VariablePair::alpha);
    CHECK((f + oracle::bar(f)) * GaussianRational(Rational(1, 2)) == u);
    for (const auto& [e, c] : f.terms()) CHECK(e[1] <= e[0]);
  }
}

TEST_CASE("hyperbolic real part inversion") {
  const BicomplexFunction F = fn("(a^2 + ac^2)/2 | (b + bc)/2");
  CHECK(rehyp_to_holomorphic(F) == fn("a^2 | b"));
  const BicomplexFunction c = BicomplexFunction::constant(parse_bicomplex("1 + 4k"));
  CHECK(rehyp_to_holomorphic(c) == c);

  CHECK(precondition([] { (void)rehyp_to_holomorphic(reference_F1()); }) == "dZdagger F = 0");
  CHECK(precondition([] { (void)rehyp_to_holomorphic(fn("a*ac | 0")); }) == "Delta_1 F = 0");
  CHECK_THROWS_AS(rehyp_to_holomorphic(fn("i*a | 0")), NotHyperbolicValued);
}

TEST_CASE("first-kind inversion") {
  const BicomplexFunction zz = fn("Z*star(Z)");
  const FirstKindInversion a = rehyp_to_polyholomorphic_A1(zz);
  CHECK(a.f == zz);
  CHECK(a.r == 2);
  CHECK(a.s == 2);

  const BicomplexFunction c = BicomplexFunction::constant(parse_bicomplex("2 - 3k"));
  const FirstKindInversion b = rehyp_to_polyholomorphic_A1(c);
  CHECK(b.f == c);
  CHECK(b.r == 1);
  CHECK(b.s == 1);

  const FirstKindInversion d = rehyp_to_polyholomorphic_A1(fn("a^2*ac + ac^2*a | 0"));
  CHECK(d.f == fn("2*a^2*ac | 0"));

  CHECK(precondition([] { (void)rehyp_to_polyholomorphic_A1(reference_F1()); }) == "dZdagger F = 0");
}

TEST_CASE("first-kind preimages differ by functions with zero hyperbolic real part") {
  // 1 and 1 + i a ac share a hyperbolic real part; the inversion returns the
  // normalized one.
  const BicomplexFunction one = constant(1);
  const BicomplexFunction other = fn("1 + i*a*ac | 1");
  CHECK(other.hyperbolic_part() == one);
  CHECK(rehyp_to_polyholomorphic_A1(other.hyperbolic_part()).f == one);
  CHECK(polyholo_signature(other) != polyholo_signature(one));
}

TEST_CASE("main decomposition of the reference function") {
  const MainDecomposition d = main_decomposition(reference_F1(), 2, 2);
  CHECK(d.g.at({1, 0}) == fn("a + ac | b + bc"));
  CHECK(d.g.at({0, 1}) == fn("a + ac | b + bc"));
  CHECK(d.g.at({0, 0}).is_zero());
  CHECK(d.g.at({1, 1}).is_zero());
  REQUIRE(d.refined.has_value());
  CHECK(d.non_real.empty());
  CHECK(d.refined->at({1, 0}).hyperbolic_part() == d.g.at({1, 0}));
  CHECK(d.refined->at({1, 0}) == fn("2*a | 2*b"));
  CHECK(d.reconstruct() == reference_F1());
  CHECK(d.reconstruct_refined() == reference_F1());
}

TEST_CASE("main decomposition edge cases") {
  const BicomplexFunction c = BicomplexFunction::constant(parse_bicomplex("3 + k"));
  const MainDecomposition d = main_decomposition(c, 2, 3);
  CHECK(d.g.at({0, 0}) == c);
  for (const auto& [idx, g] : d.g) {
    if (idx != Index2{0, 0}) CHECK(g.is_zero());
  }

  const BicomplexFunction zz = fn("Z*star(Z)");
  const MainDecomposition e = main_decomposition(zz, 1, 1);
  CHECK(e.g.at({0, 0}) == zz);

  CHECK(precondition([] { (void)main_decomposition(reference_F1(), 1, 2); }) == "dZdagger^1 F = 0");
  CHECK_THROWS_AS(main_decomposition(fn("i | 0"), 1, 1), NotHyperbolicValued);
}

TEST_CASE("non-real coefficient functions yield the diagnostic") {
  // a_{10} = i a and a_{01} = -i ac are not real-valued, but F+ = i a b - i ac bc is.
  const BicomplexFunction F = fn("i*a*b - i*ac*bc | 0");
  REQUIRE(F.is_hyperbolic_valued());
  const MainDecomposition d = main_decomposition(F, 2, 2);
  CHECK_FALSE(d.refined.has_value());
  CHECK(d.non_real == std::vector<NonRealCoefficient>{{{0, 1}, '+'}, {{1, 0}, '+'}});
  CHECK(d.reconstruct() == F);
  CHECK_THROWS_AS(d.reconstruct_refined(), NotInClass);
}

TEST_CASE("coordinate powers") {
  CHECK(zstar_power(2) == fn("ac^2 | bc^2"));
  CHECK(zdagger_power(1) == fn("b | a"));
  CHECK(ztilde_power(1) == fn("bc | ac"));
  CHECK(bc_modulus_power(1) == fn("a*ac | b*bc"));
  CHECK(zstar_power(0) == constant(1));
}
