#include "doctest.h"
#include "oracles.hpp"

#include "bcx/error.hpp"
#include "bcx/examples.hpp"
#include "bcx/operators.hpp"
#include "bcx/random.hpp"

using namespace bcx;

namespace {

using Pair = std::array<Var, 2>;

// Applies d/dx d/dy to each component with the oracle derivative.
BicomplexFunction second(const BicomplexFunction& f, Pair plus, Pair minus) {
  return {oracle::derivative(oracle::derivative(f.plus(), plus[0]), plus[1]),
          oracle::derivative(oracle::derivative(f.minus(), minus[0]), minus[1])};
}

BicomplexFunction conj(const BicomplexFunction& f, Conjugation k) { return f.conjugate(k); }

const Var a = Var::alpha;
const Var ac = Var::alpha_bar;
const Var b = Var::beta;
const Var bc = Var::beta_bar;

}  // namespace

TEST_CASE("Wirtinger derivatives act as a Kronecker delta on the coordinate functions") {
  const BicomplexFunction Z = BicomplexFunction::identity();
  const std::array<BicomplexFunction, 4> coords = {Z, conj(Z, Conjugation::star), conj(Z, Conjugation::dagger),
                                                   conj(Z, Conjugation::tilde)};
  const std::array<Wirtinger, 4> ops = {Wirtinger::Z, Wirtinger::Zstar, Wirtinger::Zdagger, Wirtinger::Ztilde};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const BicomplexFunction got = wirtinger(ops[r]).apply(coords[c]);
      CHECK(got == BicomplexFunction::constant(Bicomplex(r == c ? 1 : 0)));
    }
  }
}

TEST_CASE("power rule") {
  const BicomplexFunction Z = BicomplexFunction::identity();
  for (unsigned n = 1; n < 7; ++n) {
    CHECK(wirtinger(Wirtinger::Z).apply(Z.pow(n)) == Z.pow(n - 1) * Bicomplex(static_cast<long>(n)));
  }
  CHECK(wirtinger(Wirtinger::Zstar).apply(conj(Z, Conjugation::star), 2).is_zero());
}

TEST_CASE("Laplacians have the expected component forms") {
  Rng rng(21);
  GenConfig cfg;
  cfg.max_degree = 3;
  for (int t = 0; t < 100; ++t) {
    const BicomplexFunction f = random_function(rng, cfg);
    CHECK(laplacian(1).apply(f) == second(f, {a, ac}, {b, bc}));
    CHECK(laplacian(2).apply(f) == second(f, {a, b}, {b, a}));
    CHECK(laplacian(3).apply(f) == second(f, {a, bc}, {b, ac}));
    CHECK(laplacian(4).apply(f) == second(f, {ac, b}, {bc, a}));
    CHECK(laplacian(5).apply(f) == second(f, {ac, bc}, {bc, ac}));
    CHECK(laplacian(6).apply(f) == second(f, {b, bc}, {a, ac}));
    CHECK(laplacian(7).apply(f) == laplacian(1).apply(f) + laplacian(6).apply(f));
  }
  CHECK(compose(wirtinger(Wirtinger::Z), wirtinger(Wirtinger::Zstar)) == laplacian(1));
  CHECK(laplacian(1) + laplacian(6) == laplacian(7));
  CHECK_THROWS_AS(laplacian(0), IndexOutOfRange);
  CHECK_THROWS_AS(laplacian(8), IndexOutOfRange);
}

TEST_CASE("reference function under the Laplacians") {
  const BicomplexFunction F1 = reference_F1();
  CHECK(laplacian(1).apply(F1).is_zero());
  CHECK(laplacian(5).apply(F1) == BicomplexFunction::constant(Bicomplex(1)));
  CHECK(second(F1, {ac, bc}, {ac, bc}) == BicomplexFunction::constant(Bicomplex(1)));
  CHECK(laplacian(7).apply(BicomplexFunction::constant(Bicomplex(5))).is_zero());
  CHECK(wirtinger(Wirtinger::Zstar).apply(F1) ==
        BicomplexFunction(Poly4::variable(b) + Poly4::variable(bc), Poly4::variable(a) + Poly4::variable(ac)));
}

TEST_CASE("reduction identities") {
  Rng rng(22);
  GenConfig cfg;
  for (int t = 0; t < 100; ++t) {
    const BicomplexFunction f = random_function(rng, cfg);
    CHECK(laplacian(6).apply(f) == conj(laplacian(1).apply(conj(f, Conjugation::dagger)), Conjugation::dagger));
    CHECK(laplacian(5).apply(f) == conj(laplacian(2).apply(conj(f, Conjugation::star)), Conjugation::star));
    CHECK(laplacian(4).apply(f) == conj(laplacian(3).apply(conj(f, Conjugation::star)), Conjugation::star));
  }
}

TEST_CASE("operator conjugation") {
  CHECK(wirtinger(Wirtinger::Z).conjugate(OpConjugation::star_op) == wirtinger(Wirtinger::Zstar));
  CHECK(wirtinger(Wirtinger::Z).conjugate(OpConjugation::dagger_op) == wirtinger(Wirtinger::Zdagger));
  CHECK(wirtinger(Wirtinger::Z).conjugate(OpConjugation::tilde_op) == wirtinger(Wirtinger::Ztilde));

  const std::array<OpConjugation, 3> ks = {OpConjugation::star_op, OpConjugation::dagger_op, OpConjugation::tilde_op};
  const std::array<Conjugation, 3> fs = {Conjugation::star, Conjugation::dagger, Conjugation::tilde};
  Rng rng(23);
  GenConfig cfg;
  for (int t = 0; t < 100; ++t) {
    const Operator T = random_operator(rng, cfg);
    const BicomplexFunction f = random_function(rng, cfg);
    for (std::size_t x = 0; x < 3; ++x) {
      CHECK(T.conjugate(ks[x]).conjugate(ks[x]) == T);
      // T^{k op} f = (T f^k)^k
      CHECK(T.conjugate(ks[x]).apply(f) == conj(T.apply(conj(f, fs[x])), fs[x]));
      for (std::size_t y = 0; y < 3; ++y) {
        if (x == y) continue;
        const std::size_t z = 3 - x - y;
        CHECK(T.conjugate(ks[x]).conjugate(ks[y]) == T.conjugate(ks[z]));
      }
    }
  }
}

TEST_CASE("scalar operators and j parts") {
  Rng rng(24);
  GenConfig cfg;
  for (int t = 0; t < 50; ++t) {
    const BicomplexFunction f = random_function(rng, cfg);
    CHECK(Operator::identity().apply(f) == f);
    CHECK(Operator::scalar(Bicomplex(1)).apply(f) == f);
    CHECK(Operator::sigma().apply(f) == BicomplexFunction(f.plus(), -f.minus()));
    const Operator T = random_operator(rng, cfg);
    const auto [a1, a2] = T.j_parts();
    CHECK(Operator::from_j_parts(a1, a2) == T);
    CHECK(T.apply(f, 3) == T.pow(3).apply(f));
  }
}
