#include "bcx/examples.hpp"

#include <functional>

#include "bcx/classify.hpp"
#include "bcx/decompose.hpp"
#include "bcx/error.hpp"
#include "bcx/expr.hpp"
#include "bcx/operators.hpp"

namespace bcx {

namespace {

Poly4 var(Var v) { return Poly4::variable(v); }

bool throws_null_cone(const Bicomplex& z) {
  try {
    (void)z.inverse();
  } catch (const NullConeError&) {
    return true;
  }
  return false;
}

// Name of the failed precondition, or an empty string when none fails.
std::string rehyp_holo_failure(const BicomplexFunction& F) {
  try {
    (void)rehyp_to_holomorphic(F);
  } catch (const PreconditionViolation& e) {
    return e.condition();
  }
  return {};
}

}  // namespace

BicomplexFunction reference_F1() {
  return BicomplexFunction::scalar((var(Var::alpha) + var(Var::alpha_bar)) * (var(Var::beta) + var(Var::beta_bar)));
}

BicomplexFunction reference_G1() {
  const GaussianRational two(2);
  return {two * var(Var::alpha_bar) * (var(Var::beta) + var(Var::beta_bar)),
          two * var(Var::beta_bar) * (var(Var::alpha) + var(Var::alpha_bar))};
}

std::vector<ExampleCheck> worked_example_checks() {
  const Bicomplex ep = Bicomplex::e_plus();
  const Bicomplex em = Bicomplex::e_minus();
  const Bicomplex i = Bicomplex::unit_i();
  const Bicomplex j = Bicomplex::unit_j();
  const BicomplexFunction F1 = reference_F1();
  const BicomplexFunction G1 = reference_G1();
  const BicomplexFunction Z = BicomplexFunction::identity();
  ParseOptions raw;
  raw.raw_idempotent = true;

  std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"e+^2 = e+", [&] { return ep * ep == ep; }},
      {"e-^2 = e-", [&] { return em * em == em; }},
      {"e+ e- = 0", [&] { return (ep * em).is_zero(); }},
      {"e+ + e- = 1", [&] { return ep + em == Bicomplex(1); }},
      {"e+ - e- = ij", [&] { return ep - em == i * j; }},
      {"(1 + j)^2 = 2j", [&] { return (Bicomplex(1) + j).pow(2) == Bicomplex(2) * j; }},
      {"1 + ij lies in the null cone", [&] { return throws_null_cone(Bicomplex(1) + i * j); }},
      {"inverse(2e+ + 4e-) = e+/2 + e-/4",
       [&] {
         const Bicomplex z = Bicomplex(2) * ep + Bicomplex(4) * em;
         return z.inverse() == Bicomplex({Rational(1, 2)}, {Rational(1, 4)}) && z * z.inverse() == Bicomplex(1);
       }},
      {"re_hyp(1 + 2i + 3j + 4k) = 1 + 4k",
       [&] {
         const Bicomplex z = parse_bicomplex("1 + 2i + 3j + 4k");
         return z.hyperbolic_part() == Hyperbolic{5, -3} &&
                Bicomplex::from_hyperbolic(z.hyperbolic_part()) == parse_bicomplex("1 + 4k");
       }},
      {"Z^2 at 1 + j is 2j", [&] { return Z.pow(2).evaluate(parse_bicomplex("1 + j")) == parse_bicomplex("2j"); }},
      {"F1 parses from (a + ac)(b + bc)", [&] { return parse("(a + ac)(b + bc)", raw) == F1; }},
      {"G1 = 2 Z* (Z^dagger + Z~)", [&] { return parse("2*star(Z)*(dag(Z) + til(Z))") == G1; }},
      {"F1* = F1", [&] { return F1.conjugate(Conjugation::star) == F1; }},
      {"F1(e+) = 0", [&] { return F1.evaluate(ep).is_zero(); }},
      {"dZstar F1 = (b + bc) | (a + ac)",
       [&] {
         return wirtinger(Wirtinger::Zstar).apply(F1) ==
                BicomplexFunction(var(Var::beta) + var(Var::beta_bar), var(Var::alpha) + var(Var::alpha_bar));
       }},
      {"Delta_1 F1 = 0", [&] { return laplacian(1).apply(F1).is_zero(); }},
      {"Delta_5 F1 = 1", [&] { return laplacian(5).apply(F1) == BicomplexFunction::constant(Bicomplex(1)); }},
      {"dZstar^2 F1 = 0", [&] { return wirtinger(Wirtinger::Zstar).apply(F1, 2).is_zero(); }},
      {"signature(F1) = (2, 2, 2)",
       [&] {
         const Signature s{2, 2, 2};
         return polyholo_signature(F1) == s && polyholo_signature_iterated(F1) == s;
       }},
      {"signature(G1) = (2, 2, 2)",
       [&] {
         const Signature s{2, 2, 2};
         return polyholo_signature(G1) == s && polyholo_signature_iterated(G1) == s;
       }},
      {"polyharmonic order of F1 under Delta_1 is 1", [&] { return polyharmonic_order(F1, laplacian(1)) == 1; }},
      {"re_c(G1) = F1", [&] { return G1.real_part() == F1; }},
      {"conjugate basis of G1 = {(1,0,1): 2, (1,1,0): 2}",
       [&] {
         const auto e = expand_conjugate_basis(G1);
         const std::map<Index3, BicomplexFunction> expected = {
             {{1, 0, 1}, BicomplexFunction::constant(Bicomplex(2))},
             {{1, 1, 0}, BicomplexFunction::constant(Bicomplex(2))}};
         return e.coeffs == expected && e.reconstruct() == G1;
       }},
      {"F1 is bc-harmonic: Almansi H0 = F1",
       [&] {
         const auto a = almansi_bicomplex(F1);
         return a.parts.size() == 1 && a.parts[0] == F1;
       }},
      {"F1 is not a hyperbolic real part: dZdagger F = 0 fails",
       [&] { return rehyp_holo_failure(F1) == "dZdagger F = 0"; }},
      {"main decomposition of F1 with (n, k) = (2, 2) reconstructs",
       [&] {
         const auto d = main_decomposition(F1, 2, 2);
         return d.refined && d.reconstruct() == F1 && d.reconstruct_refined() == F1;
       }},
  };

  std::vector<ExampleCheck> out;
  out.reserve(checks.size());
  for (auto& [name, fn] : checks) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception&) {
      ok = false;
    }
    out.push_back({name, ok});
  }
  return out;
}

Json worked_examples(ValueEncoding enc) {
  const BicomplexFunction F1 = reference_F1();
  const BicomplexFunction G1 = reference_G1();
  Json ex = Json::object();
  ex["F1"] = encode(F1, enc);
  ex["G1"] = encode(G1, enc);
  ex["dZstar F1"] = encode(wirtinger(Wirtinger::Zstar).apply(F1), enc);
  ex["Delta_1 F1"] = encode(laplacian(1).apply(F1), enc);
  ex["Delta_5 F1"] = encode(laplacian(5).apply(F1), enc);
  ex["classify F1"] = to_json(class_membership(F1));
  ex["classify G1"] = to_json(class_membership(G1));
  ex["re_c G1"] = encode(G1.real_part(), enc);
  ex["re_hyp G1"] = encode(G1.hyperbolic_part(), enc);
  ex["conjbasis G1"] = encode(expand_conjugate_basis(G1), enc);
  ex["almansi F1"] = encode(almansi_bicomplex(F1), enc);
  ex["main F1 (2, 2)"] = encode(main_decomposition(F1, 2, 2), enc);
  try {
    (void)rehyp_to_holomorphic(F1);
    ex["rehyp-holo F1"] = nullptr;
  } catch (const PreconditionViolation& e) {
    ex["rehyp-holo F1"] = {{"error", e.kind()}, {"condition", e.condition()}};
  }
  const Bicomplex z = parse_bicomplex("1 + 2i + 3j + 4k");
  ex["re_hyp(1 + 2i + 3j + 4k)"] = encode(Bicomplex::from_hyperbolic(z.hyperbolic_part()), enc);
  ex["Z^2 at 1 + j"] = encode(BicomplexFunction::identity().pow(2).evaluate(parse_bicomplex("1 + j")), enc);
  ex["e+ e-"] = encode(Bicomplex::e_plus() * Bicomplex::e_minus(), enc);

  Json checks = Json::object();
  bool all = true;
  for (const auto& c : worked_example_checks()) {
    checks[c.name] = c.passed;
    all = all && c.passed;
  }
  return {{"examples", ex}, {"checks", checks}, {"passed", all}};
}

}  // namespace bcx
