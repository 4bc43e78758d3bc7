#include "bcx/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "bcx/classify.hpp"
#include "bcx/decompose.hpp"
#include "bcx/error.hpp"
#include "bcx/examples.hpp"
#include "bcx/expr.hpp"
#include "bcx/operators.hpp"

namespace bcx {

namespace {

constexpr int kMaxRetries = 10;

class Runner {
 public:
  Runner(SuiteResult& result, const VerifyConfig& config)
      : result_(result), config_(config), rng_(result.seed) {}

  Rng& rng() { return rng_; }
  const GenConfig& gen() const { return config_.gen; }
  std::uint64_t requested() const { return config_.trials; }

  // fn returns the name of the first failed property, or "" on success.
  void trials(const std::function<std::string(std::uint64_t)>& fn) {
    for (std::uint64_t t = 0; t < config_.trials; ++t) record([&] { return fn(t); });
  }

  void single(const std::function<std::string()>& fn) { record(fn); }

  void witness(const std::string& key, Json value) { witness_[key] = std::move(value); }
  void retry() { ++result_.retries; }
  void note(std::string text) { result_.notes.push_back(std::move(text)); }

 private:
  void record(const std::function<std::string()>& fn) {
    witness_ = Json::object();
    std::string failed;
    try {
      failed = fn();
    } catch (const Error& e) {
      failed = "unexpected " + e.kind() + ": " + e.what();
    } catch (const std::exception& e) {
      failed = std::string("unexpected exception: ") + e.what();
    }
    const std::uint64_t t = result_.trials++;
    if (failed.empty()) return;
    ++result_.failures;
    if (!result_.first_counterexample) {
      result_.first_counterexample = Json{{"trial", t}, {"property", failed}, {"inputs", witness_}};
    }
  }

  SuiteResult& result_;
  const VerifyConfig& config_;
  Rng rng_;
  Json witness_;
};

std::uint32_t pick(Rng& rng, std::uint32_t lo, std::uint32_t hi) {
  return static_cast<std::uint32_t>(rng.between(lo, hi));
}

const Operator& W(Wirtinger w) {
  static const std::map<Wirtinger, Operator> ops = {{Wirtinger::Z, wirtinger(Wirtinger::Z)},
                                                     {Wirtinger::Zstar, wirtinger(Wirtinger::Zstar)},
                                                     {Wirtinger::Zdagger, wirtinger(Wirtinger::Zdagger)},
                                                     {Wirtinger::Ztilde, wirtinger(Wirtinger::Ztilde)}};
  return ops.at(w);
}

const Operator& L(int idx) {
  static const std::vector<Operator> ops = [] {
    std::vector<Operator> v;
    for (int i = 1; i <= 7; ++i) v.push_back(laplacian(i));
    return v;
  }();
  return ops.at(static_cast<std::size_t>(idx - 1));
}

std::uint32_t order1(const BicomplexFunction& f) { return polyharmonic_order(f, L(1)); }

bool holomorphic_shape(const BicomplexFunction& f) {
  const Poly4& p = f.plus();
  const Poly4& q = f.minus();
  return p.uses_only(VariablePair::alpha) && !p.depends_on(Var::alpha_bar) && q.uses_only(VariablePair::beta) &&
         !q.depends_on(Var::beta_bar);
}

bool first_kind_shape(const BicomplexFunction& f) {
  return f.plus().uses_only(VariablePair::alpha) && f.minus().uses_only(VariablePair::beta);
}

bool is_constant(const BicomplexFunction& f) { return f.total_degree() == 0; }

Conjugation third(Conjugation a, Conjugation b) {
  for (Conjugation c : {Conjugation::dagger, Conjugation::tilde, Conjugation::star}) {
    if (c != a && c != b) return c;
  }
  return a;
}

OpConjugation third(OpConjugation a, OpConjugation b) {
  for (OpConjugation c : {OpConjugation::star_op, OpConjugation::dagger_op, OpConjugation::tilde_op}) {
    if (c != a && c != b) return c;
  }
  return a;
}

Conjugation value_kind(OpConjugation k) {
  switch (k) {
    case OpConjugation::star_op: return Conjugation::star;
    case OpConjugation::dagger_op: return Conjugation::dagger;
    case OpConjugation::tilde_op: return Conjugation::tilde;
  }
  return Conjugation::star;
}

// ---------------------------------------------------------------------------

void suite_algebra_identities(Runner& run) {
  const Bicomplex ep = Bicomplex::e_plus();
  const Bicomplex em = Bicomplex::e_minus();
  const Bicomplex ij = Bicomplex::unit_i() * Bicomplex::unit_j();
  const std::array<Conjugation, 3> kinds{Conjugation::dagger, Conjugation::tilde, Conjugation::star};
  run.trials([&](std::uint64_t) -> std::string {
    const std::uint32_t b = run.gen().coeff_bound;
    const Bicomplex z = random_bicomplex(run.rng(), b);
    const Bicomplex w = random_bicomplex(run.rng(), b);
    const Bicomplex v = random_bicomplex(run.rng(), b);
    run.witness("Z", to_json(z));
    run.witness("W", to_json(w));
    run.witness("V", to_json(v));

    if (!(ep * ep == ep && em * em == em && (ep * em).is_zero() && ep + em == Bicomplex(1) && ep - em == ij)) {
      return "idempotent table";
    }
    const GaussianRational z1 = z.z1();
    const GaussianRational z2 = z.z2();
    if (Bicomplex::from_cartesian(z1, z2) != z) return "cartesian round trip";
    const auto u = z.units();
    if (Bicomplex::from_units(u[0], u[1], u[2], u[3]) != z) return "unit-basis round trip";
    if (z1 * z1 + z2 * z2 != z.alpha() * z.beta() || z.det() != z1 * z1 + z2 * z2) return "det = alpha beta";
    const Bicomplex half_hyp = (z + z.conjugate(Conjugation::star)) / Rational(2);
    if (Bicomplex::from_hyperbolic(z.hyperbolic_part()) != half_hyp) return "re_hyp = (Z + Z*)/2";
    const Bicomplex quarter = (z + z.conjugate(Conjugation::dagger) + z.conjugate(Conjugation::tilde) +
                               z.conjugate(Conjugation::star)) /
                              Rational(4);
    if (quarter != Bicomplex::real(z.real_part())) return "re_c = (Z + Z^dagger + Z~ + Z*)/4";
    if (z.real_part() != (z.alpha().re() + z.beta().re()) / 2) return "re_c = (Re alpha + Re beta)/2";

    if (z * w != w * z || z + w != w + z) return "commutativity";
    if ((z * w) * v != z * (w * v) || (z + w) + v != z + (w + v)) return "associativity";
    if (z * (w + v) != z * w + z * v) return "distributivity";
    if (z * w != Bicomplex(z.alpha() * w.alpha(), z.beta() * w.beta())) return "product law";

    for (Conjugation a : kinds) {
      if (z.conjugate(a).conjugate(a) != z) return std::string("involution ") + to_string(a);
      if ((z * w).conjugate(a) != z.conjugate(a) * w.conjugate(a)) return std::string("multiplicative ") + to_string(a);
      for (Conjugation c : kinds) {
        if (a != c && z.conjugate(a).conjugate(c) != z.conjugate(third(a, c))) {
          return std::string("rotation ") + to_string(a) + " then " + to_string(c);
        }
      }
    }

    const Predicates p = predicates(z);
    if (p.is_hyperbolic != (z == z.conjugate(Conjugation::star))) return "is_hyperbolic iff Z = Z*";
    if (p.is_real != (z == z.conjugate(Conjugation::star) && z == z.conjugate(Conjugation::dagger))) {
      return "is_real iff Z = Z* = Z^dagger";
    }
    if (p.is_null_cone != z.det().is_zero()) return "null cone iff alpha beta = 0";
    if (p.is_null_cone) {
      try {
        (void)z.inverse();
        return "null-cone inverse must fail";
      } catch (const NullConeError&) {
      }
    } else if (z * z.inverse() != Bicomplex(1)) {
      return "Z * inverse(Z) = 1";
    }
    return {};
  });
}

void suite_conjugation_rotation(Runner& run) {
  const std::array<OpConjugation, 3> kinds{OpConjugation::star_op, OpConjugation::dagger_op, OpConjugation::tilde_op};
  // Wirtinger operators permuted by the operational conjugations.
  const std::map<std::pair<Wirtinger, OpConjugation>, Wirtinger> table = {
      {{Wirtinger::Z, OpConjugation::star_op}, Wirtinger::Zstar},
      {{Wirtinger::Z, OpConjugation::dagger_op}, Wirtinger::Zdagger},
      {{Wirtinger::Z, OpConjugation::tilde_op}, Wirtinger::Ztilde},
      {{Wirtinger::Zstar, OpConjugation::star_op}, Wirtinger::Z},
      {{Wirtinger::Zstar, OpConjugation::dagger_op}, Wirtinger::Ztilde},
      {{Wirtinger::Zstar, OpConjugation::tilde_op}, Wirtinger::Zdagger},
      {{Wirtinger::Zdagger, OpConjugation::star_op}, Wirtinger::Ztilde},
      {{Wirtinger::Zdagger, OpConjugation::dagger_op}, Wirtinger::Z},
      {{Wirtinger::Zdagger, OpConjugation::tilde_op}, Wirtinger::Zstar},
      {{Wirtinger::Ztilde, OpConjugation::star_op}, Wirtinger::Zdagger},
      {{Wirtinger::Ztilde, OpConjugation::dagger_op}, Wirtinger::Zstar},
      {{Wirtinger::Ztilde, OpConjugation::tilde_op}, Wirtinger::Z},
  };
  run.trials([&](std::uint64_t) -> std::string {
    const Operator t = random_operator(run.rng(), run.gen());
    const Operator s = random_operator(run.rng(), run.gen());
    GenConfig small = run.gen();
    small.max_degree = std::min<std::uint32_t>(small.max_degree, 3);
    const BicomplexFunction f = random_function(run.rng(), small);
    run.witness("T", to_json(t));
    run.witness("S", to_json(s));
    run.witness("f", to_json(f));

    for (OpConjugation a : kinds) {
      if (t.conjugate(a).conjugate(a) != t) return "involution";
      for (OpConjugation c : kinds) {
        if (a != c && t.conjugate(a).conjugate(c) != t.conjugate(third(a, c))) return "rotation rule";
      }
      if ((s * t).conjugate(a) != s.conjugate(a) * t.conjugate(a)) return "conjugation of a composition";
      if ((s + t).conjugate(a) != s.conjugate(a) + t.conjugate(a)) return "conjugation of a sum";
      if (t.conjugate(a).apply(f.conjugate(value_kind(a))) != t.apply(f).conjugate(value_kind(a))) {
        return "conjugated operator on conjugated function";
      }
    }
    for (const auto& [key, image] : table) {
      if (W(key.first).conjugate(key.second) != W(image)) return "Wirtinger conjugation table";
    }
    const auto [a1, a2] = t.j_parts();
    if (Operator::from_j_parts(a1, a2) != t) return "j-part round trip";
    return {};
  });
}

void suite_reduction(Runner& run) {
  if (L(7) != L(1) + L(6)) run.note("Delta_7 differs from Delta_1 + Delta_6 as operators");
  run.trials([&](std::uint64_t) -> std::string {
    const BicomplexFunction f = random_function(run.rng(), run.gen());
    run.witness("f", to_json(f));
    const auto dag = Conjugation::dagger;
    const auto star = Conjugation::star;
    if (L(6).apply(f) != L(1).apply(f.conjugate(dag)).conjugate(dag)) return "Delta_6 f = (Delta_1 f^dagger)^dagger";
    if (L(5).apply(f) != L(2).apply(f.conjugate(star)).conjugate(star)) return "Delta_5 f = (Delta_2 f*)*";
    if (L(4).apply(f) != L(3).apply(f.conjugate(star)).conjugate(star)) return "Delta_4 f = (Delta_3 f*)*";
    if (L(7).apply(f) != L(1).apply(f) + L(6).apply(f)) return "Delta_7 = Delta_1 + Delta_6";
    if (L(7) != L(1) + L(6)) return "Delta_7 = Delta_1 + Delta_6 as operators";
    return {};
  });
}

void suite_operator_calculus(Runner& run) {
  const std::array<Wirtinger, 4> all{Wirtinger::Z, Wirtinger::Zstar, Wirtinger::Zdagger, Wirtinger::Ztilde};
  run.trials([&](std::uint64_t) -> std::string {
    GenConfig small = run.gen();
    small.max_degree = std::min<std::uint32_t>(small.max_degree, 3);
    const BicomplexFunction f = random_function(run.rng(), small);
    const BicomplexFunction g = random_function(run.rng(), small);
    const BicomplexFunction h = random_holomorphic(run.rng(), run.gen(), false);
    const std::uint32_t n = pick(run.rng(), 1, 6);
    run.witness("f", to_json(f));
    run.witness("g", to_json(g));
    run.witness("h", to_json(h));
    run.witness("n", n);

    for (Wirtinger a : all) {
      if (W(a).apply(f * g) != W(a).apply(f) * g + f * W(a).apply(g)) return "Leibniz rule";
      for (Wirtinger b : all) {
        if (W(a) * W(b) != W(b) * W(a)) return "Wirtinger operators commute under compose";
        if (W(a).apply(W(b).apply(f)) != W(b).apply(W(a).apply(f))) return "Wirtinger operators commute under apply";
      }
    }
    if (Operator::sigma().apply(f) != BicomplexFunction(f.plus(), -f.minus())) return "sigma f = (f+, -f-)";
    if (Operator::sigma().apply(f) != Bicomplex::unit_k() * f) return "sigma is multiplication by k";
    if (Operator::identity().apply(f) != f) return "identity operator";
    if (L(2).plus() != L(2).minus()) return "Delta_2 has equal components";
    if (!(W(Wirtinger::Zstar).apply(h).is_zero() && W(Wirtinger::Zdagger).apply(h).is_zero() &&
          W(Wirtinger::Ztilde).apply(h).is_zero())) {
      return "bc-holomorphic kernel";
    }
    const BicomplexFunction Z = BicomplexFunction::identity();
    if (W(Wirtinger::Z).apply(Z.pow(n)) != Z.pow(n - 1) * Bicomplex(static_cast<long>(n))) return "power rule";
    return {};
  });
}

void suite_classify_oracle(Runner& run) {
  run.trials([&](std::uint64_t) -> std::string {
    const BicomplexFunction f = random_function(run.rng(), run.gen());
    run.witness("f", to_json(f));
    const Signature s = polyholo_signature(f);
    if (s != polyholo_signature_iterated(f)) return "degree formula = iterated application";
    if (f.is_zero() != (s == Signature{0, 0, 0})) return "zero iff signature (0,0,0)";
    if (s.m > 0 && W(Wirtinger::Zstar).apply(f, s.m - 1).is_zero()) return "exactness of m";
    if (s.n > 0 && W(Wirtinger::Ztilde).apply(f, s.n - 1).is_zero()) return "exactness of n";
    if (s.k > 0 && W(Wirtinger::Zdagger).apply(f, s.k - 1).is_zero()) return "exactness of k";
    return {};
  });
}

void suite_char2_kernel(Runner& run) {
  run.trials([&](std::uint64_t t) -> std::string {
    const std::uint32_t m = pick(run.rng(), 0, 4);
    const std::uint32_t n = pick(run.rng(), 0, 4);
    const BicomplexFunction member = random_first_kind(run.rng(), run.gen(), m, n, false);
    const BicomplexFunction other =
        t % 2 == 0 ? random_function(run.rng(), run.gen()) : random_first_kind(run.rng(), run.gen(), n, m, true);
    run.witness("member", to_json(member));
    run.witness("m", m);
    run.witness("n", n);
    run.witness("other", to_json(other));

    const ClassReport rep = class_membership(member);
    const std::uint32_t l = std::max(m, n);
    if (!rep.a1_orders || *rep.a1_orders != std::make_pair(m, n)) return "member has a1 orders (m, n)";
    if (!rep.zstar_order || *rep.zstar_order != l) return "zstar order = max(m, n)";
    if (!(W(Wirtinger::Zstar).apply(member, l).is_zero() && W(Wirtinger::Zdagger).apply(member).is_zero() &&
          W(Wirtinger::Ztilde).apply(member).is_zero())) {
      return "member lies in the kernels";
    }
    if (l > 0 && W(Wirtinger::Zstar).apply(member, l - 1).is_zero()) return "zstar order is exact";
    const auto parts = expand_zstar(member);
    if (parts.size() != l || reconstruct_zstar(parts) != member) return "Z* expansion reconstructs";
    if (l > 0 && parts.back().is_zero()) return "leading Z* coefficient nonzero";
    for (const auto& g : parts) {
      if (!holomorphic_shape(g)) return "Z* coefficients are bc-holomorphic";
    }

    // Both directions on an arbitrary function.
    const ClassReport orep = class_membership(other);
    const bool kernels = W(Wirtinger::Zdagger).apply(other).is_zero() && W(Wirtinger::Ztilde).apply(other).is_zero();
    if (kernels != orep.a1_orders.has_value()) return "dZdagger f = dZtilde f = 0 iff first kind";
    if (orep.zstar_order && !W(Wirtinger::Zstar).apply(other, *orep.zstar_order).is_zero()) {
      return "first kind lies in ker dZstar^l";
    }
    const Signature s = orep.signature;
    if ((s.n <= 1 && s.k <= 1) != orep.zstar_order.has_value()) return "signature (m,1,1) iff Z* class";
    if (orep.zstar_order && s.m != *orep.zstar_order) return "signature m equals zstar order";
    return {};
  });
}

void suite_proppolholharm_orders(Runner& run) {
  std::uint64_t stated = 0;
  std::uint64_t below = 0;
  std::uint64_t measured = 0;
  run.trials([&](std::uint64_t) -> std::string {
    for (int attempt = 0;; ++attempt) {
      const std::uint32_t m = pick(run.rng(), 1, 3);
      const std::uint32_t n = pick(run.rng(), 1, 3);
      const std::uint32_t k = pick(run.rng(), 1, 3);
      const BicomplexFunction f = random_with_signature(run.rng(), run.gen(), m, n, k);
      run.witness("f", to_json(f));
      run.witness("signature", Json::array({m, n, k}));
      const std::uint32_t s = std::min(n, k);
      if (polyholo_signature(f) != Signature{m, n, k}) return "generated signature";

      const std::uint32_t o_f = order1(f);
      const std::uint32_t o_dag = order1(f.conjugate(Conjugation::dagger));
      const std::uint32_t o_hyp = order1(f.hyperbolic_part());
      const std::uint32_t o_c = order1(f.real_part());
      // Upper bounds hold for every member of the class.
      if (o_f > m) return "order(f, Delta_1) <= m";
      if (o_dag > s) return "order(f^dagger, Delta_1) <= min(n, k)";
      if (o_hyp > m) return "order(re_hyp f, Delta_1) <= m";
      if (o_c > std::max(m, s)) return "order(re_c f, Delta_1) <= max(m, min(n, k))";

      const bool exact = o_f == m && o_dag == s && o_hyp == m && o_c == std::max(m, s);
      if (!exact) {
        if (attempt == kMaxRetries) return "degenerate after retries";
        run.retry();
        continue;
      }
      const std::uint32_t o_minus = order1(BicomplexFunction(f.minus(), Poly4()));
      ++measured;
      if (o_minus == std::min({m, n, k})) {
        ++stated;
      } else {
        ++below;
      }
      return {};
    }
  });
  if (measured > 0) {
    run.note("f- Delta_alpha order matched min(m,n,k) in " + std::to_string(stated) + " of " +
             std::to_string(measured) + " samples; differed in " + std::to_string(below) +
             " (reported, not asserted)");
  }
}

void suite_almansi_roundtrip(Runner& run) {
  run.trials([&](std::uint64_t t) -> std::string {
    const VariablePair pair = t % 2 == 0 ? VariablePair::alpha : VariablePair::beta;
    const std::uint32_t cap = std::min<std::uint32_t>(run.gen().max_degree, 4);
    const DegreeCaps caps = pair == VariablePair::alpha ? DegreeCaps{cap, cap, 0, 0} : DegreeCaps{0, 0, cap, cap};
    const Poly4 u = random_poly(run.rng(), run.gen(), caps);
    GenConfig bounded = run.gen();
    bounded.max_degree = cap;
    const BicomplexFunction F = random_function(run.rng(), bounded);
    run.witness("u", to_json(u));
    run.witness("pair", pair == VariablePair::alpha ? "alpha" : "beta");
    run.witness("F", to_json(F));

    const ComplexAlmansi ca = almansi_complex(u, pair);
    if (ca.reconstruct() != u) return "complex reconstruction";
    const Var holo = pair == VariablePair::alpha ? Var::alpha : Var::beta;
    const Var anti = pair == VariablePair::alpha ? Var::alpha_bar : Var::beta_bar;
    for (const auto& h : ca.parts) {
      if (!h.derivative(holo).derivative(anti).is_zero()) return "complex parts harmonic";
    }
    const BicomplexFunction lifted = pair == VariablePair::alpha ? BicomplexFunction(u, Poly4()) : BicomplexFunction(Poly4(), u);
    if (ca.parts.size() != order1(lifted)) return "complex part count = polyharmonic order";
    if (order1(lifted) > 5) return "complex order <= 5";

    const BicomplexAlmansi ba = almansi_bicomplex(F);
    if (ba.reconstruct() != F) return "bicomplex reconstruction";
    for (const auto& h : ba.parts) {
      if (!L(1).apply(h).is_zero()) return "bicomplex parts harmonic";
    }
    if (ba.parts.size() != order1(F)) return "bicomplex part count = polyharmonic order";

    // Normalization makes the output independent of how the input was assembled.
    std::vector<std::pair<Exponents, GaussianRational>> terms(u.terms().begin(), u.terms().end());
    for (std::size_t i = terms.size(); i > 1; --i) std::swap(terms[i - 1], terms[run.rng().below(i)]);
    Poly4 shuffled;
    for (const auto& [e, c] : terms) shuffled.add_term(e, c);
    if (almansi_complex(shuffled, pair).parts != ca.parts) return "uniqueness under reordering";
    return {};
  });
}

void suite_rehyp_roundtrip(Runner& run) {
  run.trials([&](std::uint64_t) -> std::string {
    const BicomplexFunction f = random_holomorphic(run.rng(), run.gen(), true);
    const BicomplexFunction g = random_holomorphic(run.rng(), run.gen(), false);
    run.witness("f", to_json(f));
    run.witness("g", to_json(g));
    const BicomplexFunction F = f.hyperbolic_part();
    if (!F.is_hyperbolic_valued()) return "re_hyp is hyperbolic-valued";
    if (!W(Wirtinger::Zdagger).apply(F).is_zero()) return "dZdagger re_hyp f = 0";
    if (!W(Wirtinger::Ztilde).apply(F).is_zero()) return "dZtilde re_hyp f = 0";
    if (!L(1).apply(F).is_zero()) return "Delta_1 re_hyp f = 0";
    if (rehyp_to_holomorphic(F) != f) return "round trip for normalized f";

    const BicomplexFunction r = rehyp_to_holomorphic(g.hyperbolic_part());
    const BicomplexFunction diff = g - r;
    if (r.hyperbolic_part() != g.hyperbolic_part()) return "inversion reproduces re_hyp";
    if (!is_constant(diff) || !diff.hyperbolic_part().is_zero()) return "unique up to hyperbolic-imaginary constant";
    return {};
  });
}

void suite_first_kind_rehyp(Runner& run) {
  run.trials([&](std::uint64_t) -> std::string {
    for (int attempt = 0;; ++attempt) {
      const std::uint32_t m = pick(run.rng(), 1, 4);
      const std::uint32_t n = pick(run.rng(), 1, 4);
      const std::uint32_t l = std::max(m, n);
      const BicomplexFunction f = random_first_kind(run.rng(), run.gen(), m, n, false);
      const BicomplexFunction g = random_first_kind(run.rng(), run.gen(), m, n, true);
      run.witness("f", to_json(f));
      run.witness("normalized", to_json(g));
      run.witness("m", m);
      run.witness("n", n);

      const BicomplexFunction F = f.hyperbolic_part();
      if (!L(1).apply(F, l).is_zero()) return "Delta_1^max(m,n) re_hyp f = 0";
      if (L(1).apply(F, l - 1).is_zero()) {
        if (attempt == kMaxRetries) return "degenerate after retries";
        run.retry();
        continue;
      }
      const FirstKindInversion inv = rehyp_to_polyholomorphic_A1(F);
      if (inv.f.hyperbolic_part() != F) return "inversion reproduces re_hyp";
      if (!first_kind_shape(inv.f)) return "inversion is first kind";
      if (std::max(inv.r, inv.s) != order1(F)) return "max(r, s) = polyharmonic order";

      const FirstKindInversion ginv = rehyp_to_polyholomorphic_A1(g.hyperbolic_part());
      if (ginv.f != g) return "round trip for normalized f";
      if (ginv.r != m || ginv.s != n) return "(r, s) = (m, n) for normalized f";
      return {};
    }
  });
}

void suite_mainthm_i(Runner& run) {
  run.trials([&](std::uint64_t) -> std::string {
    const std::uint32_t m = pick(run.rng(), 1, 3);
    const std::uint32_t n = pick(run.rng(), 1, 3);
    const std::uint32_t k = pick(run.rng(), 1, 3);
    const BicomplexFunction f = random_with_signature(run.rng(), run.gen(), m, n, k);
    run.witness("f", to_json(f));
    run.witness("signature", Json::array({m, n, k}));
    if (polyholo_signature(f) != Signature{m, n, k}) return "generated signature";
    const BicomplexFunction F = f.hyperbolic_part();
    const std::uint32_t top = std::max(n, k);
    if (!W(Wirtinger::Zdagger).apply(F, top).is_zero()) return "dZdagger^max(n,k) re_hyp f = 0";
    if (!W(Wirtinger::Ztilde).apply(F, top).is_zero()) return "dZtilde^max(n,k) re_hyp f = 0";
    return {};
  });
}

void suite_mainthm_ii(Runner& run) {
  std::uint64_t refined = 0;
  std::uint64_t diagnosed = 0;
  run.trials([&](std::uint64_t t) -> std::string {
    const bool real = t % 2 == 0;
    const std::uint32_t lo = real ? 1 : 2;
    const std::uint32_t n = pick(run.rng(), lo, 3);
    const std::uint32_t k = pick(run.rng(), lo, 3);
    const BicomplexFunction F = random_main_input(run.rng(), run.gen(), n, k, real);
    run.witness("F", to_json(F));
    run.witness("n", n);
    run.witness("k", k);
    run.witness("real_coefficients", real);

    const MainDecomposition d = main_decomposition(F, n, k);
    if (d.reconstruct() != F) return "G reconstruction";
    const std::uint32_t order_F = order1(F);
    for (const auto& [idx, g] : d.g) {
      if (idx[0] >= n || idx[1] >= k) return "G index range";
      if (!first_kind_shape(g)) return "G pieces are first kind";
      if (order1(g) > order_F) return "G order <= order of F";
    }
    if (d.refined.has_value() == !d.non_real.empty()) return "refined present iff no diagnostic";
    if (real) {
      if (!d.refined) return "refined form produced for real coefficients";
      ++refined;
      for (const auto& [idx, f] : *d.refined) {
        if (!first_kind_shape(f)) return "refined pieces are first kind";
        if (f.hyperbolic_part() != d.g.at(idx)) return "re_hyp f = G";
      }
      if (d.reconstruct_refined() != F) return "refined reconstruction";
    } else {
      if (d.refined) return "non-real coefficients must yield the diagnostic";
      ++diagnosed;
    }
    return {};
  });
  if (refined + diagnosed > 0) {
    run.note("refined form produced " + std::to_string(refined) + " times, diagnostic " + std::to_string(diagnosed) +
             " times");
  }
}

void suite_signature_uniqueness(Runner& run) {
  run.note("perturbations are degree-bounded by the signature of f");
  run.trials([&](std::uint64_t) -> std::string {
    for (int attempt = 0;; ++attempt) {
      const std::uint32_t m = pick(run.rng(), 1, 3);
      const std::uint32_t n = pick(run.rng(), 1, 3);
      const std::uint32_t k = pick(run.rng(), 1, 3);
      const std::uint32_t s = std::min(n, k);
      const BicomplexFunction f = random_with_signature(run.rng(), run.gen(), m, n, k);
      auto imaginary = [&](const DegreeCaps& caps) {
        Poly4 u = random_poly(run.rng(), run.gen(), caps);
        return (u + u.bar()) * GaussianRational(0, Rational(1, 2));
      };
      const BicomplexFunction h(imaginary({m - 1, m - 1, s - 1, s - 1}), imaginary({s - 1, s - 1, m - 1, m - 1}));
      const BicomplexFunction g = f + h;
      run.witness("f", to_json(f));
      run.witness("g", to_json(g));
      if (!h.hyperbolic_part().is_zero()) return "perturbation is hyperbolic-imaginary";
      if (g.hyperbolic_part() != f.hyperbolic_part()) return "shared re_hyp";
      const Signature sf = polyholo_signature(f);
      const Signature sg = polyholo_signature(g);
      if (sg.m > sf.m || sg.n > sf.n || sg.k > sf.k) return "perturbation stays in the class";
      if (sg != sf) {
        if (attempt == kMaxRetries) return "degenerate after retries";
        run.retry();
        continue;
      }
      if (order1(g.hyperbolic_part()) != order1(f.hyperbolic_part())) return "same polyharmonic order";
      return {};
    }
  });
}

void suite_real_valued_constants(Runner& run) {
  std::uint64_t accepted = 0;
  run.trials([&](std::uint64_t t) -> std::string {
    BicomplexFunction F;
    switch (t % 4) {
      case 0: F = BicomplexFunction::constant(Bicomplex::real(random_rational(run.rng(), run.gen().coeff_bound))); break;
      case 1: F = random_function(run.rng(), run.gen()).real_part(); break;
      case 2: F = random_holomorphic(run.rng(), run.gen(), false).real_part(); break;
      default: F = BicomplexFunction::scalar(random_real_valued(run.rng(), run.gen(), VariablePair::alpha, 2)); break;
    }
    run.witness("F", to_json(F));
    if (!F.is_real_valued()) return "generated input is real-valued";
    try {
      (void)rehyp_to_holomorphic(F);
    } catch (const PreconditionViolation&) {
      return {};
    }
    ++accepted;
    if (!is_constant(F)) return "accepted real-valued input is constant";
    return {};
  });
  if (run.requested() > 0) run.note("inputs accepted by the inversion: " + std::to_string(accepted));
}

void suite_conjbasis_roundtrip(Runner& run) {
  run.trials([&](std::uint64_t) -> std::string {
    const BicomplexFunction f = random_function(run.rng(), run.gen());
    run.witness("f", to_json(f));
    const ConjugateExpansion e = expand_conjugate_basis(f);
    if (e.reconstruct() != f) return "reconstruction";
    const Signature s = polyholo_signature(f);
    for (const auto& [idx, h] : e.coeffs) {
      if (h.is_zero()) return "no zero coefficients stored";
      if (!holomorphic_shape(h)) return "coefficients are bc-holomorphic";
      if (idx[0] >= s.m || idx[1] >= s.n || idx[2] >= s.k) return "indices bounded by the signature";
    }
    if (f.is_zero() != e.coeffs.empty()) return "zero iff empty expansion";
    return {};
  });
}

void suite_serialization(Runner& run) {
  run.trials([&](std::uint64_t) -> std::string {
    const BicomplexFunction f = random_function(run.rng(), run.gen());
    const Bicomplex z = random_bicomplex(run.rng(), run.gen().coeff_bound);
    const Operator t = random_operator(run.rng(), run.gen());
    run.witness("f", to_json(f));
    run.witness("Z", to_json(z));
    run.witness("T", to_json(t));
    const std::string text = format(f);
    if (parse(text) != f) return "parse(format(f)) = f";
    if (format(parse(text)) != text) return "format stable";
    const std::string js = dump(to_json(f));
    const BicomplexFunction back = function_from_json(parse_json(js));
    if (back != f || dump(to_json(back)) != js) return "function JSON round trip";
    if (bicomplex_from_json(parse_json(dump(to_json(z)))) != z) return "bicomplex JSON round trip";
    if (parse_bicomplex(to_string(z)) != z) return "bicomplex text round trip";
    if (operator_from_json(parse_json(dump(to_json(t)))) != t) return "operator JSON round trip";
    return {};
  });
}

// One trial per fixed check, unless zero trials were requested.
void suite_worked_examples(Runner& run) {
  if (run.requested() == 0) return;
  for (const auto& c : worked_example_checks()) {
    run.single([&]() -> std::string { return c.passed ? std::string() : c.name; });
  }
}

using SuiteFn = void (*)(Runner&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"algebra-identities", suite_algebra_identities},
      {"conjugation-rotation", suite_conjugation_rotation},
      {"reduction-lemma", suite_reduction},
      {"operator-calculus", suite_operator_calculus},
      {"classify-oracle", suite_classify_oracle},
      {"char2-kernel", suite_char2_kernel},
      {"proppolholharm-orders", suite_proppolholharm_orders},
      {"almansi-roundtrip", suite_almansi_roundtrip},
      {"rehyp-roundtrip", suite_rehyp_roundtrip},
      {"first-kind-rehyp", suite_first_kind_rehyp},
      {"mainthm-i", suite_mainthm_i},
      {"mainthm-ii", suite_mainthm_ii},
      {"signature-uniqueness", suite_signature_uniqueness},
      {"real-valued-constants", suite_real_valued_constants},
      {"conjbasis-roundtrip", suite_conjbasis_roundtrip},
      {"serialization", suite_serialization},
      {"paper-examples", suite_worked_examples},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& config) {
  for (const auto& [suite, fn] : registry()) {
    if (suite != name) continue;
    SuiteResult result;
    result.name = name;
    result.seed = config.seed ^ fnv1a64(name);
    Runner runner(result, config);
    fn(runner);
    return result;
  }
  throw Error("UnknownSuite", "unknown suite '" + name + "'");
}

VerifyReport run_verify(const std::string& name, const VerifyConfig& config) {
  VerifyReport report;
  report.config = config;
  if (name == "all") {
    for (const auto& s : suite_names()) report.suites.push_back(run_suite(s, config));
  } else {
    report.suites.push_back(run_suite(name, config));
  }
  return report;
}

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

Json to_json(const SuiteResult& r) {
  return {{"name", r.name},
          {"trials", r.trials},
          {"failures", r.failures},
          {"retries", r.retries},
          {"seed", r.seed},
          {"first_counterexample", r.first_counterexample ? *r.first_counterexample : Json(nullptr)},
          {"notes", r.notes}};
}

Json to_json(const VerifyReport& r) {
  Json suites = Json::array();
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  for (const auto& s : r.suites) {
    suites.push_back(to_json(s));
    trials += s.trials;
    failures += s.failures;
  }
  return {{"seed", r.config.seed},
          {"trials_requested", r.config.trials},
          {"max_degree", r.config.gen.max_degree},
          {"coeff_bound", r.config.gen.coeff_bound},
          {"suites", suites},
          {"total_trials", trials},
          {"total_failures", failures},
          {"passed", r.passed()},
          {"exit_code", r.exit_code()}};
}

}  // namespace bcx
