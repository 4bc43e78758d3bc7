#include "bcx/decompose.hpp"

#include <algorithm>

#include "bcx/classify.hpp"
#include "bcx/error.hpp"
#include "bcx/operators.hpp"

namespace bcx {

BicomplexFunction zstar_power(std::uint32_t e) {
  return BicomplexFunction::identity().conjugate(Conjugation::star).pow(e);
}

BicomplexFunction ztilde_power(std::uint32_t e) {
  return BicomplexFunction::identity().conjugate(Conjugation::tilde).pow(e);
}

BicomplexFunction zdagger_power(std::uint32_t e) {
  return BicomplexFunction::identity().conjugate(Conjugation::dagger).pow(e);
}

BicomplexFunction bc_modulus_power(std::uint32_t e) {
  BicomplexFunction z = BicomplexFunction::identity();
  return (z * z.conjugate(Conjugation::star)).pow(e);
}

// ---------------------------------------------------------------------------
// Conjugate basis

ConjugateExpansion expand_conjugate_basis(const BicomplexFunction& f) {
  // f+ monomial alpha^a abar^b beta^c bbar^d -> index (b, d, c), remainder alpha^a.
  // f- monomial alpha^a abar^b beta^c bbar^d -> index (d, b, a), remainder beta^c.
  std::map<Index3, std::pair<Poly4, Poly4>> parts;
  for (const auto& [e, c] : f.plus().terms()) {
    parts[{e[1], e[3], e[2]}].first.add_term({e[0], 0, 0, 0}, c);
  }
  for (const auto& [e, c] : f.minus().terms()) {
    parts[{e[3], e[1], e[0]}].second.add_term({0, 0, e[2], 0}, c);
  }
  ConjugateExpansion out;
  for (auto& [idx, pm] : parts) {
    out.coeffs.emplace(idx, BicomplexFunction(std::move(pm.first), std::move(pm.second)));
  }
  return out;
}

BicomplexFunction ConjugateExpansion::reconstruct() const {
  BicomplexFunction sum;
  for (const auto& [idx, h] : coeffs) {
    sum += zstar_power(idx[0]) * ztilde_power(idx[1]) * zdagger_power(idx[2]) * h;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Z* expansion

std::vector<BicomplexFunction> expand_zstar(const BicomplexFunction& f) {
  if (!f.plus().uses_only(VariablePair::alpha) || !f.minus().uses_only(VariablePair::beta)) {
    throw NotInClass("function is not first-kind polyholomorphic: f+ must use only (alpha, conj alpha) "
                     "and f- only (beta, conj beta)");
  }
  auto report = class_membership(f);
  const std::uint32_t len = *report.zstar_order;
  std::vector<std::pair<Poly4, Poly4>> parts(len);
  for (const auto& [e, c] : f.plus().terms()) parts[e[1]].first.add_term({e[0], 0, 0, 0}, c);
  for (const auto& [e, c] : f.minus().terms()) parts[e[3]].second.add_term({0, 0, e[2], 0}, c);

  std::vector<BicomplexFunction> out;
  out.reserve(len);
  for (auto& pm : parts) out.emplace_back(std::move(pm.first), std::move(pm.second));
  return out;
}

BicomplexFunction reconstruct_zstar(const std::vector<BicomplexFunction>& parts) {
  BicomplexFunction sum;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    sum += zstar_power(static_cast<std::uint32_t>(k)) * parts[k];
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Almansi

namespace {

struct PairIndices {
  std::size_t holo;
  std::size_t anti;
};

PairIndices indices_of(VariablePair pair) {
  return pair == VariablePair::alpha ? PairIndices{index(Var::alpha), index(Var::alpha_bar)}
                                     : PairIndices{index(Var::beta), index(Var::beta_bar)};
}

const char* name_of(VariablePair pair) { return pair == VariablePair::alpha ? "alpha" : "beta"; }

void require_pair(const Poly4& u, VariablePair pair) {
  if (!u.uses_only(pair)) {
    throw WrongVariables(std::string("polynomial must use only the ") + name_of(pair) + " variable pair");
  }
}

// Splits p into slots by min(holo, anti) exponent of the given pair; other
// variables are carried along unchanged.
std::vector<Poly4> almansi_slots(const Poly4& p, VariablePair pair) {
  const auto [h, a] = indices_of(pair);
  std::vector<Poly4> slots;
  for (const auto& [e, c] : p.terms()) {
    const std::uint32_t slot = std::min(e[h], e[a]);
    if (slots.size() <= slot) slots.resize(slot + 1);
    Exponents rest = e;
    rest[h] -= slot;
    rest[a] -= slot;
    slots[slot].add_term(rest, c);
  }
  return slots;
}

Poly4 modulus_power(VariablePair pair, std::uint32_t e) {
  const auto [h, a] = indices_of(pair);
  Exponents m{0, 0, 0, 0};
  m[h] = e;
  m[a] = e;
  return Poly4::monomial(m);
}

}  // namespace

ComplexAlmansi almansi_complex(const Poly4& u, VariablePair pair) {
  require_pair(u, pair);
  return {pair, almansi_slots(u, pair)};
}

Poly4 ComplexAlmansi::reconstruct() const {
  Poly4 sum;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    sum += modulus_power(pair, static_cast<std::uint32_t>(k)) * parts[k];
  }
  return sum;
}

BicomplexAlmansi almansi_bicomplex(const BicomplexFunction& f) {
  std::vector<Poly4> plus = almansi_slots(f.plus(), VariablePair::alpha);
  std::vector<Poly4> minus = almansi_slots(f.minus(), VariablePair::beta);
  const std::size_t len = std::max(plus.size(), minus.size());
  plus.resize(len);
  minus.resize(len);
  BicomplexAlmansi out;
  out.parts.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.parts.emplace_back(std::move(plus[k]), std::move(minus[k]));
  return out;
}

BicomplexFunction BicomplexAlmansi::reconstruct() const {
  BicomplexFunction sum;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    sum += bc_modulus_power(static_cast<std::uint32_t>(k)) * parts[k];
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Real-part inversions

Poly4 repart_to_polyanalytic(const Poly4& u, VariablePair pair) {
  require_pair(u, pair);
  if (!u.is_real_valued()) {
    throw NotRealValued("polynomial is not real-valued: coefficients of z^p conj(z)^q and "
                        "z^q conj(z)^p are not conjugate");
  }
  const auto [h, a] = indices_of(pair);
  Poly4 out;
  for (const auto& [e, c] : u.terms()) {
    if (e[h] > e[a]) {
      out.add_term(e, c * GaussianRational(2));
    } else if (e[h] == e[a]) {
      out.add_term(e, c);
    }
  }
  return out;
}

namespace {

void require_hyperbolic(const BicomplexFunction& F) {
  if (!F.is_hyperbolic_valued()) {
    throw NotHyperbolicValued("function is not hyperbolic-valued: F != F*");
  }
}

void require_annihilated(const BicomplexFunction& F, const Operator& t, unsigned power,
                         const std::string& condition) {
  if (!t.apply(F, power).is_zero()) {
    throw PreconditionViolation(condition, "precondition failed: " + condition);
  }
}

BicomplexFunction invert_componentwise(const BicomplexFunction& F) {
  return {repart_to_polyanalytic(F.plus(), VariablePair::alpha),
          repart_to_polyanalytic(F.minus(), VariablePair::beta)};
}

std::uint32_t conjugate_order(const Poly4& p, Var anti) {
  auto d = p.degrees();
  return d ? (*d)[index(anti)] + 1 : 0;
}

}  // namespace

BicomplexFunction rehyp_to_holomorphic(const BicomplexFunction& F) {
  require_hyperbolic(F);
  require_annihilated(F, laplacian(1), 1, "Delta_1 F = 0");
  require_annihilated(F, wirtinger(Wirtinger::Zdagger), 1, "dZdagger F = 0");
  require_annihilated(F, wirtinger(Wirtinger::Ztilde), 1, "dZtilde F = 0");
  return invert_componentwise(F);
}

FirstKindInversion rehyp_to_polyholomorphic_A1(const BicomplexFunction& F) {
  require_hyperbolic(F);
  require_annihilated(F, wirtinger(Wirtinger::Zdagger), 1, "dZdagger F = 0");
  require_annihilated(F, wirtinger(Wirtinger::Ztilde), 1, "dZtilde F = 0");
  FirstKindInversion out;
  out.f = invert_componentwise(F);
  out.r = conjugate_order(out.f.plus(), Var::alpha_bar);
  out.s = conjugate_order(out.f.minus(), Var::beta_bar);
  return out;
}

// ---------------------------------------------------------------------------
// Main decomposition

MainDecomposition main_decomposition(const BicomplexFunction& F, std::uint32_t n, std::uint32_t k) {
  require_hyperbolic(F);
  require_annihilated(F, wirtinger(Wirtinger::Zdagger), n, "dZdagger^" + std::to_string(n) + " F = 0");
  require_annihilated(F, wirtinger(Wirtinger::Ztilde), k, "dZtilde^" + std::to_string(k) + " F = 0");

  MainDecomposition out;
  out.n = n;
  out.k = k;
  std::map<Index2, std::pair<Poly4, Poly4>> coeffs;
  for (std::uint32_t l1 = 0; l1 < n; ++l1) {
    for (std::uint32_t l2 = 0; l2 < k; ++l2) coeffs[{l1, l2}];
  }
  // f+ is expanded in powers beta^l1 bbar^l2, f- in powers alpha^l1 abar^l2.
  for (const auto& [e, c] : F.plus().terms()) coeffs[{e[2], e[3]}].first.add_term({e[0], e[1], 0, 0}, c);
  for (const auto& [e, c] : F.minus().terms()) coeffs[{e[0], e[1]}].second.add_term({0, 0, e[2], e[3]}, c);

  for (auto& [idx, ab] : coeffs) {
    if (!ab.first.is_real_valued()) out.non_real.push_back({idx, '+'});
    if (!ab.second.is_real_valued()) out.non_real.push_back({idx, '-'});
    out.g.emplace(idx, BicomplexFunction(std::move(ab.first), std::move(ab.second)));
  }

  if (out.non_real.empty()) {
    std::map<Index2, BicomplexFunction> refined;
    for (const auto& [idx, g] : out.g) refined.emplace(idx, invert_componentwise(g));
    out.refined = std::move(refined);
  }
  return out;
}

BicomplexFunction MainDecomposition::reconstruct() const {
  BicomplexFunction sum;
  for (const auto& [idx, piece] : g) sum += piece * zdagger_power(idx[0]) * ztilde_power(idx[1]);
  return sum;
}

BicomplexFunction MainDecomposition::reconstruct_refined() const {
  if (!refined) throw NotInClass("refined decomposition is not available: non-real coefficient functions");
  BicomplexFunction sum;
  for (const auto& [idx, f] : *refined) {
    sum += f.hyperbolic_part() * zdagger_power(idx[0]) * ztilde_power(idx[1]);
  }
  return sum;
}

}  // namespace bcx
