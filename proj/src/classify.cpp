#include "bcx/classify.hpp"

#include <algorithm>

#include "bcx/error.hpp"

namespace bcx {

std::uint32_t polyharmonic_order(const BicomplexFunction& f, const Operator& t) {
  const std::uint32_t cap = 2 + f.total_degree();
  BicomplexFunction current = f;
  for (std::uint32_t n = 0; n <= cap; ++n) {
    if (current.is_zero()) return n;
    current = t.apply(current);
  }
  throw NotNilpotent("operator " + to_string(t) + " does not annihilate the function within " +
                     std::to_string(cap) + " applications");
}

namespace {

// Degree of one variable, -1 for the zero polynomial.
long degree_of(const Poly4& p, Var v) {
  auto d = p.degrees();
  return d ? static_cast<long>((*d)[index(v)]) : -1;
}

std::uint32_t one_plus_max(long a, long b) { return static_cast<std::uint32_t>(1 + std::max(a, b)); }

std::uint32_t annihilation_count(const BicomplexFunction& f, const Operator& t) {
  std::uint32_t count = 0;
  BicomplexFunction current = f;
  while (!current.is_zero()) {
    current = t.apply(current);
    ++count;
  }
  return count;
}

}  // namespace

Signature polyholo_signature(const BicomplexFunction& f) {
  const Poly4& p = f.plus();
  const Poly4& q = f.minus();
  return {one_plus_max(degree_of(p, Var::alpha_bar), degree_of(q, Var::beta_bar)),
          one_plus_max(degree_of(p, Var::beta_bar), degree_of(q, Var::alpha_bar)),
          one_plus_max(degree_of(p, Var::beta), degree_of(q, Var::alpha))};
}

Signature polyholo_signature_iterated(const BicomplexFunction& f) {
  // Each Wirtinger operator strictly lowers one exponent, so the loops end.
  return {annihilation_count(f, wirtinger(Wirtinger::Zstar)),
          annihilation_count(f, wirtinger(Wirtinger::Ztilde)),
          annihilation_count(f, wirtinger(Wirtinger::Zdagger))};
}

ClassReport class_membership(const BicomplexFunction& f) {
  ClassReport report;
  report.signature = polyholo_signature(f);

  const Poly4& p = f.plus();
  const Poly4& q = f.minus();
  const bool first_kind = p.uses_only(VariablePair::alpha) && q.uses_only(VariablePair::beta);
  report.is_bc_holomorphic = first_kind && !p.depends_on(Var::alpha_bar) && !q.depends_on(Var::beta_bar);

  if (first_kind) {
    const auto m = static_cast<std::uint32_t>(1 + degree_of(p, Var::alpha_bar));
    const auto n = static_cast<std::uint32_t>(1 + degree_of(q, Var::beta_bar));
    report.a1_orders = std::make_pair(m, n);
    report.zstar_order = std::max(m, n);
  }

  for (int idx = 1; idx <= 7; ++idx) {
    report.laplacian_orders[static_cast<std::size_t>(idx - 1)] = polyharmonic_order(f, laplacian(idx));
  }
  return report;
}

}  // namespace bcx
