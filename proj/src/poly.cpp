#include "bcx/poly.hpp"

#include <algorithm>
#include <vector>

namespace bcx {

Poly4::Poly4(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

Poly4 Poly4::constant(const GaussianRational& c) { return monomial({0, 0, 0, 0}, c); }

Poly4 Poly4::monomial(const Exponents& e, const GaussianRational& c) {
  Poly4 p;
  p.add_term(e, c);
  return p;
}

Poly4 Poly4::variable(Var v) {
  Exponents e{0, 0, 0, 0};
  e[index(v)] = 1;
  return monomial(e);
}

GaussianRational Poly4::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void Poly4::add_term(const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly4& Poly4::operator+=(const Poly4& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly4& Poly4::operator-=(const Poly4& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly4 operator*(const Poly4& a, const Poly4& b) {
  Poly4 out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly4& Poly4::operator*=(const Poly4& o) { return *this = *this * o; }

Poly4& Poly4::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

Poly4 Poly4::operator-() const {
  Poly4 out = *this;
  for (auto& kv : out.terms_) kv.second = -kv.second;
  return out;
}

Poly4 Poly4::pow(unsigned exponent) const {
  Poly4 result = constant(GaussianRational(1));
  Poly4 base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly4 Poly4::bar() const {
  Poly4 out;
  for (const auto& [e, c] : terms_) {
    out.terms_.emplace(Exponents{e[1], e[0], e[3], e[2]}, c.conj());
  }
  return out;
}

bool Poly4::is_real_valued() const {
  for (const auto& [e, c] : terms_) {
    if (coefficient({e[1], e[0], e[3], e[2]}) != c.conj()) return false;
  }
  return true;
}

Poly4 Poly4::derivative(Var v, unsigned order) const {
  Poly4 out;
  const std::size_t idx = index(v);
  for (const auto& [e, c] : terms_) {
    if (e[idx] < order) continue;
    Exponents ne = e;
    ne[idx] -= order;
    mpz_class falling = 1;
    for (unsigned t = 0; t < order; ++t) falling *= e[idx] - t;
    out.terms_.emplace(ne, c * GaussianRational(Rational(falling)));
  }
  return out;
}

Poly4 Poly4::apply_operator(const Poly4& symbol) const {
  Poly4 out;
  for (const auto& [d, coef] : symbol.terms_) {
    for (const auto& [e, c] : terms_) {
      if (e[0] < d[0] || e[1] < d[1] || e[2] < d[2] || e[3] < d[3]) continue;
      mpz_class falling = 1;
      Exponents ne{};
      for (std::size_t v = 0; v < 4; ++v) {
        ne[v] = e[v] - d[v];
        for (std::uint32_t t = 0; t < d[v]; ++t) falling *= e[v] - t;
      }
      out.add_term(ne, coef * c * GaussianRational(Rational(falling)));
    }
  }
  return out;
}

std::optional<Exponents> Poly4::degrees() const {
  if (terms_.empty()) return std::nullopt;
  Exponents d{0, 0, 0, 0};
  for (const auto& kv : terms_) {
    for (std::size_t v = 0; v < 4; ++v) d[v] = std::max(d[v], kv.first[v]);
  }
  return d;
}

std::uint32_t Poly4::total_degree() const {
  std::uint32_t best = 0;
  for (const auto& kv : terms_) {
    const auto& e = kv.first;
    best = std::max(best, e[0] + e[1] + e[2] + e[3]);
  }
  return best;
}

bool Poly4::depends_on(Var v) const {
  const std::size_t idx = index(v);
  return std::any_of(terms_.begin(), terms_.end(), [idx](const auto& kv) { return kv.first[idx] > 0; });
}

bool Poly4::uses_only(VariablePair pair) const {
  return pair == VariablePair::alpha ? !depends_on(Var::beta) && !depends_on(Var::beta_bar)
                                     : !depends_on(Var::alpha) && !depends_on(Var::alpha_bar);
}

GaussianRational Poly4::evaluate(const std::array<GaussianRational, 4>& point) const {
  GaussianRational sum;
  for (const auto& [e, c] : terms_) {
    GaussianRational term = c;
    for (std::size_t v = 0; v < 4; ++v) {
      if (e[v] > 0) term *= point[v].pow(e[v]);
    }
    sum += term;
  }
  return sum;
}

namespace {

constexpr std::array<const char*, 4> kVarTokens{"a", "ac", "b", "bc"};

std::string monomial_text(const Exponents& e) {
  std::string out;
  for (std::size_t v = 0; v < 4; ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += kVarTokens[v];
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

}  // namespace

std::string to_string(const Poly4& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    const std::string mono = monomial_text(e);
    // A term is emitted as sign + magnitude so the sum reads "x - y".
    bool negative = false;
    std::string body;
    if (mono.empty()) {
      // The constant term sorts first, so it can be printed verbatim.
      out = to_string(c);
      continue;
    }
    if (c.is_real() || sgn(c.re()) == 0) {
      const bool real = c.is_real();
      const Rational& v = real ? c.re() : c.im();
      negative = sgn(v) < 0;
      Rational mag = abs(v);
      std::string scale = mag == 1 ? "" : to_string(mag) + "*";
      body = scale + (real ? "" : "i*") + mono;
    } else {
      body = "(" + to_string(c) + ")*" + mono;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace bcx
