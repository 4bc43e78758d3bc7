#include "bcx/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcx {

std::uint64_t Rng::below(std::uint64_t n) {
  // Rejection keeps the draw uniform; std::uniform_int_distribution is
  // implementation-defined and would break cross-platform seeds.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Rational random_rational(Rng& rng, std::uint32_t bound) {
  if (bound == 0) return 0;
  const long b = static_cast<long>(bound);
  Rational r(rng.between(-b, b), rng.between(1, b));
  r.canonicalize();
  return r;
}

GaussianRational random_gaussian(Rng& rng, std::uint32_t bound) {
  Rational re = random_rational(rng, bound);
  Rational im = rng.below(3) == 0 ? Rational(0) : random_rational(rng, bound);
  return {re, im};
}

GaussianRational random_nonzero_gaussian(Rng& rng, std::uint32_t bound) {
  if (bound == 0) return GaussianRational(1);
  for (;;) {
    GaussianRational z = random_gaussian(rng, bound);
    if (!z.is_zero()) return z;
  }
}

Bicomplex random_bicomplex(Rng& rng, std::uint32_t bound) {
  return {random_gaussian(rng, bound), random_gaussian(rng, bound)};
}

Poly4 random_poly(Rng& rng, const GenConfig& cfg, const DegreeCaps& caps) {
  Poly4 p;
  const auto terms = rng.below(cfg.max_terms + 1);
  for (std::uint64_t t = 0; t < terms; ++t) {
    Exponents e{};
    for (std::size_t v = 0; v < 4; ++v) e[v] = static_cast<std::uint32_t>(rng.below(caps[v] + 1));
    p.add_term(e, random_nonzero_gaussian(rng, cfg.coeff_bound));
  }
  return p;
}

Poly4 random_poly(Rng& rng, const GenConfig& cfg) {
  const auto d = cfg.max_degree;
  return random_poly(rng, cfg, {d, d, d, d});
}

BicomplexFunction random_function(Rng& rng, const GenConfig& cfg) {
  Poly4 plus = random_poly(rng, cfg);
  Poly4 minus = random_poly(rng, cfg);
  return {std::move(plus), std::move(minus)};
}

namespace {

Poly4 random_symbol(Rng& rng, const GenConfig& cfg) {
  Poly4 p;
  const auto terms = rng.below(cfg.max_terms + 1);
  for (std::uint64_t t = 0; t < terms; ++t) {
    Exponents e{};
    const auto order = rng.below(4);
    for (std::uint64_t s = 0; s < order; ++s) ++e[rng.below(4)];
    p.add_term(e, random_nonzero_gaussian(rng, cfg.coeff_bound));
  }
  return p;
}

// Random polynomial in one variable of the pair given by `slot`.
Poly4 random_univariate(Rng& rng, const GenConfig& cfg, std::size_t slot) {
  DegreeCaps caps{0, 0, 0, 0};
  caps[slot] = cfg.max_degree;
  return random_poly(rng, cfg, caps);
}

void make_constant_real(Poly4& p) {
  const GaussianRational c = p.coefficient({0, 0, 0, 0});
  if (!c.is_real()) p.add_term({0, 0, 0, 0}, GaussianRational(0, -c.im()));
}

GaussianRational nonzero_real_part(Rng& rng, std::uint32_t bound, bool real_only) {
  for (;;) {
    GaussianRational c = real_only ? GaussianRational(random_rational(rng, bound)) : random_gaussian(rng, bound);
    if (sgn(c.re()) != 0) return c;
    if (bound == 0) return GaussianRational(1);
  }
}

Exponents pair_exponents(VariablePair pair, std::uint32_t holo, std::uint32_t anti) {
  return pair == VariablePair::alpha ? Exponents{holo, anti, 0, 0} : Exponents{0, 0, holo, anti};
}

Poly4 first_kind_component(Rng& rng, const GenConfig& cfg, VariablePair pair, std::uint32_t order,
                           bool normalized) {
  Poly4 p;
  if (order == 0) return p;
  const std::uint32_t top = order - 1;
  const std::uint32_t forced_holo =
      top + static_cast<std::uint32_t>(rng.below(std::max(cfg.max_degree, top) - top + 1));
  const Exponents forced = pair_exponents(pair, forced_holo, top);
  const auto terms = rng.below(cfg.max_terms + 1);
  for (std::uint64_t t = 0; t < terms; ++t) {
    const auto anti = static_cast<std::uint32_t>(rng.below(order));
    auto holo = static_cast<std::uint32_t>(rng.below(cfg.max_degree + 1));
    if (normalized) holo = anti + static_cast<std::uint32_t>(rng.below(std::max(cfg.max_degree, anti) - anti + 1));
    const Exponents e = pair_exponents(pair, holo, anti);
    if (e == forced) continue;
    GaussianRational c = random_nonzero_gaussian(rng, cfg.coeff_bound);
    if (normalized && holo == anti) c = GaussianRational(c.re());
    p.add_term(e, c);
  }
  p.add_term(forced, nonzero_real_part(rng, cfg.coeff_bound, normalized && forced_holo == top));
  return p;
}

}  // namespace

Operator random_operator(Rng& rng, const GenConfig& cfg) {
  Poly4 plus = random_symbol(rng, cfg);
  Poly4 minus = random_symbol(rng, cfg);
  return {std::move(plus), std::move(minus)};
}

BicomplexFunction random_holomorphic(Rng& rng, const GenConfig& cfg, bool real_constant) {
  Poly4 plus = random_univariate(rng, cfg, index(Var::alpha));
  Poly4 minus = random_univariate(rng, cfg, index(Var::beta));
  if (real_constant) {
    make_constant_real(plus);
    make_constant_real(minus);
  }
  return {std::move(plus), std::move(minus)};
}

Poly4 random_real_valued(Rng& rng, const GenConfig& cfg, VariablePair pair, std::uint32_t cap) {
  DegreeCaps caps{0, 0, 0, 0};
  if (pair == VariablePair::alpha) {
    caps[0] = caps[1] = cap;
  } else {
    caps[2] = caps[3] = cap;
  }
  Poly4 u = random_poly(rng, cfg, caps);
  return (u + u.bar()) * GaussianRational(Rational(1, 2));
}

BicomplexFunction random_first_kind(Rng& rng, const GenConfig& cfg, std::uint32_t m, std::uint32_t n,
                                    bool normalized) {
  Poly4 plus = first_kind_component(rng, cfg, VariablePair::alpha, m, normalized);
  Poly4 minus = first_kind_component(rng, cfg, VariablePair::beta, n, normalized);
  return {std::move(plus), std::move(minus)};
}

BicomplexFunction random_with_signature(Rng& rng, const GenConfig& cfg, std::uint32_t m, std::uint32_t n,
                                        std::uint32_t k) {
  if (m == 0 || n == 0 || k == 0) throw std::invalid_argument("signature entries must be positive");
  const std::uint32_t d = cfg.max_degree;
  const Exponents forced{m - 1, m - 1, k - 1, n - 1};
  const Poly4 drawn = random_poly(rng, cfg, {d, m - 1, k - 1, n - 1});
  Poly4 plus;
  for (const auto& [e, c] : drawn.terms()) {
    if (e != forced) plus.add_term(e, c);
  }
  plus.add_term(forced, nonzero_real_part(rng, cfg.coeff_bound, false));
  Poly4 minus = random_poly(rng, cfg, {k - 1, n - 1, d, m - 1});
  return {std::move(plus), std::move(minus)};
}

BicomplexFunction random_main_input(Rng& rng, const GenConfig& cfg, std::uint32_t n, std::uint32_t k,
                                    bool real_coefficients) {
  const std::uint32_t s = std::min(n, k);
  if (!real_coefficients && s < 2) throw std::invalid_argument("non-real coefficients need min(n, k) >= 2");
  const std::uint32_t cap = std::max<std::uint32_t>(1, cfg.max_degree / 2);

  auto build = [&](VariablePair own, bool force_non_real) {
    const VariablePair other = own == VariablePair::alpha ? VariablePair::beta : VariablePair::alpha;
    Poly4 out;
    std::uint32_t skip1 = s;
    std::uint32_t skip2 = s;
    if (force_non_real) {
      skip1 = static_cast<std::uint32_t>(rng.below(s - 1));
      skip2 = skip1 + 1 + static_cast<std::uint32_t>(rng.below(s - 1 - skip1));
      Poly4 r;
      do {
        r = random_poly(rng, cfg, own == VariablePair::alpha ? DegreeCaps{cap, cap, 0, 0} : DegreeCaps{0, 0, cap, cap});
      } while (r == r.bar());
      out += r * Poly4::monomial(pair_exponents(other, skip1, skip2));
      out += r.bar() * Poly4::monomial(pair_exponents(other, skip2, skip1));
    }
    for (std::uint32_t l1 = 0; l1 < s; ++l1) {
      for (std::uint32_t l2 = l1; l2 < s; ++l2) {
        if (l1 == skip1 && l2 == skip2) continue;
        if (rng.coin()) continue;
        Poly4 a = random_real_valued(rng, cfg, own, cap);
        out += a * Poly4::monomial(pair_exponents(other, l1, l2));
        if (l1 != l2) out += a * Poly4::monomial(pair_exponents(other, l2, l1));
      }
    }
    return out;
  };
  Poly4 plus = build(VariablePair::alpha, !real_coefficients);
  Poly4 minus = build(VariablePair::beta, false);
  return {std::move(plus), std::move(minus)};
}

}  // namespace bcx
