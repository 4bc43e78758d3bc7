#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "bcx/function.hpp"
#include "bcx/operators.hpp"

namespace bcx {

/// Seeded generator with a portable bounded draw, so that a seed produces
/// the same stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t fnv1a64(std::string_view text);

struct GenConfig {
  std::uint32_t max_degree = 4;
  std::uint32_t coeff_bound = 9;
  std::uint32_t max_terms = 4;
};

Rational random_rational(Rng& rng, std::uint32_t bound);
GaussianRational random_gaussian(Rng& rng, std::uint32_t bound);
GaussianRational random_nonzero_gaussian(Rng& rng, std::uint32_t bound);
Bicomplex random_bicomplex(Rng& rng, std::uint32_t bound);

/// Exponent caps for the four variables of a generated polynomial.
using DegreeCaps = std::array<std::uint32_t, 4>;

/// Between 0 and cfg.max_terms independent monomials with exponents up to
/// the caps (inclusive).
Poly4 random_poly(Rng& rng, const GenConfig& cfg, const DegreeCaps& caps);
Poly4 random_poly(Rng& rng, const GenConfig& cfg);
BicomplexFunction random_function(Rng& rng, const GenConfig& cfg);
/// Symbols of total order at most 3 in each component.
Operator random_operator(Rng& rng, const GenConfig& cfg);

/// f+ in alpha only, f- in beta only. With `real_constant`, the constant
/// terms are real, so the hyperbolic imaginary part of f(0) vanishes.
BicomplexFunction random_holomorphic(Rng& rng, const GenConfig& cfg, bool real_constant);

/// Real-valued polynomial in one variable pair with both exponents up to cap.
Poly4 random_real_valued(Rng& rng, const GenConfig& cfg, VariablePair pair, std::uint32_t cap);

/// f in A^[1]_{m,n}: f+ in (alpha, conj alpha) with conj alpha degree
/// exactly m - 1, f- in (beta, conj beta) with conj beta degree exactly
/// n - 1 (m or n may be 0 for a zero component). A forced top monomial
/// alpha^p conj(alpha)^(m-1) with p >= m - 1 keeps the sample generic.
/// With `normalized`, no monomial has a larger conjugate than holomorphic
/// power and diagonal coefficients are real.
BicomplexFunction random_first_kind(Rng& rng, const GenConfig& cfg, std::uint32_t m, std::uint32_t n,
                                    bool normalized);

/// f with polyholomorphic signature exactly (m, n, k), all positive. Carries
/// the forced monomial alpha^(m-1) conj(alpha)^(m-1) beta^(k-1) conj(beta)^(n-1)
/// in f+ with a coefficient of nonzero real part.
BicomplexFunction random_with_signature(Rng& rng, const GenConfig& cfg, std::uint32_t m, std::uint32_t n,
                                        std::uint32_t k);

/// Hyperbolic-valued F with dZdagger^n F = dZtilde^k F = 0, built as
///   F+ = sum a_{l1 l2}(alpha, conj alpha) beta^l1 conj(beta)^l2,
///   F- = sum b_{l1 l2}(beta, conj beta) alpha^l1 conj(alpha)^l2
/// over l1, l2 < min(n, k). With `real_coefficients` every a and b is
/// real-valued and symmetric in (l1, l2); otherwise one off-diagonal pair of
/// a carries a non-real R and conj(R), which needs min(n, k) >= 2.
BicomplexFunction random_main_input(Rng& rng, const GenConfig& cfg, std::uint32_t n, std::uint32_t k,
                                    bool real_coefficients);

}  // namespace bcx
