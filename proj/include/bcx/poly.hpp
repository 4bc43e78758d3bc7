#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "bcx/gaussian.hpp"

namespace bcx {

/// Variables of a component polynomial, in storage order.
enum class Var : std::size_t { alpha = 0, alpha_bar = 1, beta = 2, beta_bar = 3 };

/// Exponents of (alpha, conj alpha, beta, conj beta).
using Exponents = std::array<std::uint32_t, 4>;

/// Which conjugate pair a one-pair polynomial lives in.
enum class VariablePair { alpha, beta };

/// Sparse polynomial in (alpha, conj alpha, beta, conj beta) with Gaussian
/// rational coefficients. No zero coefficient is ever stored, so the zero
/// polynomial is exactly the empty map. Terms iterate in lexicographic
/// exponent order.
///
/// The same type serves as the symbol of a constant-coefficient
/// differential operator, where the exponents count partial derivatives.
class Poly4 {
 public:
  using Terms = std::map<Exponents, GaussianRational>;

  Poly4() = default;
  explicit Poly4(Terms terms);

  static Poly4 constant(const GaussianRational& c);
  static Poly4 monomial(const Exponents& e, const GaussianRational& c = GaussianRational(1));
  static Poly4 variable(Var v);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coefficient(const Exponents& e) const;

  /// Adds c * monomial(e), dropping the entry if it cancels.
  void add_term(const Exponents& e, const GaussianRational& c);

  Poly4& operator+=(const Poly4& o);
  Poly4& operator-=(const Poly4& o);
  Poly4& operator*=(const Poly4& o);
  Poly4& operator*=(const GaussianRational& c);

  friend Poly4 operator+(Poly4 a, const Poly4& b) { return a += b; }
  friend Poly4 operator-(Poly4 a, const Poly4& b) { return a -= b; }
  friend Poly4 operator*(const Poly4& a, const Poly4& b);
  friend Poly4 operator*(Poly4 a, const GaussianRational& c) { return a *= c; }
  friend Poly4 operator*(const GaussianRational& c, Poly4 a) { return a *= c; }
  Poly4 operator-() const;

  friend bool operator==(const Poly4& a, const Poly4& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly4& a, const Poly4& b) { return !(a == b); }

  Poly4 pow(unsigned exponent) const;

  /// Pointwise complex conjugate: conjugates coefficients and swaps the
  /// exponents of alpha <-> conj alpha and beta <-> conj beta.
  Poly4 bar() const;
  /// bar() == *this, i.e. the polynomial is real-valued everywhere.
  bool is_real_valued() const;

  /// Exact partial derivative of the given order.
  Poly4 derivative(Var v, unsigned order = 1) const;
  /// Applies the differential operator whose symbol is `symbol`.
  Poly4 apply_operator(const Poly4& symbol) const;

  /// Per-variable maximum exponents; nullopt for the zero polynomial.
  std::optional<Exponents> degrees() const;
  /// Largest exponent sum over all terms, 0 for the zero polynomial.
  std::uint32_t total_degree() const;
  bool depends_on(Var v) const;
  /// True when every term only uses the variables of `pair`.
  bool uses_only(VariablePair pair) const;

  GaussianRational evaluate(const std::array<GaussianRational, 4>& point) const;

 private:
  Terms terms_;
};

/// Canonical text in the tokens a, ac, b, bc, e.g. "1 + (2 - i)*a*bc^2".
std::string to_string(const Poly4& p);

inline std::size_t index(Var v) { return static_cast<std::size_t>(v); }

}  // namespace bcx
