#pragma once

#include <array>
#include <string>

#include "bcx/gaussian.hpp"

namespace bcx {

/// The three bicomplex conjugations. In idempotent coordinates (alpha, beta):
///   dagger: (beta, alpha)   tilde: (conj beta, conj alpha)   star: (conj alpha, conj beta)
enum class Conjugation { dagger, tilde, star };

const char* to_string(Conjugation kind);

/// Hyperbolic number x_plus e+ + x_minus e-, equivalently x + y k with
/// x = (x_plus + x_minus)/2 and y = (x_plus - x_minus)/2.
struct Hyperbolic {
  Rational x_plus{0};
  Rational x_minus{0};

  Rational x() const { return (x_plus + x_minus) / 2; }
  Rational y() const { return (x_plus - x_minus) / 2; }

  friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};

/// Exact bicomplex number Z = z1 + j z2 = alpha e+ + beta e-.
///
/// Storage is the idempotent pair (alpha, beta) with alpha = z1 - i z2 and
/// beta = z1 + i z2; multiplication, inversion and every conjugation act
/// componentwise on it. Cartesian (z1, z2) and unit-basis (1, i, j, k)
/// coordinates are derived on demand.
class Bicomplex {
 public:
  Bicomplex() = default;
  Bicomplex(GaussianRational alpha, GaussianRational beta)
      : alpha_(std::move(alpha)), beta_(std::move(beta)) {}
  Bicomplex(long real) : alpha_(real), beta_(real) {}  // NOLINT: integer literals embed

  static Bicomplex from_cartesian(const GaussianRational& z1, const GaussianRational& z2);
  /// a + b i + c j + d k.
  static Bicomplex from_units(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d);
  static Bicomplex from_hyperbolic(const Hyperbolic& h);
  static Bicomplex real(const Rational& r) { return {GaussianRational(r), GaussianRational(r)}; }
  static Bicomplex complex(const GaussianRational& z) { return {z, z}; }

  static Bicomplex unit_i() { return complex(GaussianRational::i()); }
  static Bicomplex unit_j() { return {GaussianRational(0, -1), GaussianRational(0, 1)}; }
  static Bicomplex unit_k() { return {GaussianRational(1), GaussianRational(-1)}; }
  static Bicomplex e_plus() { return {GaussianRational(1), GaussianRational(0)}; }
  static Bicomplex e_minus() { return {GaussianRational(0), GaussianRational(1)}; }

  const GaussianRational& alpha() const { return alpha_; }
  const GaussianRational& beta() const { return beta_; }

  GaussianRational z1() const;
  GaussianRational z2() const;
  /// Coefficients (a, b, c, d) of 1, i, j, k.
  std::array<Rational, 4> units() const;

  Bicomplex conjugate(Conjugation kind) const;
  /// z1^2 + z2^2, which equals alpha * beta.
  GaussianRational det() const { return alpha_ * beta_; }
  /// Throws NullConeError when alpha == 0 or beta == 0.
  Bicomplex inverse() const;
  Bicomplex pow(unsigned exponent) const;

  /// Classical real part (Re alpha + Re beta) / 2.
  Rational real_part() const { return (alpha_.re() + beta_.re()) / 2; }
  /// Hyperbolic real part Re(alpha) e+ + Re(beta) e-.
  Hyperbolic hyperbolic_part() const { return {alpha_.re(), beta_.re()}; }

  bool is_zero() const { return alpha_.is_zero() && beta_.is_zero(); }
  bool is_real() const { return alpha_ == beta_ && alpha_.is_real(); }
  bool is_hyperbolic() const { return alpha_.is_real() && beta_.is_real(); }
  bool is_null_cone() const { return alpha_.is_zero() || beta_.is_zero(); }
  bool is_idempotent() const { return *this * *this == *this; }

  Bicomplex& operator+=(const Bicomplex& o);
  Bicomplex& operator-=(const Bicomplex& o);
  Bicomplex& operator*=(const Bicomplex& o);
  /// Division by a nonzero rational scalar.
  Bicomplex& operator/=(const Rational& r);

  friend Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
  friend Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
  friend Bicomplex operator*(Bicomplex a, const Bicomplex& b) { return a *= b; }
  friend Bicomplex operator/(Bicomplex a, const Rational& r) { return a /= r; }
  Bicomplex operator-() const { return {-alpha_, -beta_}; }

  friend bool operator==(const Bicomplex& a, const Bicomplex& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }
  friend bool operator!=(const Bicomplex& a, const Bicomplex& b) { return !(a == b); }

 private:
  GaussianRational alpha_;
  GaussianRational beta_;
};

struct RealParts {
  Rational re_c;
  Hyperbolic re_hyp;
};

inline RealParts real_parts(const Bicomplex& z) { return {z.real_part(), z.hyperbolic_part()}; }

struct Predicates {
  bool is_real = false;
  bool is_hyperbolic = false;
  bool is_null_cone = false;
  bool is_idempotent = false;
};

Predicates predicates(const Bicomplex& z);

/// Canonical unit-basis text "a + b*i + c*j + d*k" with zero terms omitted.
std::string to_string(const Bicomplex& z);
/// Idempotent text "alpha | beta".
std::string to_idempotent_string(const Bicomplex& z);
std::string to_string(const Hyperbolic& h);

}  // namespace bcx
