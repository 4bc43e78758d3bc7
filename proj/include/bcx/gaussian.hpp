#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bcx {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Build a canonical rational p/q. Throws DivisionByZero when q == 0.
Rational make_rational(long p, long q = 1);

/// Parses "p" or "p/q" (decimal integers, optional leading '-').
Rational parse_rational(const std::string& text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

/// Exact complex number re + im*i with rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = 0);  // NOLINT: implicit from rationals is intended
  GaussianRational(long re, long im = 0);           // NOLINT

  static GaussianRational i() { return GaussianRational(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  /// Multiplicative inverse; throws DivisionByZero for zero.
  GaussianRational inverse() const;
  GaussianRational pow(unsigned exponent) const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Canonical text: "3", "-1/2*i", "1 - 2*i".
std::string to_string(const GaussianRational& z);

}  // namespace bcx
