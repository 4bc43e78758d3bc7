#pragma once

#include <optional>
#include <string>

#include "bcx/bicomplex.hpp"
#include "bcx/poly.hpp"

namespace bcx {

/// Polynomial bicomplex-valued function f = f+ e+ + f- e-, each component a
/// polynomial in (alpha, conj alpha, beta, conj beta).
class BicomplexFunction {
 public:
  BicomplexFunction() = default;
  BicomplexFunction(Poly4 plus, Poly4 minus) : plus_(std::move(plus)), minus_(std::move(minus)) {}

  static BicomplexFunction constant(const Bicomplex& c);
  /// The same complex-valued polynomial in both components.
  static BicomplexFunction scalar(const Poly4& p) { return {p, p}; }
  /// The identity function Z = alpha e+ + beta e-.
  static BicomplexFunction identity();

  const Poly4& plus() const { return plus_; }
  const Poly4& minus() const { return minus_; }
  bool is_zero() const { return plus_.is_zero() && minus_.is_zero(); }

  BicomplexFunction& operator+=(const BicomplexFunction& o);
  BicomplexFunction& operator-=(const BicomplexFunction& o);
  BicomplexFunction& operator*=(const BicomplexFunction& o);
  BicomplexFunction& operator*=(const Bicomplex& c);

  friend BicomplexFunction operator+(BicomplexFunction a, const BicomplexFunction& b) { return a += b; }
  friend BicomplexFunction operator-(BicomplexFunction a, const BicomplexFunction& b) { return a -= b; }
  friend BicomplexFunction operator*(BicomplexFunction a, const BicomplexFunction& b) { return a *= b; }
  friend BicomplexFunction operator*(BicomplexFunction a, const Bicomplex& c) { return a *= c; }
  friend BicomplexFunction operator*(const Bicomplex& c, BicomplexFunction a) { return a *= c; }
  BicomplexFunction operator-() const { return {-plus_, -minus_}; }

  friend bool operator==(const BicomplexFunction& a, const BicomplexFunction& b) {
    return a.plus_ == b.plus_ && a.minus_ == b.minus_;
  }
  friend bool operator!=(const BicomplexFunction& a, const BicomplexFunction& b) { return !(a == b); }

  BicomplexFunction pow(unsigned exponent) const { return {plus_.pow(exponent), minus_.pow(exponent)}; }

  /// Pointwise value conjugation: conjugate(f, k)(Z) == conjugate(f(Z), k).
  BicomplexFunction conjugate(Conjugation kind) const;

  Bicomplex evaluate(const Bicomplex& z) const;

  /// (f + f*) / 2.
  BicomplexFunction hyperbolic_part() const;
  /// (f + f^dagger + f~ + f*) / 4.
  BicomplexFunction real_part() const;

  bool is_hyperbolic_valued() const { return plus_.is_real_valued() && minus_.is_real_valued(); }
  bool is_real_valued() const { return is_hyperbolic_valued() && plus_ == minus_; }

  std::uint32_t total_degree() const { return std::max(plus_.total_degree(), minus_.total_degree()); }

 private:
  Poly4 plus_;
  Poly4 minus_;
};

struct FunctionRealParts {
  BicomplexFunction re_hyp;
  BicomplexFunction re_c;
};

inline FunctionRealParts real_parts(const BicomplexFunction& f) {
  return {f.hyperbolic_part(), f.real_part()};
}

struct FunctionDegrees {
  std::optional<Exponents> plus;
  std::optional<Exponents> minus;
};

inline FunctionDegrees degrees(const BicomplexFunction& f) {
  return {f.plus().degrees(), f.minus().degrees()};
}

/// Canonical idempotent-component text "<plus> | <minus>".
std::string to_string(const BicomplexFunction& f);

}  // namespace bcx
