#pragma once

#include <string>
#include <utility>

#include "bcx/function.hpp"

namespace bcx {

/// First-order bicomplex Wirtinger derivatives.
enum class Wirtinger { Z, Zstar, Zdagger, Ztilde };

/// Operator conjugations (T^{*op}, T^{dagger op}, T^{~op}).
enum class OpConjugation { star_op, dagger_op, tilde_op };

/// Constant-coefficient differential operator T = T+ e+ + T- e-, acting on
/// f = f+ e+ + f- e- by (T f)+ = T+ f+ and (T f)- = T- f-.
///
/// Each component is stored as its symbol: a Poly4 whose exponents count
/// derivatives in (alpha, conj alpha, beta, conj beta). Composition is symbol
/// multiplication and therefore commutative.
class Operator {
 public:
  Operator() = default;
  Operator(Poly4 plus, Poly4 minus) : plus_(std::move(plus)), minus_(std::move(minus)) {}

  static Operator identity();
  /// Multiplication by the bicomplex constant c.
  static Operator scalar(const Bicomplex& c);
  /// sigma: multiplication by k = ij, i.e. (f+, -f-).
  static Operator sigma() { return scalar(Bicomplex::unit_k()); }
  /// Builds T = A1 + j A2 from its complex parts: T+ = A1 - i A2, T- = A1 + i A2.
  static Operator from_j_parts(const Poly4& a1, const Poly4& a2);

  const Poly4& plus() const { return plus_; }
  const Poly4& minus() const { return minus_; }
  bool is_zero() const { return plus_.is_zero() && minus_.is_zero(); }

  /// (A1, A2) with A1 = (T+ + T-)/2 and A2 = i (T+ - T-)/2.
  std::pair<Poly4, Poly4> j_parts() const;

  Operator conjugate(OpConjugation kind) const;
  Operator pow(unsigned exponent) const { return {plus_.pow(exponent), minus_.pow(exponent)}; }

  BicomplexFunction apply(const BicomplexFunction& f) const;
  BicomplexFunction apply(const BicomplexFunction& f, unsigned times) const;

  friend Operator operator+(const Operator& a, const Operator& b) {
    return {a.plus_ + b.plus_, a.minus_ + b.minus_};
  }
  friend Operator operator-(const Operator& a, const Operator& b) {
    return {a.plus_ - b.plus_, a.minus_ - b.minus_};
  }
  /// Composition.
  friend Operator operator*(const Operator& a, const Operator& b) {
    return {a.plus_ * b.plus_, a.minus_ * b.minus_};
  }
  friend Operator operator*(const Bicomplex& c, const Operator& t) {
    return {t.plus_ * c.alpha(), t.minus_ * c.beta()};
  }
  friend bool operator==(const Operator& a, const Operator& b) {
    return a.plus_ == b.plus_ && a.minus_ == b.minus_;
  }
  friend bool operator!=(const Operator& a, const Operator& b) { return !(a == b); }

 private:
  Poly4 plus_;
  Poly4 minus_;
};

inline Operator compose(const Operator& a, const Operator& b) { return a * b; }

Operator wirtinger(Wirtinger kind);

/// The bicomplex Laplacians Delta_1 ... Delta_7 (Delta_1 is Delta_bc).
/// Throws IndexOutOfRange outside 1..7.
Operator laplacian(int index);

inline BicomplexFunction apply(const Operator& t, const BicomplexFunction& f) { return t.apply(f); }

/// Canonical text "<T+> | <T->" in the derivative tokens da, dac, db, dbc.
std::string to_string(const Operator& t);

}  // namespace bcx
