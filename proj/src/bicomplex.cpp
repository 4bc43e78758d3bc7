#include "bcx/bicomplex.hpp"

#include <array>
#include <vector>

#include "bcx/error.hpp"

namespace bcx {

const char* to_string(Conjugation kind) {
  switch (kind) {
    case Conjugation::dagger: return "dagger";
    case Conjugation::tilde: return "tilde";
    case Conjugation::star: return "star";
  }
  return "?";
}

Bicomplex Bicomplex::from_cartesian(const GaussianRational& z1, const GaussianRational& z2) {
  GaussianRational iz2 = GaussianRational::i() * z2;
  return {z1 - iz2, z1 + iz2};
}

Bicomplex Bicomplex::from_units(const Rational& a, const Rational& b, const Rational& c,
                                const Rational& d) {
  return from_cartesian(GaussianRational(a, b), GaussianRational(c, d));
}

Bicomplex Bicomplex::from_hyperbolic(const Hyperbolic& h) {
  return {GaussianRational(h.x_plus), GaussianRational(h.x_minus)};
}

GaussianRational Bicomplex::z1() const {
  GaussianRational s = alpha_ + beta_;
  return {Rational(s.re() / 2), Rational(s.im() / 2)};
}

GaussianRational Bicomplex::z2() const {
  GaussianRational d = GaussianRational::i() * (alpha_ - beta_);
  return {Rational(d.re() / 2), Rational(d.im() / 2)};
}

std::array<Rational, 4> Bicomplex::units() const {
  GaussianRational a = z1();
  GaussianRational b = z2();
  return {a.re(), a.im(), b.re(), b.im()};
}

Bicomplex Bicomplex::conjugate(Conjugation kind) const {
  switch (kind) {
    case Conjugation::dagger: return {beta_, alpha_};
    case Conjugation::tilde: return {beta_.conj(), alpha_.conj()};
    case Conjugation::star: return {alpha_.conj(), beta_.conj()};
  }
  return *this;
}

Bicomplex Bicomplex::inverse() const {
  if (is_null_cone()) {
    throw NullConeError("bicomplex number " + to_string(*this) + " is a zero divisor");
  }
  return {alpha_.inverse(), beta_.inverse()};
}

Bicomplex Bicomplex::pow(unsigned exponent) const {
  return {alpha_.pow(exponent), beta_.pow(exponent)};
}

Bicomplex& Bicomplex::operator+=(const Bicomplex& o) {
  alpha_ += o.alpha_;
  beta_ += o.beta_;
  return *this;
}

Bicomplex& Bicomplex::operator-=(const Bicomplex& o) {
  alpha_ -= o.alpha_;
  beta_ -= o.beta_;
  return *this;
}

Bicomplex& Bicomplex::operator*=(const Bicomplex& o) {
  alpha_ *= o.alpha_;
  beta_ *= o.beta_;
  return *this;
}

Bicomplex& Bicomplex::operator/=(const Rational& r) {
  if (sgn(r) == 0) throw DivisionByZero("bicomplex division by zero");
  GaussianRational inv(Rational(1 / r));
  alpha_ *= inv;
  beta_ *= inv;
  return *this;
}

Predicates predicates(const Bicomplex& z) {
  return {z.is_real(), z.is_hyperbolic(), z.is_null_cone(), z.is_idempotent()};
}

namespace {

// Appends "<sign><|coef|>*<unit>" pieces, e.g. {"1", " + ", "4*k"}.
std::string join_signed_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  for (const auto& [coef, unit] : terms) {
    if (sgn(coef) == 0) continue;
    Rational mag = abs(coef);
    std::string body;
    if (unit.empty()) {
      body = to_string(mag);
    } else {
      body = mag == 1 ? unit : to_string(mag) + "*" + unit;
    }
    if (out.empty()) {
      out = (sgn(coef) < 0 ? "-" : "") + body;
    } else {
      out += (sgn(coef) < 0 ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const Bicomplex& z) {
  auto u = z.units();
  return join_signed_terms({{u[0], ""}, {u[1], "i"}, {u[2], "j"}, {u[3], "k"}});
}

std::string to_idempotent_string(const Bicomplex& z) {
  return to_string(z.alpha()) + " | " + to_string(z.beta());
}

std::string to_string(const Hyperbolic& h) {
  return join_signed_terms({{h.x(), ""}, {h.y(), "k"}});
}

}  // namespace bcx
