#include "bcx/gaussian.hpp"

#include <cctype>

#include "bcx/error.hpp"

namespace bcx {

Rational make_rational(long p, long q) {
  if (q == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw Error("InvalidRational", "not a rational literal: '" + text + "'");
  }
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw DivisionByZero("rational with zero denominator: '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational::GaussianRational(long re, long im) : re_(re), im_(im) {}

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw DivisionByZero("inverse of zero Gaussian rational");
  return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational GaussianRational::pow(unsigned exponent) const {
  GaussianRational result(1);
  GaussianRational base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

std::string to_string(const GaussianRational& z) {
  const Rational& re = z.re();
  const Rational& im = z.im();
  if (sgn(im) == 0) return to_string(re);

  auto imag_term = [](const Rational& v) {
    Rational mag = abs(v);
    return mag == 1 ? std::string("i") : to_string(mag) + "*i";
  };
  if (sgn(re) == 0) return (sgn(im) < 0 ? "-" : "") + imag_term(im);
  return to_string(re) + (sgn(im) < 0 ? " - " : " + ") + imag_term(im);
}

}  // namespace bcx
