#include "bcx/function.hpp"

namespace bcx {

BicomplexFunction BicomplexFunction::constant(const Bicomplex& c) {
  return {Poly4::constant(c.alpha()), Poly4::constant(c.beta())};
}

BicomplexFunction BicomplexFunction::identity() {
  return {Poly4::variable(Var::alpha), Poly4::variable(Var::beta)};
}

BicomplexFunction& BicomplexFunction::operator+=(const BicomplexFunction& o) {
  plus_ += o.plus_;
  minus_ += o.minus_;
  return *this;
}

BicomplexFunction& BicomplexFunction::operator-=(const BicomplexFunction& o) {
  plus_ -= o.plus_;
  minus_ -= o.minus_;
  return *this;
}

BicomplexFunction& BicomplexFunction::operator*=(const BicomplexFunction& o) {
  plus_ *= o.plus_;
  minus_ *= o.minus_;
  return *this;
}

BicomplexFunction& BicomplexFunction::operator*=(const Bicomplex& c) {
  plus_ *= c.alpha();
  minus_ *= c.beta();
  return *this;
}

BicomplexFunction BicomplexFunction::conjugate(Conjugation kind) const {
  switch (kind) {
    case Conjugation::dagger: return {minus_, plus_};
    case Conjugation::tilde: return {minus_.bar(), plus_.bar()};
    case Conjugation::star: return {plus_.bar(), minus_.bar()};
  }
  return *this;
}

Bicomplex BicomplexFunction::evaluate(const Bicomplex& z) const {
  const std::array<GaussianRational, 4> point{z.alpha(), z.alpha().conj(), z.beta(), z.beta().conj()};
  return {plus_.evaluate(point), minus_.evaluate(point)};
}

BicomplexFunction BicomplexFunction::hyperbolic_part() const {
  const GaussianRational half(make_rational(1, 2));
  return {(plus_ + plus_.bar()) * half, (minus_ + minus_.bar()) * half};
}

BicomplexFunction BicomplexFunction::real_part() const {
  const GaussianRational quarter(make_rational(1, 4));
  Poly4 sum = plus_ + minus_;
  sum += sum.bar();
  sum *= quarter;
  return {sum, sum};
}

std::string to_string(const BicomplexFunction& f) {
  return to_string(f.plus()) + " | " + to_string(f.minus());
}

}  // namespace bcx
