#include "bcx/operators.hpp"

#include "bcx/error.hpp"

namespace bcx {

namespace {

Poly4 d(Var v) { return Poly4::variable(v); }

}  // namespace

Operator Operator::identity() { return scalar(Bicomplex(1)); }

Operator Operator::scalar(const Bicomplex& c) {
  return {Poly4::constant(c.alpha()), Poly4::constant(c.beta())};
}

Operator Operator::from_j_parts(const Poly4& a1, const Poly4& a2) {
  Poly4 ia2 = a2 * GaussianRational::i();
  return {a1 - ia2, a1 + ia2};
}

std::pair<Poly4, Poly4> Operator::j_parts() const {
  const Rational half = make_rational(1, 2);
  return {(plus_ + minus_) * GaussianRational(half), (plus_ - minus_) * GaussianRational(0, half)};
}

Operator Operator::conjugate(OpConjugation kind) const {
  switch (kind) {
    case OpConjugation::star_op: return {plus_.bar(), minus_.bar()};
    case OpConjugation::dagger_op: return {minus_, plus_};
    case OpConjugation::tilde_op: return {minus_.bar(), plus_.bar()};
  }
  return *this;
}

BicomplexFunction Operator::apply(const BicomplexFunction& f) const {
  return {f.plus().apply_operator(plus_), f.minus().apply_operator(minus_)};
}

BicomplexFunction Operator::apply(const BicomplexFunction& f, unsigned times) const {
  BicomplexFunction out = f;
  for (unsigned t = 0; t < times && !out.is_zero(); ++t) out = apply(out);
  return out;
}

Operator wirtinger(Wirtinger kind) {
  switch (kind) {
    case Wirtinger::Z: return {d(Var::alpha), d(Var::beta)};
    case Wirtinger::Zstar: return {d(Var::alpha_bar), d(Var::beta_bar)};
    case Wirtinger::Zdagger: return {d(Var::beta), d(Var::alpha)};
    case Wirtinger::Ztilde: return {d(Var::beta_bar), d(Var::alpha_bar)};
  }
  return {};
}

Operator laplacian(int index) {
  const Operator dz = wirtinger(Wirtinger::Z);
  const Operator dzs = wirtinger(Wirtinger::Zstar);
  const Operator dzd = wirtinger(Wirtinger::Zdagger);
  const Operator dzt = wirtinger(Wirtinger::Ztilde);
  switch (index) {
    case 1: return dz * dzs;
    case 2: return dz * dzd;
    case 3: return dz * dzt;
    case 4: return dzs * dzd;
    case 5: return dzs * dzt;
    case 6: return dzd * dzt;
    case 7: return dz * dzs + dzd * dzt;
    default:
      throw IndexOutOfRange("Laplacian index must be in 1..7, got " + std::to_string(index));
  }
}

std::string to_string(const Operator& t) {
  auto render = [](const Poly4& p) {
    std::string s = to_string(p);
    // Reuse the polynomial printer, renaming variables to derivative tokens.
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const bool starts_token = (s[i] == 'a' || s[i] == 'b') && (i == 0 || s[i - 1] == '*' ||
                                                                 s[i - 1] == ' ' || s[i - 1] == '-');
      if (starts_token) out += 'd';
      out += s[i];
    }
    return out;
  };
  return render(t.plus()) + " | " + render(t.minus());
}

}  // namespace bcx
