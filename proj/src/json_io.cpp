#include "bcx/json_io.hpp"

#include <algorithm>
#include <limits>

#include "bcx/error.hpp"

namespace bcx {

namespace {

std::string integer_string(const mpz_class& z) { return z.get_str(10); }

// Canonical decimal integer: optional '-', no leading zeros, no "-0".
mpz_class integer_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) throw JsonFormatError(path, "expected a decimal integer string");
  const auto& s = j.get_ref<const std::string&>();
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw JsonFormatError(path, "empty integer");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw JsonFormatError(path, "invalid digit in \"" + s + "\"");
  }
  if (s[start] == '0' && (s.size() - start > 1 || start == 1)) {
    throw JsonFormatError(path, "non-canonical integer \"" + s + "\"");
  }
  return mpz_class(s, 10);
}

Rational rational_from_json(const Json& num, const Json& den, const std::string& path, std::size_t at) {
  mpz_class n = integer_from_json(num, path + "[" + std::to_string(at) + "]");
  mpz_class d = integer_from_json(den, path + "[" + std::to_string(at + 1) + "]");
  if (sgn(d) <= 0) throw JsonFormatError(path + "[" + std::to_string(at + 1) + "]", "denominator must be positive");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) throw JsonFormatError(path, "fraction not in lowest terms");
  Rational r(n, d);
  return r;
}

void require_array(const Json& j, std::size_t size, const std::string& path) {
  if (!j.is_array()) throw JsonFormatError(path, "expected an array");
  if (j.size() != size) {
    throw JsonFormatError(path, "expected " + std::to_string(size) + " elements, got " + std::to_string(j.size()));
  }
}

void require_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& path) {
  if (!j.is_object()) throw JsonFormatError(path, "expected an object");
  for (const char* k : keys) {
    if (!j.contains(k)) throw JsonFormatError(path, std::string("missing key \"") + k + "\"");
  }
  for (const auto& [k, v] : j.items()) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* x) { return k == x; }) == keys.end()) {
      throw JsonFormatError(path, "unexpected key \"" + k + "\"");
    }
  }
}

std::string key_of(std::initializer_list<std::uint32_t> idx) {
  std::string out;
  for (auto v : idx) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

bool is_constant(const BicomplexFunction& f) {
  auto only_constant = [](const Poly4& p) {
    return p.is_zero() || (p.size() == 1 && p.terms().begin()->first == Exponents{0, 0, 0, 0});
  };
  return only_constant(f.plus()) && only_constant(f.minus());
}

}  // namespace

Json to_json(const GaussianRational& z) {
  return Json::array({integer_string(z.re().get_num()), integer_string(z.re().get_den()),
                      integer_string(z.im().get_num()), integer_string(z.im().get_den())});
}

Json to_json(const Bicomplex& z) {
  Json out = to_json(z.alpha());
  for (auto& v : to_json(z.beta())) out.push_back(v);
  return out;
}

Json to_json(const Poly4& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e[0], e[1], e[2], e[3], to_json(c)}));
  return out;
}

Json to_json(const BicomplexFunction& f) { return {{"plus", to_json(f.plus())}, {"minus", to_json(f.minus())}}; }

Json to_json(const Operator& t) { return {{"op_plus", to_json(t.plus())}, {"op_minus", to_json(t.minus())}}; }

Json to_json(const Signature& s) { return Json::array({s.m, s.n, s.k}); }

Json to_json(const ClassReport& report) {
  Json orders = Json::object();
  for (std::size_t i = 0; i < report.laplacian_orders.size(); ++i) {
    orders["d" + std::to_string(i + 1)] = report.laplacian_orders[i];
  }
  Json a1 = report.a1_orders ? Json::array({report.a1_orders->first, report.a1_orders->second}) : Json(nullptr);
  Json zstar = report.zstar_order ? Json(*report.zstar_order) : Json(nullptr);
  return {{"signature", to_json(report.signature)},
          {"bc_holomorphic", report.is_bc_holomorphic},
          {"a1", a1},
          {"zstar_order", zstar},
          {"orders", orders}};
}

GaussianRational gaussian_from_json(const Json& j, const std::string& path) {
  require_array(j, 4, path);
  return {rational_from_json(j[0], j[1], path, 0), rational_from_json(j[2], j[3], path, 2)};
}

Bicomplex bicomplex_from_json(const Json& j, const std::string& path) {
  require_array(j, 8, path);
  return {GaussianRational(rational_from_json(j[0], j[1], path, 0), rational_from_json(j[2], j[3], path, 2)),
          GaussianRational(rational_from_json(j[4], j[5], path, 4), rational_from_json(j[6], j[7], path, 6))};
}

Poly4 poly_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw JsonFormatError(path, "expected a term list");
  Poly4::Terms terms;
  std::optional<Exponents> previous;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tp = path + "[" + std::to_string(t) + "]";
    require_array(j[t], 5, tp);
    Exponents e{};
    for (std::size_t v = 0; v < 4; ++v) {
      const Json& x = j[t][v];
      if (!x.is_number_unsigned() || x.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max()) {
        throw JsonFormatError(tp + "[" + std::to_string(v) + "]", "expected a nonnegative exponent");
      }
      e[v] = x.get<std::uint32_t>();
    }
    if (previous && !(*previous < e)) throw JsonFormatError(tp, "terms must be strictly increasing by exponent");
    GaussianRational c = gaussian_from_json(j[t][4], tp + "[4]");
    if (c.is_zero()) throw JsonFormatError(tp + "[4]", "zero coefficient");
    terms.emplace(e, c);
    previous = e;
  }
  return Poly4(std::move(terms));
}

BicomplexFunction function_from_json(const Json& j, const std::string& path) {
  require_keys(j, {"plus", "minus"}, path);
  return {poly_from_json(j["plus"], path + ".plus"), poly_from_json(j["minus"], path + ".minus")};
}

Operator operator_from_json(const Json& j, const std::string& path) {
  require_keys(j, {"op_plus", "op_minus"}, path);
  return {poly_from_json(j["op_plus"], path + ".op_plus"), poly_from_json(j["op_minus"], path + ".op_minus")};
}

std::string dump(const Json& j) { return j.dump(); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw JsonFormatError("$", e.what());
  }
}

Json encode(const Bicomplex& z, ValueEncoding enc) {
  return enc == ValueEncoding::text ? Json(to_string(z)) : to_json(z);
}

Json encode(const BicomplexFunction& f, ValueEncoding enc) {
  if (enc == ValueEncoding::exact) return to_json(f);
  if (is_constant(f)) return to_string(f.evaluate(Bicomplex()));
  return to_string(f);
}

Json encode(const Operator& t, ValueEncoding enc) {
  return enc == ValueEncoding::text ? Json(to_string(t)) : to_json(t);
}

Json encode(const ConjugateExpansion& e, ValueEncoding enc) {
  Json out = Json::object();
  for (const auto& [idx, h] : e.coeffs) out[key_of({idx[0], idx[1], idx[2]})] = encode(h, enc);
  return out;
}

Json encode_zstar(const std::vector<BicomplexFunction>& parts, ValueEncoding enc) {
  Json out = Json::object();
  for (std::size_t k = 0; k < parts.size(); ++k) out[std::to_string(k)] = encode(parts[k], enc);
  return out;
}

Json encode(const ComplexAlmansi& a, ValueEncoding enc) {
  Json out = Json::object();
  for (std::size_t k = 0; k < a.parts.size(); ++k) {
    out[std::to_string(k)] = enc == ValueEncoding::text ? Json(to_string(a.parts[k])) : to_json(a.parts[k]);
  }
  return out;
}

Json encode(const BicomplexAlmansi& a, ValueEncoding enc) { return encode_zstar(a.parts, enc); }

Json encode(const FirstKindInversion& inv, ValueEncoding enc) {
  return {{"f", encode(inv.f, enc)}, {"r", inv.r}, {"s", inv.s}};
}

Json encode(const MainDecomposition& d, ValueEncoding enc) {
  Json g = Json::object();
  for (const auto& [idx, piece] : d.g) g[key_of({idx[0], idx[1]})] = encode(piece, enc);
  Json f = nullptr;
  if (d.refined) {
    f = Json::object();
    for (const auto& [idx, piece] : *d.refined) f[key_of({idx[0], idx[1]})] = encode(piece, enc);
  }
  Json non_real = Json::array();
  for (const auto& nr : d.non_real) {
    non_real.push_back({{"index", Json::array({nr.index[0], nr.index[1]})}, {"component", std::string(1, nr.component)}});
  }
  return {{"n", d.n}, {"k", d.k}, {"G", g}, {"f", f}, {"non_real", non_real}};
}

}  // namespace bcx
