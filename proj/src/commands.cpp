#include "bcx/commands.hpp"

#include <algorithm>
#include <iterator>
#include <regex>

#include "bcx/classify.hpp"
#include "bcx/decompose.hpp"
#include "bcx/expr.hpp"

namespace bcx {

BicomplexFunction read_function(const std::string& text, const CommandOptions& opts) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return function_from_json(parse_json(text));
  ParseOptions po;
  po.raw_idempotent = opts.raw_idempotent;
  return parse(text, po);
}

OperatorSpec parse_operator_spec(const std::string& spec) {
  static const std::regex pattern(R"(^(dZs|dZd|dZt|dZ|d[1-7])(\^([0-9]{1,4}))?$)");
  std::smatch m;
  if (!std::regex_match(spec, m, pattern)) {
    throw Error("InvalidOperator", "unknown operator '" + spec +
                                       "'; expected dZ, dZs, dZd, dZt or d1..d7, optionally followed by ^power");
  }
  OperatorSpec out;
  out.power = m[3].matched ? static_cast<unsigned>(std::stoul(m[3].str())) : 1;
  const std::string base = m[1].str();
  if (base == "dZ") {
    out.base = wirtinger(Wirtinger::Z);
  } else if (base == "dZs") {
    out.base = wirtinger(Wirtinger::Zstar);
  } else if (base == "dZd") {
    out.base = wirtinger(Wirtinger::Zdagger);
  } else if (base == "dZt") {
    out.base = wirtinger(Wirtinger::Ztilde);
  } else {
    out.base = laplacian(base[1] - '0');
  }
  return out;
}

Json eval_command(const std::string& expr, const std::string& point, const CommandOptions& opts) {
  const BicomplexFunction f = read_function(expr, opts);
  const Bicomplex z = parse_bicomplex(point);
  const auto enc = opts.encoding;
  return {{"function", encode(f, enc)}, {"at", encode(z, enc)}, {"value", encode(f.evaluate(z), enc)}};
}

Json apply_command(const std::string& op, const std::string& expr, const CommandOptions& opts) {
  const OperatorSpec t = parse_operator_spec(op);
  const BicomplexFunction f = read_function(expr, opts);
  const auto enc = opts.encoding;
  return {{"op", op},
          {"operator", encode(t.base.pow(t.power), enc)},
          {"function", encode(f, enc)},
          {"result", encode(t.base.apply(f, t.power), enc)}};
}

Json classify_command(const std::string& expr, const CommandOptions& opts) {
  return to_json(class_membership(read_function(expr, opts)));
}

Json decompose_command(const std::string& kind, const std::string& expr, std::optional<std::uint32_t> n,
                       std::optional<std::uint32_t> k, const std::optional<std::string>& pair,
                       const CommandOptions& opts) {
  static const char* kinds[] = {"conjbasis", "zstar", "almansi", "rehyp-holo", "rehyp-a1", "main"};
  if (std::find(std::begin(kinds), std::end(kinds), kind) == std::end(kinds)) {
    throw Error("UsageError", "unknown decomposition '" + kind + "'");
  }
  if (pair && *pair != "alpha" && *pair != "beta") throw Error("UsageError", "pair must be alpha or beta");
  if (kind == "main" && (!n || !k)) throw Error("UsageError", "decompose main needs n and k");

  const BicomplexFunction f = read_function(expr, opts);
  const auto enc = opts.encoding;
  if (kind == "conjbasis") return encode(expand_conjugate_basis(f), enc);
  if (kind == "zstar") return encode_zstar(expand_zstar(f), enc);
  if (kind == "almansi") {
    if (!pair) return encode(almansi_bicomplex(f), enc);
    if (*pair == "alpha") return encode(almansi_complex(f.plus(), VariablePair::alpha), enc);
    return encode(almansi_complex(f.minus(), VariablePair::beta), enc);
  }
  if (kind == "rehyp-holo") return {{"f", encode(rehyp_to_holomorphic(f), enc)}};
  if (kind == "rehyp-a1") return encode(rehyp_to_polyholomorphic_A1(f), enc);
  return encode(main_decomposition(f, *n, *k), enc);
}

Json error_json(const Error& e) {
  Json err = {{"error", e.kind()}, {"message", e.what()}};
  if (const auto* pv = dynamic_cast<const PreconditionViolation*>(&e)) err["condition"] = pv->condition();
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) err["position"] = pe->position();
  if (const auto* je = dynamic_cast<const JsonFormatError*>(&e)) err["path"] = je->path();
  return err;
}

int error_exit_code(const Error& e) {
  static const char* input_errors[] = {"ParseError",  "JsonFormatError", "UsageError",
                                       "UnknownSuite", "InvalidOperator", "InvalidRational"};
  for (const char* kind : input_errors) {
    if (e.kind() == kind) return 2;
  }
  return 1;
}

}  // namespace bcx
