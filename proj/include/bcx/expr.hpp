#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bcx/function.hpp"

namespace bcx {

/// Expression grammar (whitespace-insensitive):
///
///   input  := expr ('|' expr)?
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' unary) | ('/' factor) | unary)*     juxtaposition multiplies
///   unary  := '-' unary | factor
///   factor := atom ('^' NAT)?
///   atom   := NAT | 'i' | 'j' | 'k' | 'e+' | 'e-' | 'Z'
///           | 'a' | 'ac' | 'b' | 'bc'                          raw idempotent tokens
///           | FUNC '(' expr ')' | '(' expr ')'
///   FUNC   := 'dag' | 'til' | 'star' | 'rehyp' | 'rec'
///
/// Division is only by nonzero rational constants. `P | M` denotes
/// P e+ + M e-; it is the canonical printed form and always admits the raw
/// tokens a, ac, b, bc (alpha, conj alpha, beta, conj beta).
struct ParseOptions {
  /// Accept a, ac, b, bc outside the `P | M` form.
  bool raw_idempotent = false;
  /// Accept the variable Z (off when parsing a bicomplex constant).
  bool allow_variable = true;
};

struct Ast {
  enum class Kind { number, unit, variable, raw, add, sub, mul, div, neg, pow, call, pair };

  Kind kind = Kind::number;
  std::size_t position = 0;
  std::string text;         // literal digits, unit/variable/function name
  std::uint32_t exponent = 0;
  std::vector<std::unique_ptr<Ast>> children;
};

/// Syntax only; throws ParseError with the offending position.
std::unique_ptr<Ast> parse_ast(std::string_view text, const ParseOptions& options = {});
/// Lowers an Ast to canonical form.
BicomplexFunction evaluate_ast(const Ast& ast);

BicomplexFunction parse(std::string_view text, const ParseOptions& options = {});
/// Parses a constant bicomplex expression such as "1 + 2i + 3j + 4k".
Bicomplex parse_bicomplex(std::string_view text);

/// Canonical text; parse(format(f)) == f.
inline std::string format(const BicomplexFunction& f) { return to_string(f); }

}  // namespace bcx
