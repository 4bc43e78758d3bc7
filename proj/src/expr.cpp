#include "bcx/expr.hpp"

#include <cctype>
#include <optional>

#include "bcx/error.hpp"

namespace bcx {

namespace {

enum class Tok { number, ident, unit, plus, minus, star, slash, caret, lparen, rparen, bar, end };

struct Token {
  Tok type;
  std::string text;
  std::size_t position;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::number, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      std::string word(src.substr(start, i - start));
      if (word == "e" && i < src.size() && (src[i] == '+' || src[i] == '-')) {
        word += src[i++];
        out.push_back({Tok::unit, word, start});
      } else {
        out.push_back({Tok::ident, word, start});
      }
      continue;
    }
    Tok t;
    switch (c) {
      case '+': t = Tok::plus; break;
      case '-': t = Tok::minus; break;
      case '*': t = Tok::star; break;
      case '/': t = Tok::slash; break;
      case '^': t = Tok::caret; break;
      case '(': t = Tok::lparen; break;
      case ')': t = Tok::rparen; break;
      case '|': t = Tok::bar; break;
      default: throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({t, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::end, "", src.size()});
  return out;
}

bool is_function(const std::string& s) {
  return s == "dag" || s == "til" || s == "star" || s == "rehyp" || s == "rec";
}

bool is_raw(const std::string& s) { return s == "a" || s == "ac" || s == "b" || s == "bc"; }

bool is_unit_name(const std::string& s) { return s == "i" || s == "j" || s == "k"; }

std::unique_ptr<Ast> node(Ast::Kind kind, std::size_t pos, std::string text = {}) {
  auto n = std::make_unique<Ast>();
  n->kind = kind;
  n->position = pos;
  n->text = std::move(text);
  return n;
}

std::unique_ptr<Ast> binary(Ast::Kind kind, std::size_t pos, std::unique_ptr<Ast> lhs, std::unique_ptr<Ast> rhs) {
  auto n = node(kind, pos);
  n->children.push_back(std::move(lhs));
  n->children.push_back(std::move(rhs));
  return n;
}

class Parser {
 public:
  Parser(std::string_view src, const ParseOptions& options) : tokens_(tokenize(src)), options_(options) {}

  std::unique_ptr<Ast> parse_input() {
    auto lhs = parse_expr();
    if (peek().type == Tok::bar) {
      const std::size_t pos = next().position;
      auto rhs = parse_expr();
      lhs = binary(Ast::Kind::pair, pos, std::move(lhs), std::move(rhs));
    }
    expect(Tok::end, "expected end of input");
    return lhs;
  }

  // The first side of a `P | M` form is parsed before the bar is seen, so
  // raw tokens there are accepted provisionally and rejected afterwards.
  void validate_raw_usage(const Ast& root) const {
    if (options_.raw_idempotent || root.kind == Ast::Kind::pair) return;
    reject_raw(root);
  }

 private:
  static void reject_raw(const Ast& n) {
    if (n.kind == Ast::Kind::raw) {
      throw ParseError(n.position, "raw idempotent token '" + n.text +
                                       "' requires raw-idempotent mode or the 'P | M' form");
    }
    for (const auto& c : n.children) reject_raw(*c);
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  const Token& expect(Tok type, const char* message) {
    if (peek().type != type) throw ParseError(peek().position, message);
    return next();
  }

  bool starts_atom() const {
    const Tok t = peek().type;
    return t == Tok::number || t == Tok::ident || t == Tok::unit || t == Tok::lparen;
  }

  std::unique_ptr<Ast> parse_expr() {
    auto lhs = parse_term();
    while (peek().type == Tok::plus || peek().type == Tok::minus) {
      const Token& op = next();
      auto rhs = parse_term();
      lhs = binary(op.type == Tok::plus ? Ast::Kind::add : Ast::Kind::sub, op.position, std::move(lhs),
                   std::move(rhs));
    }
    return lhs;
  }

  std::unique_ptr<Ast> parse_term() {
    auto lhs = parse_unary();
    for (;;) {
      if (peek().type == Tok::star) {
        const std::size_t pos = next().position;
        lhs = binary(Ast::Kind::mul, pos, std::move(lhs), parse_unary());
      } else if (peek().type == Tok::slash) {
        const std::size_t pos = next().position;
        lhs = binary(Ast::Kind::div, pos, std::move(lhs), parse_factor());
      } else if (starts_atom()) {
        const std::size_t pos = peek().position;
        lhs = binary(Ast::Kind::mul, pos, std::move(lhs), parse_factor());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Ast> parse_unary() {
    if (peek().type == Tok::minus) {
      const std::size_t pos = next().position;
      auto n = node(Ast::Kind::neg, pos);
      n->children.push_back(parse_unary());
      return n;
    }
    return parse_factor();
  }

  std::unique_ptr<Ast> parse_factor() {
    auto base = parse_atom();
    if (peek().type == Tok::caret) {
      const std::size_t pos = next().position;
      const Token& e = expect(Tok::number, "exponent must be a nonnegative integer");
      if (e.text.size() > 6) throw ParseError(e.position, "exponent too large");
      auto n = node(Ast::Kind::pow, pos);
      n->exponent = static_cast<std::uint32_t>(std::stoul(e.text));
      n->children.push_back(std::move(base));
      if (peek().type == Tok::caret) throw ParseError(peek().position, "chained exponents need parentheses");
      return n;
    }
    return base;
  }

  std::unique_ptr<Ast> parse_atom() {
    const Token& t = next();
    switch (t.type) {
      case Tok::number: return node(Ast::Kind::number, t.position, t.text);
      case Tok::unit: return node(Ast::Kind::unit, t.position, t.text);
      case Tok::lparen: {
        auto inner = parse_expr();
        expect(Tok::rparen, "expected ')'");
        return inner;
      }
      case Tok::ident: {
        if (is_unit_name(t.text)) return node(Ast::Kind::unit, t.position, t.text);
        if (t.text == "Z") {
          if (!options_.allow_variable) throw ParseError(t.position, "variable Z is not allowed here");
          return node(Ast::Kind::variable, t.position, t.text);
        }
        if (is_raw(t.text)) {
          if (!options_.allow_variable) throw ParseError(t.position, "variables are not allowed here");
          return node(Ast::Kind::raw, t.position, t.text);
        }
        if (is_function(t.text)) {
          expect(Tok::lparen, "expected '(' after function name");
          auto n = node(Ast::Kind::call, t.position, t.text);
          n->children.push_back(parse_expr());
          expect(Tok::rparen, "expected ')'");
          return n;
        }
        throw ParseError(t.position, "unknown identifier '" + t.text + "'");
      }
      case Tok::end: throw ParseError(t.position, "unexpected end of input");
      default: throw ParseError(t.position, "unexpected token '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseOptions options_;
};

BicomplexFunction unit_value(const std::string& name) {
  if (name == "i") return BicomplexFunction::constant(Bicomplex::unit_i());
  if (name == "j") return BicomplexFunction::constant(Bicomplex::unit_j());
  if (name == "k") return BicomplexFunction::constant(Bicomplex::unit_k());
  if (name == "e+") return BicomplexFunction::constant(Bicomplex::e_plus());
  return BicomplexFunction::constant(Bicomplex::e_minus());
}

Var raw_var(const std::string& name) {
  if (name == "a") return Var::alpha;
  if (name == "ac") return Var::alpha_bar;
  if (name == "b") return Var::beta;
  return Var::beta_bar;
}

// Returns the value of f when it is a real rational constant.
std::optional<Rational> as_rational(const BicomplexFunction& f) {
  if (f.is_zero()) return Rational(0);
  if (f.plus() != f.minus() || f.plus().size() != 1) return std::nullopt;
  const auto& [e, c] = *f.plus().terms().begin();
  if (e != Exponents{0, 0, 0, 0} || !c.is_real()) return std::nullopt;
  return c.re();
}

}  // namespace

std::unique_ptr<Ast> parse_ast(std::string_view text, const ParseOptions& options) {
  Parser parser(text, options);
  auto root = parser.parse_input();
  parser.validate_raw_usage(*root);
  return root;
}

BicomplexFunction evaluate_ast(const Ast& ast) {
  auto child = [&](std::size_t i) { return evaluate_ast(*ast.children[i]); };
  switch (ast.kind) {
    case Ast::Kind::number:
      return BicomplexFunction::constant(Bicomplex::real(Rational(mpz_class(ast.text, 10))));
    case Ast::Kind::unit: return unit_value(ast.text);
    case Ast::Kind::variable: return BicomplexFunction::identity();
    case Ast::Kind::raw: return BicomplexFunction::scalar(Poly4::variable(raw_var(ast.text)));
    case Ast::Kind::add: return child(0) + child(1);
    case Ast::Kind::sub: return child(0) - child(1);
    case Ast::Kind::mul: return child(0) * child(1);
    case Ast::Kind::neg: return -child(0);
    case Ast::Kind::pow: return child(0).pow(ast.exponent);
    case Ast::Kind::div: {
      auto divisor = as_rational(child(1));
      if (!divisor) throw ParseError(ast.position, "division is only allowed by a rational constant");
      if (sgn(*divisor) == 0) throw ParseError(ast.position, "division by zero");
      return child(0) * Bicomplex::real(Rational(1 / *divisor));
    }
    case Ast::Kind::call: {
      BicomplexFunction arg = child(0);
      if (ast.text == "dag") return arg.conjugate(Conjugation::dagger);
      if (ast.text == "til") return arg.conjugate(Conjugation::tilde);
      if (ast.text == "star") return arg.conjugate(Conjugation::star);
      if (ast.text == "rehyp") return arg.hyperbolic_part();
      return arg.real_part();
    }
    case Ast::Kind::pair: {
      BicomplexFunction p = child(0);
      BicomplexFunction m = child(1);
      return {p.plus(), m.minus()};
    }
  }
  return {};
}

BicomplexFunction parse(std::string_view text, const ParseOptions& options) {
  return evaluate_ast(*parse_ast(text, options));
}

Bicomplex parse_bicomplex(std::string_view text) {
  ParseOptions options;
  options.allow_variable = false;
  BicomplexFunction f = parse(text, options);
  return {f.plus().coefficient({0, 0, 0, 0}), f.minus().coefficient({0, 0, 0, 0})};
}

}  // namespace bcx
