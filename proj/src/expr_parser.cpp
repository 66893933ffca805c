#include <cctype>

#include "fimp/error.hpp"
#include "fimp/expr.hpp"

namespace fimp {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digits = [&](std::size_t j) {
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      // decimal [ '/' decimal ], no embedded spaces
      std::size_t j = digits(i);
      if (j < s.size() && s[j] == '.') j = digits(j + 1);
      if (j < s.size() && s[j] == '/') {
        const std::size_t k = digits(j + 1);
        if (k == j + 1) throw ParseError(j, "/", "division is not part of the expression language");
        j = k;
        if (j < s.size() && s[j] == '.') j = digits(j + 1);
      }
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '/':
        throw ParseError(i, "/", "division is not part of the expression language");
      default:
        throw ParseError(i, std::string(1, ch), "unexpected character");
    }
    out.push_back({kind, std::string(1, ch), i});
    ++i;
  }
  out.push_back({Tok::End, "<end>", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t dimension)
      : tokens_(std::move(tokens)), dimension_(dimension) {}

  Expr parse() {
    Expr e = expression();
    if (peek().kind != Tok::End) fail("unexpected trailing input");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(peek().pos, peek().text, message);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    next();
  }

  Expr expression() {
    Expr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool plus = next().kind == Tok::Plus;
      Expr rhs = term();
      lhs = plus ? std::move(lhs) + std::move(rhs) : std::move(lhs) - std::move(rhs);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (peek().kind == Tok::Star) {
      next();
      lhs = std::move(lhs) * unary();
    }
    return lhs;
  }

  Expr unary() {
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    if (peek().kind == Tok::Minus) {
      next();
      // "-3" is a negative literal unless it is the base of a power: -3^2 = -(3^2).
      if (peek().kind == Tok::Number && peek(1).kind != Tok::Caret) {
        return Expr::constant(-number(next()));
      }
      return -unary();
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (peek().kind == Tok::Caret) {
      next();
      const Token& t = peek();
      if (t.kind != Tok::Number || t.text.find_first_not_of("0123456789") != std::string::npos) {
        fail("exponent must be a positive integer literal");
      }
      const unsigned long k = std::stoul(t.text);
      if (k < 1 || k > 64) fail("exponent must be between 1 and 64");
      next();
      return Expr::power(std::move(base), static_cast<unsigned>(k));
    }
    return base;
  }

  static Rational number(const Token& t) {
    try {
      return parse_rational(t.text);
    } catch (const ParseError&) {
      throw ParseError(t.pos, t.text, "malformed number");
    }
  }

  Expr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        return Expr::constant(number(next()));
      case Tok::LParen: {
        next();
        Expr e = expression();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident:
        return identifier();
      default:
        fail("expected a number, variable, function or '('");
    }
  }

  Expr identifier() {
    const Token t = next();
    if (t.text == "abs" || t.text == "max" || t.text == "min") {
      expect(Tok::LParen, "'(' after function name");
      std::vector<Expr> args{expression()};
      while (peek().kind == Tok::Comma) {
        next();
        args.push_back(expression());
      }
      expect(Tok::RParen, "')'");
      if (t.text == "abs") {
        if (args.size() != 1) throw ParseError(t.pos, t.text, "abs takes exactly one argument");
        return Expr::abs(std::move(args[0]));
      }
      if (args.size() < 2) throw ParseError(t.pos, t.text, t.text + " needs at least two arguments");
      return t.text == "max" ? Expr::max(std::move(args)) : Expr::min(std::move(args));
    }
    if (t.text.size() >= 2 && t.text[0] == 'x' &&
        t.text.find_first_not_of("0123456789", 1) == std::string::npos) {
      const unsigned long idx = std::stoul(t.text.substr(1));
      if (idx < 1 || idx > dimension_) {
        throw ParseError(t.pos, t.text,
                         "variable index out of range 1.." + std::to_string(dimension_));
      }
      return Expr::variable(idx - 1);
    }
    throw ParseError(t.pos, t.text, "unknown identifier");
  }

  std::vector<Token> tokens_;
  std::size_t dimension_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, std::size_t dimension) {
  return Parser(lex(text), dimension).parse();
}

}  // namespace fimp
