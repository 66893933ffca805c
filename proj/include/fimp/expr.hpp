#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fimp/rational.hpp"

namespace fimp {

/// Immutable expression tree for a scalar function R^n -> R.
///
/// The node set (polynomial arithmetic plus abs/max/min) only produces locally
/// Lipschitz functions. Nodes are shared, so copies are cheap and thread safe.
class Expr {
 public:
  enum class Kind { Const, Var, Add, Sub, Mul, Neg, Pow, Abs, Max, Min };

  Expr();  // the constant 0

  static Expr constant(Rational value);
  static Expr variable(std::size_t index);
  static Expr power(Expr base, unsigned exponent);  // exponent >= 1
  static Expr abs(Expr child);
  static Expr max(std::vector<Expr> children);  // >= 2 children
  static Expr min(std::vector<Expr> children);  // >= 2 children

  Kind kind() const;
  const Rational& constant_value() const;  // Const only
  std::size_t variable_index() const;      // Var only
  unsigned exponent() const;               // Pow only
  const std::vector<Expr>& children() const;

  /// One past the largest variable index used (0 for constant expressions).
  std::size_t arity() const;
  bool is_constant() const { return arity() == 0; }

  friend Expr operator+(Expr a, Expr b);
  friend Expr operator-(Expr a, Expr b);
  friend Expr operator*(Expr a, Expr b);
  friend Expr operator-(Expr a);

  /// Structural equality (no algebraic simplification).
  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Kind kind, std::vector<Expr> children);

  std::shared_ptr<const Node> node_;
};

inline Expr operator+(Expr a, const Rational& b) { return std::move(a) + Expr::constant(b); }
inline Expr operator*(const Rational& k, Expr a) { return Expr::constant(k) * std::move(a); }

/// Parses infix text: + - * ^ (positive integer exponent), unary minus,
/// parentheses, abs(e), max(e, e, ...), min(e, e, ...), variables x1..xn and
/// rational literals such as 7/18 or 0.25. Throws ParseError.
Expr parse_expr(std::string_view text, std::size_t dimension);

/// Fully parenthesised text that parse_expr maps back to the same tree.
std::string to_string(const Expr& e);

/// Exact value. Throws DimensionMismatch when x is too short for e.
Rational eval(const Expr& e, std::span<const Rational> x);
double eval_double(const Expr& e, std::span<const double> x);

/// No abs argument evaluates to 0 and no max/min has tied active children.
bool is_smooth_at(const Expr& e, std::span<const Rational> x);

/// Exact gradient by the standard differentiation rules at a point where every
/// abs argument is nonzero and every max/min has a unique active child.
/// Throws NotSmoothHere otherwise.
Vec gradient(const Expr& e, std::span<const Rational> x, std::size_t dimension);

/// Central finite-difference gradient in floating point (test oracle).
/// Throws NotSmoothHere unless is_smooth_at(e, x).
std::vector<double> grad_fd_check(const Expr& e, std::span<const Rational> x,
                                  std::size_t dimension, double step);

}  // namespace fimp
