#include "fimp/expr.hpp"

#include <algorithm>
#include <cmath>

#include "fimp/error.hpp"

namespace fimp {

struct Expr::Node {
  Kind kind = Kind::Const;
  Rational value = 0;
  std::size_t index = 0;
  unsigned exponent = 1;
  std::vector<Expr> children;
  std::size_t arity = 0;
};

namespace {

std::size_t children_arity(const std::vector<Expr>& children) {
  std::size_t a = 0;
  for (const auto& c : children) a = std::max(a, c.arity());
  return a;
}

}  // namespace

Expr::Expr() : Expr(constant(0)) {}

Expr Expr::constant(Rational value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Const;
  node->value = std::move(value);
  return Expr(std::move(node));
}

Expr Expr::variable(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->index = index;
  node->arity = index + 1;
  return Expr(std::move(node));
}

Expr Expr::make(Kind kind, std::vector<Expr> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->arity = children_arity(children);
  node->children = std::move(children);
  return Expr(std::move(node));
}

Expr Expr::power(Expr base, unsigned exponent) {
  if (exponent < 1) throw Error("power: exponent must be >= 1");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pow;
  node->exponent = exponent;
  node->arity = base.arity();
  node->children = {std::move(base)};
  return Expr(std::move(node));
}

Expr Expr::abs(Expr child) { return make(Kind::Abs, {std::move(child)}); }

Expr Expr::max(std::vector<Expr> children) {
  if (children.size() < 2) throw Error("max needs at least two arguments");
  return make(Kind::Max, std::move(children));
}

Expr Expr::min(std::vector<Expr> children) {
  if (children.size() < 2) throw Error("min needs at least two arguments");
  return make(Kind::Min, std::move(children));
}

Expr operator+(Expr a, Expr b) { return Expr::make(Expr::Kind::Add, {std::move(a), std::move(b)}); }
Expr operator-(Expr a, Expr b) { return Expr::make(Expr::Kind::Sub, {std::move(a), std::move(b)}); }
Expr operator*(Expr a, Expr b) { return Expr::make(Expr::Kind::Mul, {std::move(a), std::move(b)}); }
Expr operator-(Expr a) { return Expr::make(Expr::Kind::Neg, {std::move(a)}); }

Expr::Kind Expr::kind() const { return node_->kind; }
const Rational& Expr::constant_value() const { return node_->value; }
std::size_t Expr::variable_index() const { return node_->index; }
unsigned Expr::exponent() const { return node_->exponent; }
const std::vector<Expr>& Expr::children() const { return node_->children; }
std::size_t Expr::arity() const { return node_->arity; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Expr::Kind::Const:
      return a.constant_value() == b.constant_value();
    case Expr::Kind::Var:
      return a.variable_index() == b.variable_index();
    case Expr::Kind::Pow:
      if (a.exponent() != b.exponent()) return false;
      break;
    default:
      break;
  }
  return a.children() == b.children();
}

std::string to_string(const Expr& e) {
  const auto& c = e.children();
  auto list = [&](const char* name) {
    std::string out = name;
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ", ";
      out += to_string(c[i]);
    }
    return out + ")";
  };
  switch (e.kind()) {
    case Expr::Kind::Const:
      return e.constant_value().get_str();
    case Expr::Kind::Var:
      return "x" + std::to_string(e.variable_index() + 1);
    case Expr::Kind::Add:
      return "(" + to_string(c[0]) + " + " + to_string(c[1]) + ")";
    case Expr::Kind::Sub:
      return "(" + to_string(c[0]) + " - " + to_string(c[1]) + ")";
    case Expr::Kind::Mul:
      return "(" + to_string(c[0]) + " * " + to_string(c[1]) + ")";
    case Expr::Kind::Neg:
      return "-(" + to_string(c[0]) + ")";
    case Expr::Kind::Pow:
      return "(" + to_string(c[0]) + ")^" + std::to_string(e.exponent());
    case Expr::Kind::Abs:
      return list("abs");
    case Expr::Kind::Max:
      return list("max");
    case Expr::Kind::Min:
      return list("min");
  }
  return {};
}

namespace {

void require_dimension(const Expr& e, std::size_t available) {
  if (e.arity() > available) {
    throw DimensionMismatch("expression uses x" + std::to_string(e.arity()) + " but the point has " +
                            std::to_string(available) + " coordinates");
  }
}

Rational ipow(const Rational& base, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= base;
  return r;
}

Rational eval_rec(const Expr& e, std::span<const Rational> x) {
  const auto& c = e.children();
  switch (e.kind()) {
    case Expr::Kind::Const:
      return e.constant_value();
    case Expr::Kind::Var:
      return x[e.variable_index()];
    case Expr::Kind::Add:
      return eval_rec(c[0], x) + eval_rec(c[1], x);
    case Expr::Kind::Sub:
      return eval_rec(c[0], x) - eval_rec(c[1], x);
    case Expr::Kind::Mul:
      return eval_rec(c[0], x) * eval_rec(c[1], x);
    case Expr::Kind::Neg:
      return -eval_rec(c[0], x);
    case Expr::Kind::Pow:
      return ipow(eval_rec(c[0], x), e.exponent());
    case Expr::Kind::Abs: {
      Rational v = eval_rec(c[0], x);
      if (v < 0) v = -v;
      return v;
    }
    case Expr::Kind::Max:
    case Expr::Kind::Min: {
      Rational best = eval_rec(c[0], x);
      for (std::size_t i = 1; i < c.size(); ++i) {
        Rational v = eval_rec(c[i], x);
        if (e.kind() == Expr::Kind::Max ? v > best : v < best) best = std::move(v);
      }
      return best;
    }
  }
  return 0;
}

double eval_double_rec(const Expr& e, std::span<const double> x) {
  const auto& c = e.children();
  switch (e.kind()) {
    case Expr::Kind::Const:
      return e.constant_value().get_d();
    case Expr::Kind::Var:
      return x[e.variable_index()];
    case Expr::Kind::Add:
      return eval_double_rec(c[0], x) + eval_double_rec(c[1], x);
    case Expr::Kind::Sub:
      return eval_double_rec(c[0], x) - eval_double_rec(c[1], x);
    case Expr::Kind::Mul:
      return eval_double_rec(c[0], x) * eval_double_rec(c[1], x);
    case Expr::Kind::Neg:
      return -eval_double_rec(c[0], x);
    case Expr::Kind::Pow: {
      const double b = eval_double_rec(c[0], x);
      double r = 1.0;
      for (unsigned i = 0; i < e.exponent(); ++i) r *= b;
      return r;
    }
    case Expr::Kind::Abs:
      return std::fabs(eval_double_rec(c[0], x));
    case Expr::Kind::Max:
    case Expr::Kind::Min: {
      double best = eval_double_rec(c[0], x);
      for (std::size_t i = 1; i < c.size(); ++i) {
        const double v = eval_double_rec(c[i], x);
        best = e.kind() == Expr::Kind::Max ? std::max(best, v) : std::min(best, v);
      }
      return best;
    }
  }
  return 0.0;
}

bool smooth_rec(const Expr& e, std::span<const Rational> x) {
  for (const auto& child : e.children()) {
    if (!smooth_rec(child, x)) return false;
  }
  switch (e.kind()) {
    case Expr::Kind::Abs:
      return eval_rec(e.children()[0], x) != 0;
    case Expr::Kind::Max:
    case Expr::Kind::Min: {
      const Rational best = eval_rec(e, x);
      int active = 0;
      for (const auto& child : e.children()) {
        if (eval_rec(child, x) == best) ++active;
      }
      return active == 1;
    }
    default:
      return true;
  }
}

struct Jet {
  Rational value;
  Vec grad;
};

Jet jet_rec(const Expr& e, std::span<const Rational> x, std::size_t n) {
  const auto& c = e.children();
  switch (e.kind()) {
    case Expr::Kind::Const:
      return {e.constant_value(), zeros(n)};
    case Expr::Kind::Var: {
      Jet j{x[e.variable_index()], zeros(n)};
      j.grad[e.variable_index()] = 1;
      return j;
    }
    case Expr::Kind::Add: {
      Jet a = jet_rec(c[0], x, n), b = jet_rec(c[1], x, n);
      return {a.value + b.value, add(a.grad, b.grad)};
    }
    case Expr::Kind::Sub: {
      Jet a = jet_rec(c[0], x, n), b = jet_rec(c[1], x, n);
      return {a.value - b.value, sub(a.grad, b.grad)};
    }
    case Expr::Kind::Mul: {
      Jet a = jet_rec(c[0], x, n), b = jet_rec(c[1], x, n);
      return {a.value * b.value, add(scaled(b.value, a.grad), scaled(a.value, b.grad))};
    }
    case Expr::Kind::Neg: {
      Jet a = jet_rec(c[0], x, n);
      return {-a.value, negated(a.grad)};
    }
    case Expr::Kind::Pow: {
      Jet a = jet_rec(c[0], x, n);
      const unsigned k = e.exponent();
      const Rational factor = Rational(k) * ipow(a.value, k - 1);
      return {ipow(a.value, k), scaled(factor, a.grad)};
    }
    case Expr::Kind::Abs: {
      Jet a = jet_rec(c[0], x, n);
      if (a.value == 0) throw NotSmoothHere("abs argument vanishes at this point");
      if (a.value > 0) return a;
      return {-a.value, negated(a.grad)};
    }
    case Expr::Kind::Max:
    case Expr::Kind::Min: {
      std::vector<Rational> values;
      values.reserve(c.size());
      for (const auto& child : c) values.push_back(eval_rec(child, x));
      const auto best = e.kind() == Expr::Kind::Max ? std::max_element(values.begin(), values.end())
                                                    : std::min_element(values.begin(), values.end());
      if (std::count(values.begin(), values.end(), *best) != 1) {
        throw NotSmoothHere("max/min has tied active arguments at this point");
      }
      return jet_rec(c[static_cast<std::size_t>(best - values.begin())], x, n);
    }
  }
  return {0, zeros(n)};
}

}  // namespace

Rational eval(const Expr& e, std::span<const Rational> x) {
  require_dimension(e, x.size());
  return eval_rec(e, x);
}

double eval_double(const Expr& e, std::span<const double> x) {
  require_dimension(e, x.size());
  return eval_double_rec(e, x);
}

bool is_smooth_at(const Expr& e, std::span<const Rational> x) {
  require_dimension(e, x.size());
  return smooth_rec(e, x);
}

Vec gradient(const Expr& e, std::span<const Rational> x, std::size_t dimension) {
  require_dimension(e, std::min(x.size(), dimension));
  if (x.size() != dimension) throw DimensionMismatch("gradient: point dimension mismatch");
  return jet_rec(e, x, dimension).grad;
}

std::vector<double> grad_fd_check(const Expr& e, std::span<const Rational> x,
                                  std::size_t dimension, double step) {
  if (!(step > 0)) throw Error("grad_fd_check: step must be positive");
  if (x.size() != dimension) throw DimensionMismatch("grad_fd_check: point dimension mismatch");
  if (!is_smooth_at(e, x)) throw NotSmoothHere("finite differences requested at a kink");
  std::vector<double> base = to_double(Vec(x.begin(), x.end()));
  std::vector<double> g(dimension);
  for (std::size_t k = 0; k < dimension; ++k) {
    std::vector<double> fwd = base, bwd = base;
    fwd[k] += step;
    bwd[k] -= step;
    g[k] = (eval_double(e, fwd) - eval_double(e, bwd)) / (2.0 * step);
  }
  return g;
}

}  // namespace fimp
