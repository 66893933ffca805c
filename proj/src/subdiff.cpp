#include "fimp/subdiff.hpp"

#include <algorithm>

#include "fimp/error.hpp"
#include "fimp/lp.hpp"

namespace fimp {

namespace {

using Poly = std::vector<Vec>;

struct Side {
  std::vector<Poly> polys;
  bool exact = true;
  bool regular = true;  // a single convex piece that is the whole set
};

// Local first-order model of a node: the set for the node itself ("lower") and
// the set for its negation ("neg").
struct Model {
  Rational value;
  bool smooth = true;
  Vec grad;
  Side lower, neg;
};

void dedupe(Poly& p) {
  std::sort(p.begin(), p.end(), lex_less);
  p.erase(std::unique(p.begin(), p.end()), p.end());
}

void dedupe(std::vector<Poly>& ps) {
  for (auto& p : ps) dedupe(p);
  std::vector<Poly> out;
  for (auto& p : ps) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  ps = std::move(out);
}

Model smooth_model(Rational value, Vec grad) {
  Model m;
  m.value = std::move(value);
  m.smooth = true;
  m.lower.polys = {{grad}};
  m.neg.polys = {{negated(grad)}};
  m.grad = std::move(grad);
  return m;
}

Side scale_side(const Side& s, const Rational& k) {
  Side out = s;
  for (auto& p : out.polys) {
    for (auto& g : p) g = scaled(k, g);
  }
  return out;
}

Model negate(Model m) {
  m.value = -m.value;
  m.grad = negated(m.grad);
  std::swap(m.lower, m.neg);
  return m;
}

Model scale_model(Model m, const Rational& k, std::size_t dim) {
  if (k == 0) return smooth_model(0, zeros(dim));
  if (m.smooth) return smooth_model(k * m.value, scaled(k, m.grad));
  if (k < 0) {
    m = negate(std::move(m));
    return scale_model(std::move(m), -k, dim);
  }
  m.value *= k;
  m.lower = scale_side(m.lower, k);
  m.neg = scale_side(m.neg, k);
  return m;
}

Side minkowski(const Side& a, bool a_smooth, const Side& b, bool b_smooth) {
  Side out;
  for (const auto& pa : a.polys) {
    for (const auto& pb : b.polys) {
      Poly sum;
      sum.reserve(pa.size() * pb.size());
      for (const auto& ga : pa) {
        for (const auto& gb : pb) sum.push_back(add(ga, gb));
      }
      out.polys.push_back(std::move(sum));
    }
  }
  dedupe(out.polys);
  out.regular = a.regular && b.regular;
  out.exact = a.exact && b.exact && (a_smooth || b_smooth || (a.regular && b.regular));
  return out;
}

Model add_models(const Model& a, const Model& b) {
  if (a.smooth && b.smooth) return smooth_model(a.value + b.value, add(a.grad, b.grad));
  Model m;
  m.value = a.value + b.value;
  m.smooth = false;
  m.lower = minkowski(a.lower, a.smooth, b.lower, b.smooth);
  m.neg = minkowski(a.neg, a.smooth, b.neg, b.smooth);
  return m;
}

// Tie among smooth active pieces of a max (take_max) or min.
Model tie_model(const Rational& value, const std::vector<Model>& active, bool take_max) {
  Poly distinct;
  for (const auto& c : active) {
    if (std::find(distinct.begin(), distinct.end(), c.grad) == distinct.end()) {
      distinct.push_back(c.grad);
    }
  }
  if (distinct.size() == 1) return smooth_model(value, distinct.front());
  Side hull;
  hull.polys = {distinct};
  Side pieces;
  for (const auto& g : distinct) pieces.polys.push_back({g});
  pieces.regular = false;
  // A union of limiting gradients is exact when at most two distinct gradients meet.
  pieces.exact = distinct.size() <= 2;
  Model m;
  m.value = value;
  m.smooth = false;
  if (take_max) {
    m.lower = hull;
    m.neg = scale_side(pieces, -1);
  } else {
    m.lower = pieces;
    m.neg = scale_side(hull, -1);
  }
  dedupe(m.lower.polys);
  dedupe(m.neg.polys);
  return m;
}

class Builder {
 public:
  explicit Builder(const Point& x) : x_(x), dim_(x.size()) {}

  Model build(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind()) {
      case K::Const:
        return smooth_model(e.constant_value(), zeros(dim_));
      case K::Var: {
        Vec g = zeros(dim_);
        g[e.variable_index()] = 1;
        return smooth_model(x_[e.variable_index()], std::move(g));
      }
      case K::Add:
        return add_models(build(e.children()[0]), build(e.children()[1]));
      case K::Sub:
        return add_models(build(e.children()[0]), negate(build(e.children()[1])));
      case K::Neg:
        return negate(build(e.children()[0]));
      case K::Mul:
        return mul(e.children()[0], e.children()[1]);
      case K::Pow:
        return pow(e.children()[0], e.exponent());
      case K::Abs:
        return abs(e.children()[0]);
      case K::Max:
      case K::Min:
        return extremum(e.children(), e.kind() == K::Max);
    }
    throw Error("subdiff: unknown node kind");
  }

 private:
  Model mul(const Expr& a, const Expr& b) {
    Model ma = build(a);
    Model mb = build(b);
    if (ma.smooth && mb.smooth) {
      return smooth_model(ma.value * mb.value, add(scaled(mb.value, ma.grad), scaled(ma.value, mb.grad)));
    }
    if (a.is_constant()) return scale_model(std::move(mb), ma.value, dim_);
    if (b.is_constant()) return scale_model(std::move(ma), mb.value, dim_);
    throw UnsupportedKink("kink inside a product with a non-constant factor: " + to_string(a) + " * " +
                          to_string(b));
  }

  Model pow(const Expr& base, unsigned k) {
    Model mb = build(base);
    if (k == 1) return mb;
    if (!mb.smooth) throw UnsupportedKink("kink inside a power: (" + to_string(base) + ")^" + std::to_string(k));
    Rational v = 1;
    for (unsigned i = 0; i + 1 < k; ++i) v *= mb.value;
    return smooth_model(v * mb.value, scaled(Rational(k) * v, mb.grad));
  }

  Model abs(const Expr& u) {
    Model mu = build(u);
    if (mu.value > 0) return mu;
    if (mu.value < 0) return negate(std::move(mu));
    if (!mu.smooth) throw UnsupportedKink("nested kink inside abs(" + to_string(u) + ")");
    if (is_zero(mu.grad)) return smooth_model(0, zeros(dim_));
    Model m;
    m.value = 0;
    m.smooth = false;
    m.lower.polys = {{negated(mu.grad), mu.grad}};
    dedupe(m.lower.polys);
    m.neg.polys = {{negated(mu.grad)}, {mu.grad}};
    m.neg.regular = false;
    return m;
  }

  Model extremum(const std::vector<Expr>& children, bool take_max) {
    std::vector<Rational> values;
    values.reserve(children.size());
    for (const auto& c : children) values.push_back(eval(c, x_));
    Rational best = values[0];
    for (const auto& v : values) {
      if (take_max ? v > best : v < best) best = v;
    }
    std::vector<Model> active;
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (values[i] == best) active.push_back(build(children[i]));
    }
    if (active.size() == 1) return std::move(active.front());
    for (const auto& a : active) {
      if (!a.smooth) {
        throw UnsupportedKink(std::string("nested kink among tied pieces of ") + (take_max ? "max" : "min"));
      }
    }
    return tie_model(best, active, take_max);
  }

  const Point& x_;
  std::size_t dim_;
};

SubdiffSet from_side(const Side& s, SubdiffKind kind, bool negate_all) {
  SubdiffSet out;
  out.kind = kind;
  out.polytopes = s.polys;
  if (negate_all) {
    for (auto& p : out.polytopes) {
      for (auto& g : p) g = negated(g);
    }
  }
  dedupe(out.polytopes);
  out.over_approximate = !s.exact;
  return out;
}

Model model_at(const Expr& e, const Point& x) {
  if (e.arity() > x.size()) {
    throw DimensionMismatch("expression uses x" + std::to_string(e.arity()) + " but the point has " +
                            std::to_string(x.size()) + " coordinates");
  }
  return Builder(x).build(e);
}

}  // namespace

std::size_t SubdiffSet::dimension() const {
  return polytopes.empty() || polytopes.front().empty() ? 0 : polytopes.front().front().size();
}

bool SubdiffSet::is_singleton() const {
  return polytopes.size() == 1 && polytopes.front().size() == 1;
}

std::vector<Vec> SubdiffSet::all_generators() const {
  std::vector<Vec> out;
  for (const auto& p : polytopes) {
    for (const auto& g : p) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  }
  return out;
}

SubdiffSet subdiff(const Expr& e, const Point& x) {
  return from_side(model_at(e, x).lower, SubdiffKind::Limiting, false);
}

SubdiffSet upper_subdiff(const Expr& e, const Point& x) {
  return from_side(model_at(e, x).neg, SubdiffKind::Upper, true);
}

SubdiffSet negated(const SubdiffSet& s) {
  SubdiffSet out = s;
  for (auto& p : out.polytopes) {
    for (auto& g : p) g = fimp::negated(g);
  }
  dedupe(out.polytopes);
  return out;
}

bool same_sets(const SubdiffSet& a, const SubdiffSet& b) {
  auto norm = [](std::vector<Poly> ps) {
    dedupe(ps);
    std::sort(ps.begin(), ps.end());
    return ps;
  };
  return norm(a.polytopes) == norm(b.polytopes);
}

bool in_hull(const std::vector<Vec>& generators, const Vec& v) {
  LpProblem lp(generators.size(), true);
  Vec ones(generators.size(), Rational(1));
  lp.add_eq(ones, 1);
  for (std::size_t d = 0; d < v.size(); ++d) {
    Vec row(generators.size());
    for (std::size_t k = 0; k < generators.size(); ++k) {
      if (generators[k].size() != v.size()) throw DimensionMismatch("generator dimension differs from query");
      row[k] = generators[k][d];
    }
    lp.add_eq(std::move(row), v[d]);
  }
  return lp_feasible(lp).feasible;
}

bool contains(const SubdiffSet& s, const Vec& v) {
  for (const auto& p : s.polytopes) {
    if (in_hull(p, v)) return true;
  }
  return false;
}

bool in_minkowski_sum(const SubdiffSet& a, const SubdiffSet& b, const Vec& v) {
  for (const auto& pa : a.polytopes) {
    for (const auto& pb : b.polytopes) {
      const std::size_t na = pa.size(), nb = pb.size();
      LpProblem lp(na + nb, true);
      Vec ra = lp.row(), rb = lp.row();
      for (std::size_t k = 0; k < na; ++k) ra[k] = 1;
      for (std::size_t k = 0; k < nb; ++k) rb[na + k] = 1;
      lp.add_eq(std::move(ra), 1);
      lp.add_eq(std::move(rb), 1);
      for (std::size_t d = 0; d < v.size(); ++d) {
        Vec row = lp.row();
        for (std::size_t k = 0; k < na; ++k) row[k] = pa[k][d];
        for (std::size_t k = 0; k < nb; ++k) row[na + k] = pb[k][d];
        lp.add_eq(std::move(row), v[d]);
      }
      if (lp_feasible(lp).feasible) return true;
    }
  }
  return false;
}

}  // namespace fimp
