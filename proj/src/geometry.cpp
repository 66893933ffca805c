#include "fimp/geometry.hpp"

#include "fimp/error.hpp"
#include "fimp/lp.hpp"

namespace fimp {

Polyhedron::Polyhedron(std::size_t dimension, std::vector<Halfspace> halfspaces)
    : dimension_(dimension), halfspaces_(std::move(halfspaces)) {
  for (std::size_t k = 0; k < halfspaces_.size(); ++k) {
    if (halfspaces_[k].a.size() != dimension_) {
      throw DimensionMismatch("halfspace " + std::to_string(k) + " has " + std::to_string(halfspaces_[k].a.size()) +
                              " coefficients, expected " + std::to_string(dimension_));
    }
  }
}

Polyhedron Polyhedron::box(const Vec& lo, const Vec& hi) {
  if (lo.size() != hi.size()) throw DimensionMismatch("box bounds differ in length");
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    Vec up = zeros(lo.size());
    up[i] = 1;
    hs.push_back({up, hi[i]});
    hs.push_back({negated(up), -lo[i]});
  }
  return Polyhedron(lo.size(), std::move(hs));
}

bool Polyhedron::contains(const Point& x) const {
  if (x.size() != dimension_) throw DimensionMismatch("point dimension differs from the set");
  for (const auto& h : halfspaces_) {
    if (dot(h.a, x) > h.b) return false;
  }
  return true;
}

bool Polyhedron::is_nonempty() const {
  LpProblem lp(dimension_, false);
  for (const auto& h : halfspaces_) lp.add_le(h.a, h.b);
  return lp_feasible(lp).feasible;
}

std::vector<std::size_t> Polyhedron::active(const Point& x) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < halfspaces_.size(); ++k) {
    if (dot(halfspaces_[k].a, x) == halfspaces_[k].b) out.push_back(k);
  }
  return out;
}

Cone Cone::generated_by(std::size_t dimension, std::vector<Vec> gens) {
  Cone c;
  c.dimension = dimension;
  std::vector<Vec> kept;
  for (auto& g : gens) {
    if (g.size() != dimension) throw DimensionMismatch("cone generator has the wrong dimension");
    if (!is_zero(g)) kept.push_back(std::move(g));
  }
  c.generators = std::move(kept);
  return c;
}

Cone Cone::cut_by(std::size_t dimension, std::vector<Vec> rows) {
  Cone c;
  c.dimension = dimension;
  for (const auto& r : rows) {
    if (r.size() != dimension) throw DimensionMismatch("cone row has the wrong dimension");
  }
  c.halfspaces = std::move(rows);
  return c;
}

const std::vector<Vec>& Cone::generator_list() const {
  if (!generators) throw Error("cone has no generator description");
  return *generators;
}

bool Cone::contains(const Vec& v) const {
  if (v.size() != dimension) throw DimensionMismatch("vector dimension differs from the cone");
  if (halfspaces) {
    for (const auto& r : *halfspaces) {
      if (dot(r, v) > 0) return false;
    }
    if (!generators) return true;
  }
  const auto& gens = *generators;
  if (gens.empty()) return is_zero(v);
  LpProblem lp(gens.size(), true);
  for (std::size_t d = 0; d < dimension; ++d) {
    Vec row(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) row[k] = gens[k][d];
    lp.add_eq(std::move(row), v[d]);
  }
  return lp_feasible(lp).feasible;
}

Cone normal_cone(const Polyhedron& S, const Point& x) {
  if (!S.contains(x)) throw PointNotInSet("point " + to_string(x) + " is not in S");
  std::vector<Vec> gens;
  for (std::size_t k : S.active(x)) gens.push_back(S.halfspaces()[k].a);
  return Cone::generated_by(S.dimension(), std::move(gens));
}

Cone polar(const Cone& c) {
  Cone out;
  out.dimension = c.dimension;
  if (c.generators) out.halfspaces = *c.generators;
  if (c.halfspaces) out = [&] {
    Cone g = Cone::generated_by(c.dimension, *c.halfspaces);
    if (c.generators) g.halfspaces = *c.generators;
    return g;
  }();
  return out;
}

}  // namespace fimp
