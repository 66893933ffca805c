#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fimp/rational.hpp"

namespace fimp {

struct Halfspace {
  Vec a;
  Rational b;  // a . x <= b
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Convex polyhedron {x : a_k . x <= b_k}; no halfspaces means all of R^n.
class Polyhedron {
 public:
  Polyhedron() = default;
  Polyhedron(std::size_t dimension, std::vector<Halfspace> halfspaces);

  static Polyhedron whole_space(std::size_t dimension) { return Polyhedron(dimension, {}); }
  static Polyhedron box(const Vec& lo, const Vec& hi);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

  bool contains(const Point& x) const;
  /// Decided by LP.
  bool is_nonempty() const;
  /// Indices k with a_k . x = b_k.
  std::vector<std::size_t> active(const Point& x) const;

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<Halfspace> halfspaces_;
};

/// Closed convex cone given by generators (conic hull) and/or by rows a with
/// a . v <= 0. When both are present they describe the same cone.
struct Cone {
  std::size_t dimension = 0;
  std::optional<std::vector<Vec>> generators;
  std::optional<std::vector<Vec>> halfspaces;

  static Cone generated_by(std::size_t dimension, std::vector<Vec> gens);
  static Cone cut_by(std::size_t dimension, std::vector<Vec> rows);

  bool contains(const Vec& v) const;
  /// Generators with zero vectors dropped; empty means {0}.
  /// Throws Error when only the halfspace description is present.
  const std::vector<Vec>& generator_list() const;
};

/// Cone generated by the outward normals of the halfspaces active at x.
/// Throws PointNotInSet when x is outside S.
Cone normal_cone(const Polyhedron& S, const Point& x);

/// {v : <g, v> <= 0 for every element g of c}. Generators become cut rows and
/// cut rows become generators.
Cone polar(const Cone& c);

}  // namespace fimp
