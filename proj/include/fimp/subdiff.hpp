#pragma once

#include <cstddef>
#include <vector>

#include "fimp/expr.hpp"
#include "fimp/rational.hpp"

namespace fimp {

enum class SubdiffKind { Limiting, Upper };

/// Finite union of convex polytopes, each given by its generators.
struct SubdiffSet {
  SubdiffKind kind = SubdiffKind::Limiting;
  std::vector<std::vector<Vec>> polytopes;
  /// Set only guaranteed to contain the true set (sum rule without regularity,
  /// min/max ties with more than two distinct gradients).
  bool over_approximate = false;

  std::size_t dimension() const;
  bool is_singleton() const;
  /// Every generator of every polytope, in order, duplicates removed.
  std::vector<Vec> all_generators() const;
};

/// Limiting subdifferential at x (dimension = x.size()).
/// Kinks are supported for abs/max/min of smooth arguments, scaled by constants
/// and combined by sums. Throws UnsupportedKink otherwise.
SubdiffSet subdiff(const Expr& e, const Point& x);

/// -subdiff(-e, x).
SubdiffSet upper_subdiff(const Expr& e, const Point& x);

/// Pointwise negation; keeps the kind.
SubdiffSet negated(const SubdiffSet& s);

/// Same polytopes with the same generator sets, ignoring order.
bool same_sets(const SubdiffSet& a, const SubdiffSet& b);

/// v ∈ ⋃ conv(P), decided by one LP per polytope.
bool contains(const SubdiffSet& s, const Vec& v);

/// v ∈ conv(P) for a single generator list.
bool in_hull(const std::vector<Vec>& generators, const Vec& v);

/// v ∈ a + b (Minkowski sum of the two unions).
bool in_minkowski_sum(const SubdiffSet& a, const SubdiffSet& b, const Vec& v);

}  // namespace fimp
