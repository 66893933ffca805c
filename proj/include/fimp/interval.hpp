#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "fimp/rational.hpp"

namespace fimp {

/// Closed bounded interval [lo, hi] with exact rational endpoints.
/// Degenerate intervals [a, a] stand in for real scalars.
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  Interval(Rational lo, Rational hi);  // throws InvalidInterval when lo > hi

  static Interval point(const Rational& value) { return Interval(value, value); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool is_degenerate() const { return lo_ == hi_; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

 private:
  Rational lo_;
  Rational hi_;
};

Interval add(const Interval& a, const Interval& b);
Interval sub(const Interval& a, const Interval& b);
Interval scale(const Rational& k, const Interval& a);
/// Four-quotient rule; throws DivisionByIntervalContainingZero when 0 ∈ b.
Interval divide(const Interval& a, const Interval& b);

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator*(const Rational& k, const Interval& a) { return scale(k, a); }
inline Interval operator/(const Interval& a, const Interval& b) { return divide(a, b); }

// LU order relations.
bool leq_lu(const Interval& a, const Interval& b);        // a.lo <= b.lo && a.hi <= b.hi
bool lt_lu(const Interval& a, const Interval& b);         // leq_lu && a != b
bool lt_lu_strict(const Interval& a, const Interval& b);  // a.lo < b.lo && a.hi < b.hi

std::string to_string(const Interval& a);

/// Fixed-length tuple of intervals (m >= 1), e.g. an objective value F(x).
class IntervalVector {
 public:
  explicit IntervalVector(std::vector<Interval> components);
  IntervalVector(std::initializer_list<Interval> components)
      : IntervalVector(std::vector<Interval>(components)) {}

  std::size_t size() const { return components_.size(); }
  const Interval& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Interval>& components() const { return components_; }

  auto begin() const { return components_.begin(); }
  auto end() const { return components_.end(); }

  friend bool operator==(const IntervalVector& a, const IntervalVector& b) {
    return a.components_ == b.components_;
  }
  friend bool operator!=(const IntervalVector& a, const IntervalVector& b) { return !(a == b); }

 private:
  std::vector<Interval> components_;
};

/// a ⪯_LU b: leq_lu in every component and lt_lu in at least one.
bool vec_preceq_lu(const IntervalVector& a, const IntervalVector& b);
/// a ≺ˢ_LU b: lt_lu_strict in every component.
bool vec_prec_lu_strict(const IntervalVector& a, const IntervalVector& b);
/// leq_lu in every component and lt_lu_strict in at least one.
bool vec_preceq_lu_strict_somewhere(const IntervalVector& a, const IntervalVector& b);
/// lt_lu in every component.
bool vec_all_lt_lu(const IntervalVector& a, const IntervalVector& b);

std::string to_string(const IntervalVector& v);

}  // namespace fimp
