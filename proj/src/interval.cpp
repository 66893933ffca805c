#include "fimp/interval.hpp"

#include <algorithm>
#include <array>

#include "fimp/error.hpp"

namespace fimp {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) {
    throw InvalidInterval("interval lower endpoint " + lo_.get_str() + " exceeds upper endpoint " +
                          hi_.get_str());
  }
}

Interval add(const Interval& a, const Interval& b) {
  return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval sub(const Interval& a, const Interval& b) {
  return Interval(a.lo() - b.hi(), a.hi() - b.lo());
}

Interval scale(const Rational& k, const Interval& a) {
  if (k >= 0) return Interval(k * a.lo(), k * a.hi());
  return Interval(k * a.hi(), k * a.lo());
}

Interval divide(const Interval& a, const Interval& b) {
  if (b.lo() <= 0 && 0 <= b.hi()) {
    throw DivisionByIntervalContainingZero("divisor " + to_string(b) + " contains zero");
  }
  const std::array<Rational, 4> q = {Rational(a.lo() / b.lo()), Rational(a.lo() / b.hi()),
                                     Rational(a.hi() / b.lo()), Rational(a.hi() / b.hi())};
  const auto [mn, mx] = std::minmax_element(q.begin(), q.end());
  return Interval(*mn, *mx);
}

bool leq_lu(const Interval& a, const Interval& b) { return a.lo() <= b.lo() && a.hi() <= b.hi(); }

bool lt_lu(const Interval& a, const Interval& b) { return leq_lu(a, b) && a != b; }

bool lt_lu_strict(const Interval& a, const Interval& b) {
  return a.lo() < b.lo() && a.hi() < b.hi();
}

std::string to_string(const Interval& a) {
  return "[" + a.lo().get_str() + ", " + a.hi().get_str() + "]";
}

IntervalVector::IntervalVector(std::vector<Interval> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw LengthMismatch("interval vector needs at least one component");
}

namespace {

void require_same_length(const IntervalVector& a, const IntervalVector& b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("interval vectors of length " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
}

}  // namespace

bool vec_preceq_lu(const IntervalVector& a, const IntervalVector& b) {
  require_same_length(a, b);
  bool some_strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!leq_lu(a[i], b[i])) return false;
    some_strict = some_strict || a[i] != b[i];
  }
  return some_strict;
}

bool vec_prec_lu_strict(const IntervalVector& a, const IntervalVector& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!lt_lu_strict(a[i], b[i])) return false;
  }
  return true;
}

bool vec_preceq_lu_strict_somewhere(const IntervalVector& a, const IntervalVector& b) {
  require_same_length(a, b);
  bool some_strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!leq_lu(a[i], b[i])) return false;
    some_strict = some_strict || lt_lu_strict(a[i], b[i]);
  }
  return some_strict;
}

bool vec_all_lt_lu(const IntervalVector& a, const IntervalVector& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!lt_lu(a[i], b[i])) return false;
  }
  return true;
}

std::string to_string(const IntervalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace fimp
