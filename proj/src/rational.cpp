#include "fimp/rational.hpp"

#include <algorithm>
#include <cctype>

#include "fimp/error.hpp"

namespace fimp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Unsigned decimal "12" or "12.375" as an exact rational.
Rational parse_decimal(std::string_view s, std::string_view whole) {
  const auto dot = s.find('.');
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (dot != std::string_view::npos && !all_digits(frac_part)) {
    throw ParseError(0, std::string(whole), "malformed fractional digits");
  }
  if (!int_part.empty() && !all_digits(int_part)) {
    throw ParseError(0, std::string(whole), "malformed digits");
  }
  if (int_part.empty() && frac_part.empty()) {
    throw ParseError(0, std::string(whole), "missing digits");
  }
  mpz_class num(int_part.empty() ? std::string("0") : std::string(int_part));
  mpz_class den = 1;
  for (char c : frac_part) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw ParseError(0, std::string(text), "empty rational");
  const auto slash = s.find('/');
  Rational value = parse_decimal(s.substr(0, slash), text);
  if (slash != std::string_view::npos) {
    Rational den = parse_decimal(s.substr(slash + 1), text);
    if (den == 0) throw ParseError(slash, std::string(text), "zero denominator");
    value /= den;
  }
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

double to_double(const Rational& q) { return q.get_d(); }

std::vector<double> to_double(const Vec& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.get_d());
  return out;
}

Vec zeros(std::size_t n) { return Vec(n, Rational(0)); }

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: vector sizes differ");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: vector sizes differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("sub: vector sizes differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scaled(const Rational& k, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = k * v[i];
  return r;
}

Vec negated(const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& q : v) {
    if (q != 0) return false;
  }
  return true;
}

bool lex_less(const Vec& a, const Vec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

}  // namespace fimp
