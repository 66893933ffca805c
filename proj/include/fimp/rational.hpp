#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace fimp {

/// Exact rational scalar. Every value that reaches a verdict is one of these.
using Rational = mpq_class;
using Vec = std::vector<Rational>;
using Point = Vec;

/// Parses "7/18", "-3", "0.25" or "-1.5/2" exactly. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q = 1).
std::string to_string(const Rational& q);
std::string to_string(const Vec& v);

double to_double(const Rational& q);
std::vector<double> to_double(const Vec& v);

Vec zeros(std::size_t n);
Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Rational& k, const Vec& v);
Vec negated(const Vec& v);
bool is_zero(const Vec& v);

/// Lexicographic order, used to sort grid points and verdicts.
bool lex_less(const Vec& a, const Vec& b);

}  // namespace fimp
