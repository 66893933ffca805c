#include <doctest.h>

#include <algorithm>
#include <array>

#include "../generators.hpp"
#include "fimp/error.hpp"
#include "fimp/interval.hpp"

using namespace fimp;
using gen::frac;

namespace {

Interval I(long a, long b) { return Interval(Rational(a), Rational(b)); }

// Set-image definition: min and max over the endpoint combinations.
Interval brute(const Interval& a, const Interval& b, char op) {
  std::vector<Rational> v;
  for (const Rational& x : {a.lo(), a.hi()})
    for (const Rational& y : {b.lo(), b.hi()}) {
      Rational r;
      if (op == '+') r = x + y;
      if (op == '-') r = x - y;
      if (op == '/') r = x / y;
      v.push_back(r);
    }
  return Interval(*std::min_element(v.begin(), v.end()), *std::max_element(v.begin(), v.end()));
}

}  // namespace

TEST_SUITE("interval") {
  TEST_CASE("construction rejects reversed endpoints") {
    CHECK_THROWS_AS(I(2, 1), InvalidInterval);
    CHECK(I(3, 3).is_degenerate());
  }

  TEST_CASE("arithmetic examples") {
    CHECK(I(1, 2) + I(3, 5) == I(4, 7));
    CHECK(I(1, 2) + I(0, 0) == I(1, 2));
    CHECK(I(2, 2) + I(-2, -2) == I(0, 0));
    CHECK(I(1, 2) - I(3, 5) == I(-4, -1));
    CHECK(I(1, 2) - I(0, 0) == I(1, 2));
    CHECK(I(1, 2) - I(1, 2) == I(-1, 1));
    CHECK(Rational(-2) * I(1, 3) == I(-6, -2));
    CHECK(Rational(0) * I(-5, 7) == I(0, 0));
    CHECK(Rational(1) * I(-5, 7) == I(-5, 7));
    CHECK(I(1, 2) / I(2, 4) == Interval(frac(1, 4), Rational(1)));
    CHECK(I(3, 5) / I(1, 1) == I(3, 5));
    CHECK_THROWS_AS(I(-2, 2) / I(-1, 1), DivisionByIntervalContainingZero);
    CHECK_THROWS_AS(I(1, 2) / I(0, 1), DivisionByIntervalContainingZero);
  }

  TEST_CASE("order examples") {
    CHECK(leq_lu(I(1, 2), I(1, 3)));
    CHECK(leq_lu(I(1, 2), I(1, 2)));
    CHECK_FALSE(leq_lu(I(1, 4), I(2, 3)));
    CHECK(lt_lu(I(1, 2), I(1, 3)));
    CHECK_FALSE(lt_lu(I(1, 2), I(1, 2)));
    CHECK(lt_lu(I(0, 0), I(1, 1)));
    CHECK(lt_lu_strict(I(0, 0), Interval(frac(1, 2), Rational(1))));
    CHECK_FALSE(lt_lu_strict(I(1, 2), I(1, 3)));
    CHECK_FALSE(lt_lu_strict(I(2, 3), I(1, 4)));
  }

  TEST_CASE("vector order examples") {
    const Interval half(frac(1, 2), Rational(1));
    CHECK(vec_preceq_lu({I(1, 2), I(1, 2)}, {I(1, 2), I(1, 3)}));
    CHECK_FALSE(vec_preceq_lu({I(1, 2), I(1, 2)}, {I(1, 2), I(1, 2)}));
    CHECK_FALSE(vec_preceq_lu({I(0, 5), I(0, 0)}, {I(1, 1), I(2, 2)}));
    CHECK(vec_prec_lu_strict({I(0, 0), I(0, 0)}, {half, half}));
    CHECK_FALSE(vec_prec_lu_strict({I(0, 0), I(1, 2)}, {I(1, 1), I(1, 3)}));
    CHECK_FALSE(vec_prec_lu_strict({half, half}, {half, half}));
    CHECK_THROWS_AS(vec_preceq_lu({I(0, 0)}, {I(0, 0), I(1, 1)}), LengthMismatch);
    CHECK_THROWS_AS(vec_prec_lu_strict({I(0, 0)}, {I(0, 0), I(1, 1)}), LengthMismatch);
  }

  TEST_CASE("endpoint formulas match the set image") {
    gen::Rng rng(11);
    for (int t = 0; t < 500; ++t) {
      const Interval a = gen::interval(rng), b = gen::interval(rng);
      CHECK(a + b == brute(a, b, '+'));
      CHECK(a - b == brute(a, b, '-'));
      const Rational k = gen::rational(rng, -9, 9, 7);
      const Interval s(std::min(k * a.lo(), k * a.hi()), std::max(k * a.lo(), k * a.hi()));
      CHECK(k * a == s);
      if (b.contains(0)) {
        CHECK_THROWS_AS(a / b, DivisionByIntervalContainingZero);
      } else {
        CHECK(a / b == brute(a, b, '/'));
      }
      if (k != 0) CHECK(k * (Rational(1 / k) * a) == a);
    }
  }

  TEST_CASE("order relations: partial order and implications") {
    gen::Rng rng(12);
    for (int t = 0; t < 2000; ++t) {
      const Interval a = gen::interval(rng, 3, 2), b = gen::interval(rng, 3, 2), c = gen::interval(rng, 3, 2);
      CHECK(leq_lu(a, a));
      if (leq_lu(a, b) && leq_lu(b, a)) CHECK(a == b);
      if (leq_lu(a, b) && leq_lu(b, c)) CHECK(leq_lu(a, c));
      if (lt_lu_strict(a, b)) CHECK(lt_lu(a, b));
      if (lt_lu(a, b)) CHECK(leq_lu(a, b));
      CHECK_FALSE(lt_lu_strict(a, a));
      if (lt_lu_strict(a, b) && lt_lu_strict(b, c)) CHECK(lt_lu_strict(a, c));
    }
  }
}
