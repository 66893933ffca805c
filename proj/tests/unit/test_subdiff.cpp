#include <doctest.h>

#include <cmath>
#include <limits>

#include "../generators.hpp"
#include "fimp/error.hpp"
#include "fimp/subdiff.hpp"

using namespace fimp;
using gen::frac;

namespace {

Vec v1(long a) { return Vec{Rational(a)}; }

std::vector<std::vector<Vec>> singletons(std::initializer_list<long> xs) {
  std::vector<std::vector<Vec>> out;
  for (long x : xs) out.push_back({v1(x)});
  return out;
}

SubdiffSet at0(const char* text) { return subdiff(parse_expr(text, 1), Point{Rational(0)}); }

}  // namespace

TEST_SUITE("subdiff") {
  TEST_CASE("abs at zero is the hull of the two one-sided slopes") {
    const SubdiffSet s = at0("abs(x1)");
    REQUIRE(s.polytopes.size() == 1);
    CHECK(s.polytopes[0].size() == 2);
    CHECK(contains(s, v1(0)));
    CHECK(contains(s, Vec{frac(1, 3)}));
    CHECK_FALSE(contains(s, v1(2)));
  }

  TEST_CASE("negated abs at zero is a union of two points") {
    const SubdiffSet s = at0("-abs(x1)");
    CHECK(same_sets(s, SubdiffSet{SubdiffKind::Limiting, singletons({-1, 1}), false}));
    CHECK_FALSE(contains(s, v1(0)));
  }

  TEST_CASE("smooth points give the gradient") {
    CHECK(same_sets(at0("-x1^3 + 1"), SubdiffSet{SubdiffKind::Limiting, singletons({0}), false}));
    const Expr g = parse_expr("x1^2 + 2", 1);
    const SubdiffSet up = upper_subdiff(g, Point{Rational(0)});
    CHECK(up.kind == SubdiffKind::Upper);
    CHECK(same_sets(up, SubdiffSet{SubdiffKind::Upper, singletons({0}), false}));
    CHECK(same_sets(upper_subdiff(parse_expr("-2*x1 + 1", 1), Point{Rational(0)}),
                    SubdiffSet{SubdiffKind::Upper, singletons({-2}), false}));
  }

  TEST_CASE("upper subdifferential of abs at zero") {
    const SubdiffSet up = upper_subdiff(parse_expr("abs(x1)", 1), Point{Rational(0)});
    CHECK(same_sets(up, SubdiffSet{SubdiffKind::Upper, singletons({-1, 1}), false}));
  }

  TEST_CASE("unsupported kinks are rejected") {
    CHECK_THROWS_AS(at0("abs(x1) * x1"), UnsupportedKink);
    CHECK_THROWS_AS(at0("abs(abs(x1))"), UnsupportedKink);
    CHECK_THROWS_AS(at0("abs(x1)^2"), UnsupportedKink);
    CHECK_THROWS_AS(at0("max(abs(x1), x1)"), UnsupportedKink);
    CHECK_NOTHROW(at0("3 * abs(x1) + max(x1, -x1)"));
    // Kinks that are not active at the point are fine anywhere.
    CHECK_NOTHROW(subdiff(parse_expr("abs(x1) * x1", 1), Point{Rational(1)}));
  }

  TEST_CASE("max at a tie is the hull of the active gradients") {
    const SubdiffSet s = subdiff(parse_expr("max(x1 + x2, x1 - x2, -10)", 2), Point{Rational(0), Rational(0)});
    CHECK(contains(s, Vec{Rational(1), Rational(0)}));
    CHECK(contains(s, Vec{Rational(1), Rational(1)}));
    CHECK_FALSE(contains(s, Vec{Rational(0), Rational(0)}));
  }

  TEST_CASE("smooth points give a singleton equal to the gradient") {
    gen::Rng rng(31);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = static_cast<std::size_t>(gen::uniform_int(rng, 1, 3));
      const Expr e = gen::random_expr(rng, n, 3, false);
      Point x;
      for (std::size_t k = 0; k < n; ++k) x.push_back(gen::rational(rng, -3, 3, 4));
      const SubdiffSet s = subdiff(e, x);
      REQUIRE(s.is_singleton());
      CHECK(s.polytopes[0][0] == gradient(e, x, n));
    }
  }

  TEST_CASE("upper subdifferential is the negated subdifferential of the negation") {
    gen::Rng rng(32);
    int checked = 0;
    for (int t = 0; t < 400; ++t) {
      const std::size_t n = static_cast<std::size_t>(gen::uniform_int(rng, 1, 2));
      const Expr e = gen::random_expr(rng, n, 3, true);
      // Integer points make kinks active often.
      Point x;
      for (std::size_t k = 0; k < n; ++k) x.push_back(Rational(gen::uniform_int(rng, -1, 1)));
      try {
        const SubdiffSet up = upper_subdiff(e, x);
        CHECK(same_sets(up, negated(subdiff(-e, x))));
        ++checked;
      } catch (const UnsupportedKink&) {
      }
    }
    CHECK(checked > 100);
  }

  TEST_CASE("sum rule inclusion") {
    gen::Rng rng(33);
    int kinked = 0;
    for (int t = 0; t < 300; ++t) {
      const std::size_t n = static_cast<std::size_t>(gen::uniform_int(rng, 1, 2));
      // One kink of a smooth argument per summand keeps both in the supported grammar.
      auto kink = [&](int which) {
        const Expr u = gen::affine(rng, n, 2, 1), w = gen::affine(rng, n, 2, 1);
        switch (which) {
          case 0: return Expr::abs(u);
          case 1: return -Expr::abs(u);
          case 2: return Expr::max({u, w});
          default: return Expr::min({u, w}) + gen::sq(w);
        }
      };
      const Expr a = kink(static_cast<int>(gen::uniform_int(rng, 0, 3)));
      const Expr b = kink(static_cast<int>(gen::uniform_int(rng, 0, 3)));
      const Point x = zeros(n);
      const SubdiffSet sa = subdiff(a, x), sb = subdiff(b, x), ss = subdiff(a + b, x);
      if (!sa.is_singleton() || !sb.is_singleton()) ++kinked;
      for (const Vec& g : ss.all_generators()) CHECK(in_minkowski_sum(sa, sb, g));
    }
    CHECK(kinked > 50);
  }

  TEST_CASE("max rule inclusion on two smooth children") {
    gen::Rng rng(34);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = static_cast<std::size_t>(gen::uniform_int(rng, 1, 2));
      // Children vanish at the origin, so both are active there.
      auto child = [&] {
        Expr lin = gen::c(Rational(0)), quad = gen::c(Rational(0));
        for (std::size_t k = 0; k < n; ++k) {
          lin = lin + gen::c(gen::rational(rng, -3, 3, 2)) * gen::var(k);
          quad = quad + gen::c(gen::rational(rng, -3, 3, 2)) * gen::var(k);
        }
        return lin + gen::sq(quad);
      };
      const Expr u = child(), w = child();
      const Point x = zeros(n);
      const std::vector<Vec> active{gradient(u, x, n), gradient(w, x, n)};
      const SubdiffSet s = subdiff(Expr::max({u, w}), x);
      for (const Vec& g : s.all_generators()) CHECK(in_hull(active, g));
      const SubdiffSet sm = subdiff(Expr::min({u, w}), x);
      for (const Vec& g : sm.all_generators()) CHECK(in_hull(active, g));
    }
  }

  TEST_CASE("Fermat rule at the best grid point") {
    gen::Rng rng(35);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = static_cast<std::size_t>(gen::uniform_int(rng, 1, 2));
      // Coercive: positive quadratic bowl plus a small cubic-free perturbation.
      Expr e = gen::c(Rational(0));
      for (std::size_t k = 0; k < n; ++k)
        e = e + gen::c(gen::positive(rng, 4, 2)) * gen::sq(gen::var(k) - gen::c(gen::rational(rng, -1, 1, 2)));
      e = e + gen::sq(gen::affine(rng, n, 1, 2));
      const unsigned steps = 64;
      const GridSpec grid = gen::box_grid(Vec(n, Rational(-2)), Vec(n, Rational(2)), std::vector<unsigned>(n, steps));
      Point best;
      Rational best_value;
      for (const Point& x : grid.points()) {
        const Rational v = eval(e, x);
        if (best.empty() || v < best_value) best = x, best_value = v;
      }
      const Vec g = gradient(e, best, n);
      double norm = 0;
      for (const Rational& q : g) norm = std::max(norm, std::abs(to_double(q)));
      const double step = 4.0 / steps;
      // Second derivatives are at most 2 * (4 + 1) * n per axis here.
      CHECK(norm <= 10.0 * static_cast<double>(n) * step);
    }
  }
}
