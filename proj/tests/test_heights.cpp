#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "edskit/heights.hpp"

using namespace edskit;

TEST_CASE("naive_height") {
  CHECK(naive_height(Rational(0)) == doctest::Approx(0.0));
  CHECK(naive_height(Rational(-4)) == doctest::Approx(std::log(4.0)));
  CHECK(naive_height(Rational(BigInt(1681), BigInt(144))) == doctest::Approx(7.427144133876070));
  CHECK(naive_height(Rational(BigInt(1), BigInt(7))) == doctest::Approx(std::log(7.0)));
  CHECK(naive_height(Rational(1)) == doctest::Approx(0.0));
}

TEST_CASE("certified interval for the 25-curve marked point") {
  RationalPoint p(Rational(-4), Rational(6));

  auto k5 = canonical_height_congruent(5, p, 5);
  CHECK(k5.lo == doctest::Approx(1.8975554141430009).epsilon(1e-9));
  CHECK(k5.hi == doctest::Approx(1.9011701467420680).epsilon(1e-9));
  CHECK(k5.lo < 1.899);
  CHECK(1.899 < k5.hi);
  CHECK(k5.width() < 0.0037);

  auto k6 = canonical_height_congruent(5, p, 6);
  CHECK(k6.lo == doctest::Approx(1.898989).epsilon(1e-5));
  CHECK(k6.hi == doctest::Approx(1.899893).epsilon(1e-5));

  // By k = 7 the window has moved past 1.899 itself: the true height
  // is a little above 1.8994.
  auto k7 = canonical_height_congruent(5, p, 7);
  CHECK(k7.lo == doctest::Approx(1.899350).epsilon(1e-5));
  CHECK(k7.hi == doctest::Approx(1.899576).epsilon(1e-5));
  CHECK(k7.lo > 1.899);

  // x(2^8 P) runs to ~54k digits, past the default budget.
  auto k8 = canonical_height_congruent(5, p, 8, /*digit_budget=*/100000);
  CHECK(k8.lo == doctest::Approx(1.899447).epsilon(1e-5));
  CHECK(k8.hi == doctest::Approx(1.899504).epsilon(1e-5));

  // On this instance each refinement lands inside the k = 5 window.
  for (const auto& iv : {k6, k7, k8}) {
    CHECK(iv.lo >= k5.lo - 1e-12);
    CHECK(iv.hi <= k5.hi + 1e-12);
  }
}

TEST_CASE("interval width follows the closed form and contracts by 4") {
  RationalPoint p(Rational(-4), Rational(6));
  double t = 5.0;
  double numerator = std::log(t) + 0.5 * std::log(t * t + 1.0) + 0.463;
  double prev_width = 0.0;
  for (int k = 1; k <= 6; ++k) {
    auto iv = canonical_height_congruent(5, p, k);
    double expected = numerator / std::ldexp(1.0, 2 * k);
    CHECK(iv.width() == doctest::Approx(expected).epsilon(1e-12));
    if (k > 1) CHECK(iv.width() == doctest::Approx(prev_width / 4.0).epsilon(1e-12));
    prev_width = iv.width();
  }
}

TEST_CASE("interval stays above the family floor") {
  for (std::uint64_t t : {5ull, 6ull, 7ull, 13ull, 14ull, 15ull}) {
    auto inst = family_instantiate(FamilyKind::CongruentT, t);
    auto iv = canonical_height_congruent(t, inst.p, 5);
    CHECK_MESSAGE(iv.lo >= family_height_floor(t) - 1e-9, "T = " << t);
    CHECK(iv.lo > 0.0);
    CHECK(iv.lo <= iv.hi);
  }
}

TEST_CASE("sandwich: naive heights of multiples track n^2 hhat") {
  for (std::uint64_t t : {5ull, 6ull, 7ull, 13ull}) {
    auto inst = family_instantiate(FamilyKind::CongruentT, t);
    auto iv = canonical_height_congruent(t, inst.p, 5);
    double dt = static_cast<double>(t);
    double down = 0.5 * std::log(dt * dt + 1.0) + 0.116;
    double up = std::log(dt) + 0.347;
    RationalPoint walk = inst.p;
    for (int n = 1; n <= 12; ++n) {
      if (n > 1) walk = add(inst.curve, walk, inst.p);
      double h = naive_height(walk.x());
      double nn = static_cast<double>(n) * n;
      CHECK_MESSAGE(h >= nn * iv.lo - down - 1e-9, "T = " << t << ", n = " << n);
      CHECK_MESSAGE(h <= nn * iv.hi + up + 1e-9, "T = " << t << ", n = " << n);
    }
  }
}

TEST_CASE("congruent interval rejects bad arguments") {
  RationalPoint p(Rational(-4), Rational(6));
  CHECK_THROWS_AS(canonical_height_congruent(5, p, 0), DomainError);
  CHECK_THROWS_AS(canonical_height_congruent(4, p, 5), DomainError);   // T < 5
  CHECK_THROWS_AS(canonical_height_congruent(12, p, 5), DomainError);  // not squarefree
  CHECK_THROWS_AS(canonical_height_congruent(5, RationalPoint(Rational(1), Rational(1)), 5),
                  DomainError);  // off curve

  try {
    canonical_height_congruent(5, RationalPoint(Rational(0), Rational(0)), 5);
    FAIL("expected TorsionError");
  } catch (const TorsionError& e) {
    CHECK(e.order == 2);
  }

  CHECK_THROWS_AS(canonical_height_congruent(5, p, 10, /*digit_budget=*/100), BudgetError);
}

TEST_CASE("doubling estimator on the Somos curve") {
  auto inst = family_instantiate(FamilyKind::Somos4Curve, 0);
  auto est = canonical_height_doubling(inst.curve, inst.p, 6);
  CHECK(est.estimate > 0.0);
  CHECK(est.empirical_error < 1e-2);

  // Estimates at nearby k agree closely; the gap sequence itself is
  // not monotone (local contributions wobble between doublings).
  auto est5 = canonical_height_doubling(inst.curve, inst.p, 5);
  CHECK(est5.empirical_error < 1e-2);
  CHECK(std::abs(est.estimate - est5.estimate) < 1e-5);
}

TEST_CASE("doubling estimator agrees with the certified interval") {
  auto inst = family_instantiate(FamilyKind::CongruentT, 5);
  auto iv = canonical_height_congruent(5, inst.p, 5);
  auto est = canonical_height_doubling(inst.curve, inst.p, 5);
  CHECK(est.estimate >= iv.lo - 1e-12);
  CHECK(est.estimate <= iv.hi + 1e-12);
}

TEST_CASE("doubling estimator preconditions") {
  auto inst = family_instantiate(FamilyKind::Somos4Curve, 0);
  CHECK_THROWS_AS(canonical_height_doubling(inst.curve, inst.p, 1), DomainError);
  CHECK_THROWS_AS(
      canonical_height_doubling(inst.curve, RationalPoint(Rational(2), Rational(5)), 4),
      DomainError);

  auto e25 = family_instantiate(FamilyKind::CongruentT, 5);
  CHECK_THROWS_AS(
      canonical_height_doubling(e25.curve, RationalPoint(Rational(0), Rational(0)), 4),
      TorsionError);
}

TEST_CASE("family_height_floor") {
  CHECK(family_height_floor(5) == doctest::Approx(0.25 * std::log(5.0)));
  CHECK(family_height_floor(1000003) == doctest::Approx(0.25 * std::log(1000003.0)));
  CHECK_THROWS_AS(family_height_floor(4), DomainError);
  CHECK_THROWS_AS(family_height_floor(12), DomainError);  // not squarefree
}
