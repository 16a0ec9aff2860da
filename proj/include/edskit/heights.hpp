#ifndef EDSKIT_HEIGHTS_HPP
#define EDSKIT_HEIGHTS_HPP

// Heights in nats, normalized so that hhat(nP) = n^2 hhat(P). On the
// congruent family y^2 = x^3 - T^2 x the naive height of x(nP) tracks
// n^2 hhat(P) within explicit constants,
//
//   n^2 hhat(P) - log(T^2+1)/2 - 0.116 <= h(x(nP)) <= n^2 hhat(P) + log T + 0.347,
//
// which turns k doublings into a certified interval for hhat(P) of
// width (log T + log(T^2+1)/2 + 0.463) / 4^k. Other curves only get
// the doubling-limit estimate with an empirical error.

#include <cstdint>

#include "edskit/curve.hpp"
#include "edskit/eds.hpp"

namespace edskit {

struct HeightInterval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

// h(a/b) = log max(|a|, b) for a/b in lowest terms; h(0) = 0.
double naive_height(const Rational& x);

// Certified interval for hhat(P) on y^2 = x^3 - T^2 x via k doublings.
// P must be on the curve and non-torsion; k >= 1.
HeightInterval canonical_height_congruent(std::uint64_t t, const RationalPoint& p, int k = 5,
                                          int digit_budget = kDefaultDigitBudget);

struct DoublingEstimate {
  double estimate = 0.0;         // h(x(2^k P)) / 4^k
  double empirical_error = 0.0;  // gap to the k-1 estimate; not a certified bound
};

// Doubling-limit estimator for any curve. k >= 2 so the empirical
// error is defined.
DoublingEstimate canonical_height_doubling(const WeierstrassCurve& curve, const RationalPoint& p,
                                           int k, int digit_budget = kDefaultDigitBudget);

// hhat(P) >= log(T)/4 for every non-torsion P on the congruent curve;
// T >= 5 squarefree required.
double family_height_floor(std::uint64_t t);

}  // namespace edskit

#endif
