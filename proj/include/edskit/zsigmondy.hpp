#ifndef EDSKIT_ZSIGMONDY_HPP
#define EDSKIT_ZSIGMONDY_HPP

// Explicit index bounds past which every B_n must have a primitive
// divisor, and their certification by exhaustive checks below the
// bound. On y^2 = x^3 - T^2 x (T >= 5 squarefree) a failure of the
// primitive-divisor property at index n forces one of
//
//   even n:          n^2 hhat (3/4 - rho(n)) <= eta(n) + omega(n)(log T + 0.347)
//                                               + 5 log T + (3/2) log(T^2+1) + 1.041
//   odd n, x(P) < 0: n^2 hhat (1 - rho(n))   <= eta(n) + omega(n)(log T + 0.347)
//                                               + log T + (1/2) log(T^2+1) + 0.116
//   odd n, x(P) square:  (n+1)^2/4 - (n^2+1) rho(n)
//                                   <= 4 (0.621 eta(n) + 10.596 + 1.216 omega(n))
//
// so the largest index satisfying the relevant inequality bounds the
// even/odd Zsigmondy numbers. Scans are conservative (slack 1e-9) and
// close with an envelope argument (rho <= 0.453, 0.203 on odd n;
// omega <= 1.443 log n; eta <= 2 log n) proving no candidates exist
// beyond the reported crossover.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edskit/curve.hpp"
#include "edskit/heights.hpp"
#include "edskit/primitive.hpp"

namespace edskit {

enum class PointClass { NegativeX, SquareX, Generic };

std::string point_class_name(PointClass c);

// NegativeX when x(P) < 0; SquareX when numerator and denominator of
// x(P) in lowest terms are both perfect squares; Generic otherwise.
PointClass classify_point(const FamilyInstance& instance);

struct CandidateScan {
  int max_index = 0;           // largest index satisfying the inequality, 0 if none
  int scan_horizon = 0;        // indices checked exactly: 1..scan_horizon
  int envelope_crossover = 0;  // all n >= this fail the envelope form of the inequality
};

CandidateScan even_candidate_scan(std::uint64_t t, double hhat_lo, int scan_limit = 10'000);
CandidateScan odd_neg_candidate_scan(std::uint64_t t, double hhat_lo, int scan_limit = 10'000);
CandidateScan odd_square_candidate_scan(int scan_limit = 10'000);

int even_candidates(std::uint64_t t, double hhat_lo);
int odd_neg_candidates(std::uint64_t t, double hhat_lo);
int odd_square_candidates();

struct TheoremBound {
  int ze = 0;
  std::optional<int> zo;
};

// The paper-level uniform bounds for the congruent family: Ze <= 10
// always, Zo <= 3 when x(P) < 0, Zo <= 21 when x(P) is a square, no
// odd bound otherwise. Only CongruentT qualifies.
TheoremBound theorem_bound(FamilyKind kind, PointClass cls);

struct ZsigmondyOptions {
  int doublings = 5;           // k for the certified height interval
  int observe_length = 40;     // always check at least this many terms
  int scan_limit = 10'000;     // exact-scan horizon for the inequalities
  int max_check_length = 1'000;  // refuse certification runs needing more terms
  int digit_budget = kDefaultDigitBudget;
};

struct ZsigmondyReport {
  std::string instance_id;
  FamilyKind family = FamilyKind::CongruentT;
  std::uint64_t t = 0;
  Rational point_x, point_y;
  PointClass point_class = PointClass::Generic;

  HeightInterval hhat;
  bool hhat_certified = false;

  int candidate_even_max = 0;
  std::optional<int> candidate_odd_max;
  int even_envelope_crossover = 0;
  std::optional<int> odd_envelope_crossover;
  int scan_horizon = 0;

  int checked_up_to = 0;
  std::vector<int> failing_indices;
  int verified_z = 0;
  int verified_ze = 0;
  int verified_zo = 0;

  bool certified_even = false;
  bool certified_odd = false;
  bool certified = false;  // both parities certified
};

// End-to-end pipeline: height interval, candidate scans as the point
// class allows, sequence generation, and per-index primitive checks.
// CongruentT instances come back certified (even parity always, odd
// parity when the point class has an odd inequality); anything else is
// observed-only with certified = false.
ZsigmondyReport zsigmondy_bound(const FamilyInstance& instance, const ZsigmondyOptions& options = {});

// lambda(T) = 1 + (2 L + c) / (2 L - c) with L = log(sqrt(T^3) +
// sqrt(T^3 + 1)) and c = log(3 sqrt(3) / 2); strictly decreasing, > 2,
// and tends to 2 as T grows. T >= 2.
double bennett_lambda(std::uint64_t t);

}  // namespace edskit

#endif
