#include "edskit/zsigmondy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "edskit/eds.hpp"

namespace edskit {

namespace {

// Candidates are kept whenever LHS <= RHS + kSlack, so rounding can
// only widen the range that gets checked exactly, never narrow it.
constexpr double kSlack = 1e-9;

// rho(n) never exceeds these (sum of p/p^2 style tails); the odd bound
// drops the p = 2 term.
constexpr double kRhoAll = 0.453;
constexpr double kRhoOdd = 0.203;
// omega(n) <= log2(n) = 1.4427 log n; eta(n) <= 2 log n.
constexpr double kOmegaPerLog = 1.443;

struct ScanShape {
  int start = 1;  // 1 for odd scans, 2 for even; step is always 2
  std::function<double(int, const ArithProfile&)> lhs;
  std::function<double(int, const ArithProfile&)> rhs;
  // Envelope gap g(x) = env_lhs(x) - env_rhs(x) with env_lhs <= lhs and
  // env_rhs >= rhs pointwise; g has positive second derivative, so
  // g(x0) > 0 and g'(x0) > 0 pin g > 0 for all x >= x0.
  std::function<double(double)> env_gap;
  std::function<double(double)> env_gap_deriv;
};

CandidateScan run_scan(const ScanShape& shape, int scan_limit) {
  if (scan_limit < 50) throw DomainError("candidate scan: horizon too small");
  CandidateScan out;
  out.scan_horizon = scan_limit;

  SpfSieve sieve(static_cast<std::uint32_t>(scan_limit));
  for (int n = shape.start; n <= scan_limit; n += 2) {
    ArithProfile ap = sieve.profile(static_cast<std::uint32_t>(n));
    if (shape.lhs(n, ap) <= shape.rhs(n, ap) + kSlack) out.max_index = n;
  }

  for (int n = shape.start;; n += 2) {
    if (n > scan_limit) {
      throw Error("candidate scan: envelope crossover beyond the scan horizon");
    }
    if (shape.env_gap(n) > 1e-6 && shape.env_gap_deriv(n) > 0) {
      out.envelope_crossover = n;
      break;
    }
  }
  if (out.max_index >= out.envelope_crossover) {
    throw Error("candidate scan: exact candidate at or past the envelope crossover");
  }
  return out;
}

double log_t2_plus_1(std::uint64_t t) {
  BigInt tt(static_cast<unsigned long>(t));
  return log_big(BigInt(tt * tt + 1));
}

}  // namespace

std::string point_class_name(PointClass c) {
  switch (c) {
    case PointClass::NegativeX: return "negative_x";
    case PointClass::SquareX: return "square_x";
    case PointClass::Generic: return "generic";
  }
  throw Error("point_class_name: unknown class");
}

PointClass classify_point(const FamilyInstance& instance) {
  const RationalPoint& p = instance.p;
  if (p.is_infinity()) throw DomainError("classify_point: P must be affine");
  const Rational& x = p.x();
  if (x < 0) return PointClass::NegativeX;
  BigInt num = x.get_num();
  BigInt den = x.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    return PointClass::SquareX;
  }
  return PointClass::Generic;
}

CandidateScan even_candidate_scan(std::uint64_t t, double hhat_lo, int scan_limit) {
  if (t < 5) throw DomainError("even_candidate_scan: T must be >= 5");
  if (!(hhat_lo > 0)) throw DomainError("even_candidate_scan: hhat_lo must be positive");
  double log_t = std::log(static_cast<double>(t));
  double tail = 5.0 * log_t + 1.5 * log_t2_plus_1(t) + 1.041;
  double omega_coeff = log_t + 0.347;

  ScanShape shape;
  shape.start = 2;
  shape.lhs = [hhat_lo](int n, const ArithProfile& ap) {
    return static_cast<double>(n) * n * hhat_lo * (0.75 - ap.rho);
  };
  shape.rhs = [omega_coeff, tail](int, const ArithProfile& ap) {
    return ap.eta + ap.omega * omega_coeff + tail;
  };
  shape.env_gap = [hhat_lo, omega_coeff, tail](double x) {
    return x * x * hhat_lo * (0.75 - kRhoAll) -
           (2.0 + kOmegaPerLog * omega_coeff) * std::log(x) - tail;
  };
  shape.env_gap_deriv = [hhat_lo, omega_coeff](double x) {
    return 2.0 * x * hhat_lo * (0.75 - kRhoAll) - (2.0 + kOmegaPerLog * omega_coeff) / x;
  };
  return run_scan(shape, scan_limit);
}

CandidateScan odd_neg_candidate_scan(std::uint64_t t, double hhat_lo, int scan_limit) {
  if (t < 5) throw DomainError("odd_neg_candidate_scan: T must be >= 5");
  if (!(hhat_lo > 0)) throw DomainError("odd_neg_candidate_scan: hhat_lo must be positive");
  double log_t = std::log(static_cast<double>(t));
  double tail = log_t + 0.5 * log_t2_plus_1(t) + 0.116;
  double omega_coeff = log_t + 0.347;

  ScanShape shape;
  shape.start = 1;
  shape.lhs = [hhat_lo](int n, const ArithProfile& ap) {
    return static_cast<double>(n) * n * hhat_lo * (1.0 - ap.rho);
  };
  shape.rhs = [omega_coeff, tail](int, const ArithProfile& ap) {
    return ap.eta + ap.omega * omega_coeff + tail;
  };
  shape.env_gap = [hhat_lo, omega_coeff, tail](double x) {
    return x * x * hhat_lo * (1.0 - kRhoOdd) -
           (2.0 + kOmegaPerLog * omega_coeff) * std::log(x) - tail;
  };
  shape.env_gap_deriv = [hhat_lo, omega_coeff](double x) {
    return 2.0 * x * hhat_lo * (1.0 - kRhoOdd) - (2.0 + kOmegaPerLog * omega_coeff) / x;
  };
  return run_scan(shape, scan_limit);
}

CandidateScan odd_square_candidate_scan(int scan_limit) {
  ScanShape shape;
  shape.start = 1;
  shape.lhs = [](int n, const ArithProfile& ap) {
    double nn = static_cast<double>(n);
    return 0.25 * (nn + 1.0) * (nn + 1.0) - (nn * nn + 1.0) * ap.rho;
  };
  shape.rhs = [](int, const ArithProfile& ap) {
    return 4.0 * (0.621 * ap.eta + 10.596 + 1.216 * ap.omega);
  };
  shape.env_gap = [](double x) {
    double lhs = 0.25 * (x + 1.0) * (x + 1.0) - (x * x + 1.0) * kRhoOdd;
    double rhs = 4.0 * (0.621 * 2.0 + 1.216 * kOmegaPerLog) * std::log(x) + 4.0 * 10.596;
    return lhs - rhs;
  };
  shape.env_gap_deriv = [](double x) {
    return 0.5 * (x + 1.0) - 2.0 * kRhoOdd * x - 4.0 * (0.621 * 2.0 + 1.216 * kOmegaPerLog) / x;
  };
  return run_scan(shape, scan_limit);
}

int even_candidates(std::uint64_t t, double hhat_lo) {
  return even_candidate_scan(t, hhat_lo).max_index;
}

int odd_neg_candidates(std::uint64_t t, double hhat_lo) {
  return odd_neg_candidate_scan(t, hhat_lo).max_index;
}

int odd_square_candidates() { return odd_square_candidate_scan().max_index; }

TheoremBound theorem_bound(FamilyKind kind, PointClass cls) {
  if (kind != FamilyKind::CongruentT) {
    throw DomainError("theorem_bound: bounds are proved for the congruent family only");
  }
  switch (cls) {
    case PointClass::NegativeX: return {10, 3};
    case PointClass::SquareX: return {10, 21};
    case PointClass::Generic: return {10, std::nullopt};
  }
  throw Error("theorem_bound: unknown class");
}

ZsigmondyReport zsigmondy_bound(const FamilyInstance& instance, const ZsigmondyOptions& options) {
  ZsigmondyReport report;
  report.instance_id = instance.id;
  report.family = instance.kind;
  report.t = instance.t;
  report.point_x = instance.p.x();
  report.point_y = instance.p.y();
  report.point_class = classify_point(instance);
  report.scan_horizon = options.scan_limit;

  int needed = std::max(options.observe_length, 1);

  if (instance.kind == FamilyKind::CongruentT) {
    report.hhat = canonical_height_congruent(instance.t, instance.p, options.doublings,
                                             options.digit_budget);
    report.hhat_certified = true;

    CandidateScan even = even_candidate_scan(instance.t, report.hhat.lo, options.scan_limit);
    report.candidate_even_max = even.max_index;
    report.even_envelope_crossover = even.envelope_crossover;
    report.certified_even = true;
    needed = std::max(needed, even.max_index);

    if (report.point_class == PointClass::NegativeX) {
      CandidateScan odd = odd_neg_candidate_scan(instance.t, report.hhat.lo, options.scan_limit);
      report.candidate_odd_max = odd.max_index;
      report.odd_envelope_crossover = odd.envelope_crossover;
      report.certified_odd = true;
      needed = std::max(needed, odd.max_index);
    } else if (report.point_class == PointClass::SquareX) {
      CandidateScan odd = odd_square_candidate_scan(options.scan_limit);
      report.candidate_odd_max = odd.max_index;
      report.odd_envelope_crossover = odd.envelope_crossover;
      report.certified_odd = true;
      needed = std::max(needed, odd.max_index);
    }
  } else {
    DoublingEstimate est = canonical_height_doubling(instance.curve, instance.p,
                                                     std::max(options.doublings, 2),
                                                     options.digit_budget);
    report.hhat.lo = est.estimate - est.empirical_error;
    report.hhat.hi = est.estimate + est.empirical_error;
    report.hhat_certified = false;
  }

  if (needed > options.max_check_length) {
    throw BudgetError("zsigmondy_bound: certification needs " + std::to_string(needed) +
                      " terms, over the configured limit of " +
                      std::to_string(options.max_check_length));
  }

  EdsSequence seq = generate(instance.curve, instance.p, needed, options.digit_budget);
  ZsigmondyObservation obs = observed_zsigmondy(seq);
  report.checked_up_to = needed;
  report.failing_indices = obs.failing;
  report.verified_z = obs.z;
  report.verified_ze = obs.ze;
  report.verified_zo = obs.zo;

  // A certified parity admits no failures past its candidate bound;
  // seeing one would mean the inequality machinery is wrong.
  if (report.certified_even && report.verified_ze > report.candidate_even_max) {
    throw Error("zsigmondy_bound: even failure beyond the certified candidate bound");
  }
  if (report.certified_odd && report.candidate_odd_max &&
      report.verified_zo > *report.candidate_odd_max) {
    throw Error("zsigmondy_bound: odd failure beyond the certified candidate bound");
  }

  report.certified = report.certified_even && report.certified_odd;
  return report;
}

double bennett_lambda(std::uint64_t t) {
  if (t < 2) throw DomainError("bennett_lambda: T must be >= 2");
  double tc = static_cast<double>(t);
  tc = tc * tc * tc;
  double big_l = std::log(std::sqrt(tc) + std::sqrt(tc + 1.0));
  double c = std::log(3.0 * std::sqrt(3.0) / 2.0);
  return 1.0 + (2.0 * big_l + c) / (2.0 * big_l - c);
}

}  // namespace edskit
