#include "edskit/heights.hpp"

#include <cmath>
#include <string>

namespace edskit {

namespace {

int decimal_digits(const BigInt& v) {
  return static_cast<int>(mpz_sizeinbase(v.get_mpz_t(), 10));
}

// x(2^k P) by repeated exact doubling, budget-guarded.
RationalPoint power_of_two_multiple(const WeierstrassCurve& curve, const RationalPoint& p, int k,
                                    int digit_budget) {
  RationalPoint q = p;
  for (int i = 0; i < k; ++i) {
    q = dbl(curve, q);
    if (q.is_infinity()) {
      throw TorsionError("height doubling: point has 2-power torsion order", 1 << (i + 1));
    }
    if (decimal_digits(q.x().get_num()) > digit_budget ||
        decimal_digits(q.x().get_den()) > digit_budget) {
      throw BudgetError("height doubling: x(2^" + std::to_string(i + 1) + " P) exceeds the " +
                        std::to_string(digit_budget) + "-digit budget");
    }
  }
  return q;
}

}  // namespace

double naive_height(const Rational& x) {
  BigInt num = abs(x.get_num());
  const BigInt den = x.get_den();
  return log_big(num >= den ? num : den);
}

HeightInterval canonical_height_congruent(std::uint64_t t, const RationalPoint& p, int k,
                                          int digit_budget) {
  if (t < 5 || !is_squarefree(t)) {
    throw DomainError("canonical_height_congruent: T must be squarefree and >= 5");
  }
  if (k < 1) throw DomainError("canonical_height_congruent: k must be >= 1");
  BigInt t2 = BigInt(static_cast<unsigned long>(t)) * static_cast<unsigned long>(t);
  WeierstrassCurve curve(0, 0, 0, -t2, 0);
  if (p.is_infinity() || !contains(curve, p)) {
    throw DomainError("canonical_height_congruent: P not an affine point of y^2 = x^3 - T^2 x");
  }
  if (auto order = torsion_order(curve, p)) {
    throw TorsionError("canonical_height_congruent: P is torsion of order " +
                           std::to_string(*order),
                       *order);
  }

  RationalPoint q = power_of_two_multiple(curve, p, k, digit_budget);
  double hn = naive_height(q.x());
  double n2 = std::ldexp(1.0, 2 * k);  // 4^k
  double log_t = std::log(static_cast<double>(t));
  double log_t2p1 = log_big(BigInt(t2 + 1));
  HeightInterval iv;
  iv.lo = (hn - log_t - 0.347) / n2;
  iv.hi = (hn + 0.5 * log_t2p1 + 0.116) / n2;
  return iv;
}

DoublingEstimate canonical_height_doubling(const WeierstrassCurve& curve, const RationalPoint& p,
                                           int k, int digit_budget) {
  if (k < 2) throw DomainError("canonical_height_doubling: k must be >= 2");
  if (p.is_infinity() || !contains(curve, p)) {
    throw DomainError("canonical_height_doubling: P must be an affine point on the curve");
  }
  if (auto order = torsion_order(curve, p)) {
    throw TorsionError("canonical_height_doubling: P is torsion of order " +
                           std::to_string(*order),
                       *order);
  }
  RationalPoint prev = power_of_two_multiple(curve, p, k - 1, digit_budget);
  RationalPoint last = dbl(curve, prev);
  if (last.is_infinity()) throw TorsionError("canonical_height_doubling: 2-power torsion", 1 << k);
  if (static_cast<int>(mpz_sizeinbase(last.x().get_num().get_mpz_t(), 10)) > digit_budget ||
      static_cast<int>(mpz_sizeinbase(last.x().get_den().get_mpz_t(), 10)) > digit_budget) {
    throw BudgetError("canonical_height_doubling: final doubling exceeds the digit budget");
  }

  DoublingEstimate est;
  double prev_estimate = naive_height(prev.x()) / std::ldexp(1.0, 2 * (k - 1));
  est.estimate = naive_height(last.x()) / std::ldexp(1.0, 2 * k);
  est.empirical_error = std::fabs(est.estimate - prev_estimate);
  return est;
}

double family_height_floor(std::uint64_t t) {
  if (t < 5 || !is_squarefree(t)) {
    throw DomainError("family_height_floor: T must be squarefree and >= 5");
  }
  return 0.25 * std::log(static_cast<double>(t));
}

}  // namespace edskit
