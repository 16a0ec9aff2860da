#ifndef EDSKIT_EDS_HPP
#define EDSKIT_EDS_HPP

// Elliptic divisibility sequences. For a non-torsion rational point P
// write x(nP) = A_n / B_n in lowest terms with B_n >= 1; the B_n form a
// divisibility sequence (m | n implies B_m | B_n) and satisfy the gcd
// and valuation lemmas checked here.

#include <vector>

#include "edskit/curve.hpp"
#include "edskit/number_theory.hpp"

namespace edskit {

// Terms whose numerator or denominator outgrow this many decimal digits
// abort generation with BudgetError. Overridable per call; the CLI also
// honors EDSKIT_DIGIT_BUDGET.
constexpr int kDefaultDigitBudget = 50'000;

struct EdsTerm {
  int n = 0;
  BigInt a;  // numerator of x(nP), sign preserved
  BigInt b;  // denominator of x(nP), always >= 1
};

class EdsSequence {
 public:
  EdsSequence(WeierstrassCurve curve, RationalPoint p, std::vector<EdsTerm> terms)
      : curve_(std::move(curve)), p_(std::move(p)), terms_(std::move(terms)) {}

  int length() const { return static_cast<int>(terms_.size()); }
  const EdsTerm& term(int n) const;
  const BigInt& a(int n) const { return term(n).a; }
  const BigInt& b(int n) const { return term(n).b; }

  const WeierstrassCurve& curve() const { return curve_; }
  const RationalPoint& point() const { return p_; }

 private:
  WeierstrassCurve curve_;
  RationalPoint p_;
  std::vector<EdsTerm> terms_;  // terms_[i] is index n = i + 1
};

// Terms 1..n by incremental addition. P must be on the curve and
// non-torsion; hitting the point at infinity mid-run names the order.
EdsSequence generate(const WeierstrassCurve& curve, const RationalPoint& p, int n,
                     int digit_budget = kDefaultDigitBudget);

// gcd(B_m, B_n) = B_gcd(m,n), exactly.
bool check_gcd_lemma(const EdsSequence& seq, int m, int n);

// ord_p(B_{n k}) = ord_p(B_n) + 2 ord_p(k) for an odd prime p | B_n.
// p = 2 is rejected: the valuation lemma's formal-group argument is
// only applied at odd primes here, and the even case is left untested
// by policy.
bool check_ord_lemma(const EdsSequence& seq, std::uint64_t p, int n, int k);

// For sequences on y^2 = x^3 - T^2 x only: recomputes x(2mP) through
// the duplication formula
//   x(2mP) = (A^2 + T^2 B^2)^2 / (4 A B (A^2 - T^2 B^2)),  x(mP) = A/B,
// verifies it reduces to term 2m, and that the numerator/denominator
// gcd is at most 4 T^4.
bool check_duplication_identity(const EdsSequence& seq, int m);

}  // namespace edskit

#endif
