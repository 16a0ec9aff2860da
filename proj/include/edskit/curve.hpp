#ifndef EDSKIT_CURVE_HPP
#define EDSKIT_CURVE_HPP

// Exact rational arithmetic on elliptic curves in generalized
// Weierstrass form
//
//   y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
//
// including the named curve families the divisibility machinery is run
// on. All group-law work is over Q with gmp rationals; nothing here is
// approximate.

#include <cstdint>
#include <optional>
#include <string>

#include "edskit/number_theory.hpp"

namespace edskit {

struct WeierstrassCurve {
  BigInt a1, a2, a3, a4, a6;

  // Standard quantities derived from the a-invariants. They satisfy
  // 4*b8 = b2*b6 - b4^2, which the constructor asserts.
  BigInt b2, b4, b6, b8;
  BigInt discriminant;

  WeierstrassCurve(BigInt a1_, BigInt a2_, BigInt a3_, BigInt a4_, BigInt a6_);
};

// Affine rational point or the point at infinity.
class RationalPoint {
 public:
  RationalPoint() : infinity_(true) {}
  RationalPoint(Rational x, Rational y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

  static RationalPoint infinity() { return RationalPoint(); }

  bool is_infinity() const { return infinity_; }
  const Rational& x() const;
  const Rational& y() const;

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  bool infinity_;
  Rational x_, y_;
};

bool contains(const WeierstrassCurve& e, const RationalPoint& p);

RationalPoint negate(const WeierstrassCurve& e, const RationalPoint& p);
RationalPoint add(const WeierstrassCurve& e, const RationalPoint& p, const RationalPoint& q);
RationalPoint dbl(const WeierstrassCurve& e, const RationalPoint& p);

// n may be negative or zero. Double-and-add; exact.
RationalPoint mul(const WeierstrassCurve& e, long n, const RationalPoint& p);

// Order of p in E(Q) if it is torsion, nullopt otherwise. By Mazur the
// order of a rational torsion point is at most 12, so twelve additions
// decide.
std::optional<int> torsion_order(const WeierstrassCurve& e, const RationalPoint& p);

// Root-versus-discriminant inequality used to control heights on curves
// y^2 = x(x - r1)(x - r2): checks
//   max{ |log|r1||, |log|r2|| }  <=  (3/2) log D,  D = (r1 r2 (r1 - r2))^2.
// Requires r1 != r2 and r1 r2 != 0 (nonsingular configuration).
bool two_torsion_root_bound_check(const BigInt& r1, const BigInt& r2);

enum class FamilyKind { CongruentT, TwistT, ProductT, CubeT, Somos4Curve };

std::string family_name(FamilyKind kind);

struct FamilyInstance {
  FamilyKind kind;
  std::uint64_t t = 0;  // 0 for Somos4Curve
  WeierstrassCurve curve;
  RationalPoint p;                  // marked non-torsion point
  std::optional<RationalPoint> q;  // rational 2-torsion where the family has one
  std::string id;                   // "congruent_t5", "somos4", ...
};

struct PointSearchBudget {
  int max_e = 10;          // denominator exponent bound: x = a / e^2
  long max_numerator = 5000;
};

// Deterministic small-height point search on y^2 = x^3 - T^2 x. Scans
// x = a/e^2 with e ascending, a ascending, coprimality enforced, and
// returns the first non-torsion rational point found, if any. Rank-0
// values of T (non-congruent numbers) correctly yield nullopt.
std::optional<RationalPoint> find_point_congruent(std::uint64_t t,
                                                  const PointSearchBudget& budget = {});

// Builds curve + marked points for a family member, validating the
// family's parameter constraints (CongruentT needs squarefree T >= 5,
// TwistT and CubeT need T > 1, ProductT needs T > 0) and that the
// marked point lies on the curve and is non-torsion. CongruentT has no
// canonical marked point; pass one, or leave it to the search.
FamilyInstance family_instantiate(FamilyKind kind, std::uint64_t t,
                                  std::optional<RationalPoint> point_override = std::nullopt);

}  // namespace edskit

#endif
