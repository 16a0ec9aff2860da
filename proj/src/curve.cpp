#include "edskit/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace edskit {

WeierstrassCurve::WeierstrassCurve(BigInt a1_, BigInt a2_, BigInt a3_, BigInt a4_, BigInt a6_)
    : a1(std::move(a1_)),
      a2(std::move(a2_)),
      a3(std::move(a3_)),
      a4(std::move(a4_)),
      a6(std::move(a6_)) {
  b2 = a1 * a1 + 4 * a2;
  b4 = 2 * a4 + a1 * a3;
  b6 = a3 * a3 + 4 * a6;
  b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  if (4 * b8 != b2 * b6 - b4 * b4) throw Error("WeierstrassCurve: b-quantity identity broken");
  discriminant = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  if (discriminant == 0) throw DomainError("WeierstrassCurve: singular (discriminant = 0)");
}

const Rational& RationalPoint::x() const {
  if (infinity_) throw DomainError("RationalPoint: infinity has no x");
  return x_;
}

const Rational& RationalPoint::y() const {
  if (infinity_) throw DomainError("RationalPoint: infinity has no y");
  return y_;
}

bool contains(const WeierstrassCurve& e, const RationalPoint& p) {
  if (p.is_infinity()) return true;
  const Rational& x = p.x();
  const Rational& y = p.y();
  Rational lhs = y * y + e.a1 * x * y + e.a3 * y;
  Rational rhs = x * x * x + e.a2 * x * x + e.a4 * x + e.a6;
  return lhs == rhs;
}

RationalPoint negate(const WeierstrassCurve& e, const RationalPoint& p) {
  if (p.is_infinity()) return p;
  return RationalPoint(p.x(), -p.y() - e.a1 * p.x() - e.a3);
}

namespace {

// Chord-or-tangent step once the slope lambda and intercept nu of the
// line through the summands are known.
RationalPoint line_third_point(const WeierstrassCurve& e, const Rational& lambda,
                               const Rational& nu, const Rational& x1, const Rational& x2) {
  Rational x3 = lambda * lambda + e.a1 * lambda - e.a2 - x1 - x2;
  Rational y3 = -(lambda + e.a1) * x3 - nu - e.a3;
  return RationalPoint(x3, y3);
}

}  // namespace

RationalPoint dbl(const WeierstrassCurve& e, const RationalPoint& p) {
  if (p.is_infinity()) return p;
  const Rational& x = p.x();
  const Rational& y = p.y();
  Rational denom = 2 * y + e.a1 * x + e.a3;
  if (denom == 0) return RationalPoint::infinity();  // 2-torsion
  Rational lambda = (3 * x * x + 2 * e.a2 * x + e.a4 - e.a1 * y) / denom;
  Rational nu = y - lambda * x;
  return line_third_point(e, lambda, nu, x, x);
}

RationalPoint add(const WeierstrassCurve& e, const RationalPoint& p, const RationalPoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  if (p.x() == q.x()) {
    if (q == negate(e, p)) return RationalPoint::infinity();
    return dbl(e, p);  // same x, not opposite: the points coincide
  }
  Rational lambda = (q.y() - p.y()) / (q.x() - p.x());
  Rational nu = p.y() - lambda * p.x();
  return line_third_point(e, lambda, nu, p.x(), q.x());
}

RationalPoint mul(const WeierstrassCurve& e, long n, const RationalPoint& p) {
  if (n == 0) return RationalPoint::infinity();
  if (n < 0) return negate(e, mul(e, -n, p));
  RationalPoint acc = RationalPoint::infinity();
  RationalPoint base = p;
  unsigned long k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1) acc = add(e, acc, base);
    k >>= 1;
    if (k) base = dbl(e, base);
  }
  return acc;
}

std::optional<int> torsion_order(const WeierstrassCurve& e, const RationalPoint& p) {
  if (p.is_infinity()) return 1;
  RationalPoint walk = p;
  for (int k = 2; k <= 12; ++k) {
    walk = add(e, walk, p);
    if (walk.is_infinity()) return k;
  }
  return std::nullopt;
}

bool two_torsion_root_bound_check(const BigInt& r1, const BigInt& r2) {
  if (r1 == r2 || r1 == 0 || r2 == 0) {
    throw DomainError("two_torsion_root_bound_check: roots must be nonzero and distinct");
  }
  BigInt prod = r1 * r2 * (r1 - r2);
  BigInt disc = prod * prod;
  double lhs = std::max(std::fabs(log_big(abs(r1))), std::fabs(log_big(abs(r2))));
  return lhs <= 1.5 * log_big(disc) + 1e-12;
}

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::CongruentT: return "congruent";
    case FamilyKind::TwistT: return "twist";
    case FamilyKind::ProductT: return "product";
    case FamilyKind::CubeT: return "cube";
    case FamilyKind::Somos4Curve: return "somos4";
  }
  throw Error("family_name: unknown kind");
}

std::optional<RationalPoint> find_point_congruent(std::uint64_t t, const PointSearchBudget& budget) {
  BigInt t2 = BigInt(t) * t;
  WeierstrassCurve e(0, 0, 0, -t2, 0);
  for (int den = 1; den <= budget.max_e; ++den) {
    BigInt e2 = BigInt(den) * den;
    BigInt e3 = e2 * den;
    BigInt e4 = e2 * e2;
    for (long a = -budget.max_numerator; a <= budget.max_numerator; ++a) {
      if (a == 0) continue;
      if (std::gcd(std::labs(a), static_cast<long>(den)) != 1) continue;
      BigInt num = BigInt(a) * a * a - t2 * a * e4;  // (a/e^2)^3 - T^2 (a/e^2) times e^6
      if (num <= 0) continue;                         // num = 0 is the 2-torsion locus
      if (!mpz_perfect_square_p(num.get_mpz_t())) continue;
      BigInt r;
      mpz_sqrt(r.get_mpz_t(), num.get_mpz_t());
      Rational x(BigInt(a), e2);
      Rational y(r, e3);
      x.canonicalize();
      y.canonicalize();
      RationalPoint p(x, y);
      if (!torsion_order(e, p)) return p;
    }
  }
  return std::nullopt;
}

FamilyInstance family_instantiate(FamilyKind kind, std::uint64_t t,
                                  std::optional<RationalPoint> point_override) {
  auto make = [&](WeierstrassCurve curve, RationalPoint p, std::optional<RationalPoint> q,
                  std::string id) {
    if (!contains(curve, p)) throw DomainError("family_instantiate: marked point not on curve");
    if (auto order = torsion_order(curve, p)) {
      throw TorsionError("family_instantiate: marked point is torsion of order " +
                             std::to_string(*order),
                         *order);
    }
    if (q && !contains(curve, *q)) throw DomainError("family_instantiate: Q not on curve");
    if (q && !dbl(curve, *q).is_infinity()) throw DomainError("family_instantiate: Q not 2-torsion");
    return FamilyInstance{kind, t, std::move(curve), std::move(p), std::move(q), std::move(id)};
  };

  BigInt tt = BigInt(static_cast<unsigned long>(t));
  switch (kind) {
    case FamilyKind::CongruentT: {
      if (t < 5) throw DomainError("family_instantiate: CongruentT requires T >= 5");
      if (!is_squarefree(t)) throw DomainError("family_instantiate: T not squarefree");
      WeierstrassCurve curve(0, 0, 0, -tt * tt, 0);
      std::optional<RationalPoint> p = point_override;
      if (!p) p = find_point_congruent(t);
      if (!p) {
        throw DomainError("family_instantiate: no non-torsion point found for T = " +
                          std::to_string(t) + " within the search budget");
      }
      return make(std::move(curve), *p, RationalPoint(Rational(0), Rational(0)),
                  "congruent_t" + std::to_string(t));
    }
    case FamilyKind::TwistT: {
      if (t < 2) throw DomainError("family_instantiate: TwistT requires T > 1");
      WeierstrassCurve curve(0, 0, 0, BigInt(-tt * tt * (tt * tt - 1)), 0);
      Rational c(BigInt(1 - tt * tt));
      RationalPoint p = point_override ? *point_override : RationalPoint(c, c);
      return make(std::move(curve), std::move(p), RationalPoint(Rational(0), Rational(0)),
                  "twist_t" + std::to_string(t));
    }
    case FamilyKind::ProductT: {
      if (t < 1) throw DomainError("family_instantiate: ProductT requires T > 0");
      // y^2 = (x + 1)(x - T)(x - 4T)
      WeierstrassCurve curve(0, BigInt(1 - 5 * tt), 0, BigInt(4 * tt * tt - 5 * tt),
                             BigInt(4 * tt * tt));
      RationalPoint p = point_override ? *point_override
                                       : RationalPoint(Rational(0), Rational(BigInt(2 * tt)));
      return make(std::move(curve), std::move(p), RationalPoint(Rational(-1), Rational(0)),
                  "product_t" + std::to_string(t));
    }
    case FamilyKind::CubeT: {
      if (t < 2) throw DomainError("family_instantiate: CubeT requires T > 1");
      WeierstrassCurve curve(0, 0, 0, 0, BigInt(tt * tt * tt + 1));
      RationalPoint p = point_override ? *point_override
                                       : RationalPoint(Rational(BigInt(-tt)), Rational(1));
      return make(std::move(curve), std::move(p), std::nullopt, "cube_t" + std::to_string(t));
    }
    case FamilyKind::Somos4Curve: {
      if (t != 0) throw DomainError("family_instantiate: Somos4Curve takes no T");
      WeierstrassCurve curve(0, 0, 1, -1, 0);
      RationalPoint p = point_override ? *point_override
                                       : RationalPoint(Rational(0), Rational(0));
      return make(std::move(curve), std::move(p), std::nullopt, "somos4");
    }
  }
  throw Error("family_instantiate: unknown kind");
}

}  // namespace edskit
