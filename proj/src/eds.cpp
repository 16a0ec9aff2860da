#include "edskit/eds.hpp"

#include <numeric>
#include <string>

namespace edskit {

namespace {

int decimal_digits(const BigInt& v) {
  // sizeinbase is exact or one high for base 10; good enough for a guard
  return static_cast<int>(mpz_sizeinbase(v.get_mpz_t(), 10));
}

}  // namespace

const EdsTerm& EdsSequence::term(int n) const {
  if (n < 1 || n > length()) {
    throw DomainError("EdsSequence: index " + std::to_string(n) + " out of range 1.." +
                      std::to_string(length()));
  }
  return terms_[static_cast<std::size_t>(n) - 1];
}

EdsSequence generate(const WeierstrassCurve& curve, const RationalPoint& p, int n,
                     int digit_budget) {
  if (n < 1) throw DomainError("generate: need N >= 1");
  if (p.is_infinity()) throw DomainError("generate: P must be affine");
  if (!contains(curve, p)) throw DomainError("generate: P not on curve");
  if (auto order = torsion_order(curve, p)) {
    throw TorsionError("generate: P is torsion of order " + std::to_string(*order), *order);
  }

  std::vector<EdsTerm> terms;
  terms.reserve(static_cast<std::size_t>(n));
  RationalPoint walk = p;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) walk = add(curve, walk, p);
    if (walk.is_infinity()) {
      throw TorsionError("generate: " + std::to_string(i) + "P = infinity, P has order " +
                             std::to_string(i),
                         i);
    }
    EdsTerm term{i, walk.x().get_num(), walk.x().get_den()};
    if (decimal_digits(term.a) > digit_budget || decimal_digits(term.b) > digit_budget) {
      throw BudgetError("generate: term " + std::to_string(i) + " exceeds the " +
                        std::to_string(digit_budget) + "-digit budget");
    }
    terms.push_back(std::move(term));
  }
  return EdsSequence(curve, p, std::move(terms));
}

bool check_gcd_lemma(const EdsSequence& seq, int m, int n) {
  const BigInt& bm = seq.b(m);
  const BigInt& bn = seq.b(n);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), bm.get_mpz_t(), bn.get_mpz_t());
  return g == seq.b(std::gcd(m, n));
}

bool check_ord_lemma(const EdsSequence& seq, std::uint64_t p, int n, int k) {
  if (p == 2) throw DomainError("check_ord_lemma: odd primes only");
  auto pf = p >= 3 ? prime_factors(p) : std::vector<PrimePower>{};
  if (pf.size() != 1 || pf[0].exponent != 1) {
    throw DomainError("check_ord_lemma: p must be an odd prime");
  }
  if (k < 1) throw DomainError("check_ord_lemma: k must be >= 1");
  BigInt pz(static_cast<unsigned long>(p));
  BigInt stripped;
  mp_bitcnt_t ord_bn = mpz_remove(stripped.get_mpz_t(), seq.b(n).get_mpz_t(), pz.get_mpz_t());
  if (ord_bn == 0) throw DomainError("check_ord_lemma: p does not divide B_n");
  mp_bitcnt_t ord_bnk = mpz_remove(stripped.get_mpz_t(), seq.b(n * k).get_mpz_t(), pz.get_mpz_t());
  int ord_k = 0;
  for (std::uint64_t kk = static_cast<std::uint64_t>(k); kk % p == 0; kk /= p) ++ord_k;
  return static_cast<long>(ord_bnk) == static_cast<long>(ord_bn) + 2L * ord_k;
}

bool check_duplication_identity(const EdsSequence& seq, int m) {
  const WeierstrassCurve& e = seq.curve();
  if (e.a1 != 0 || e.a2 != 0 || e.a3 != 0 || e.a6 != 0 || e.a4 >= 0) {
    throw DomainError("check_duplication_identity: curve must be y^2 = x^3 - T^2 x");
  }
  BigInt t2 = -e.a4;
  if (!mpz_perfect_square_p(t2.get_mpz_t())) {
    throw DomainError("check_duplication_identity: -a4 must be a perfect square T^2");
  }
  BigInt t;
  mpz_sqrt(t.get_mpz_t(), t2.get_mpz_t());
  if (m < 1 || 2 * m > seq.length()) {
    throw DomainError("check_duplication_identity: need 1 <= m and 2m <= N");
  }

  const BigInt& a = seq.a(m);
  const BigInt& b = seq.b(m);
  BigInt s = a * a + t2 * b * b;
  BigInt num = s * s;
  BigInt den = 4 * a * b * (a * a - t2 * b * b);
  if (den == 0) return false;  // cannot happen off the 2-torsion locus

  BigInt g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());  // gcd is nonnegative
  BigInt rnum = num / g;
  BigInt rden = den / g;
  if (rden < 0) {
    rnum = -rnum;
    rden = -rden;
  }

  BigInt bound = 4 * t2 * t2;  // 4 T^4
  return g <= bound && rnum == seq.a(2 * m) && rden == seq.b(2 * m);
}

}  // namespace edskit
