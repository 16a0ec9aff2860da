#ifndef EDSKIT_NUMBER_THEORY_HPP
#define EDSKIT_NUMBER_THEORY_HPP

// Elementary arithmetic support: factorization of machine-word integers,
// the divisor-counting functions omega / rho / eta used by the index
// bounds, natural logs of big integers, and the gcd-stripping primitive
// shared by the divisibility machinery.
//
// rho(n) = sum over prime powers p^a || n of a / p^(a+1)
// eta(n) = 2 * sum over primes p | n of log p
// Both are bounded: rho <= 0.453 always, rho <= 0.203 on odd n,
// omega(n) <= 1.443 log n, eta(n) <= 2 log n (n >= 2).

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "edskit/errors.hpp"

namespace edskit {

using BigInt = mpz_class;
using Rational = mpq_class;

struct PrimePower {
  std::uint64_t prime;
  int exponent;
};

// Distinct prime powers of n in increasing prime order. n >= 1; n = 1
// yields the empty list. Trial division by primes up to 1e6, then
// Brent's rho with Miller-Rabin primality on what remains; complete and
// deterministic for any 64-bit input.
std::vector<PrimePower> prime_factors(std::uint64_t n);

// Number of distinct primes dividing n. omega(1) = 0.
int omega(std::uint64_t n);

// rho(n) as above; rho(1) = 0.
double rho(std::uint64_t n);

// eta(n) as above; eta(1) = 0.
double eta(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

struct ArithProfile {
  std::uint64_t n = 0;
  int omega = 0;
  double rho = 0.0;
  double eta = 0.0;
};

ArithProfile arith_profile(std::uint64_t n);

// Natural log of a positive big integer, exact mantissa + exponent
// splitting so the relative error stays at a few ulps regardless of
// size. x <= 0 is rejected.
double log_big(const BigInt& x);

// Repeatedly divides a by gcd(a, b) until the two share no factor.
// Returns the stripped a. Both arguments must be >= 1. This removes
// every prime of b from a entirely, whatever its multiplicity.
BigInt remove_shared_factors(BigInt a, const BigInt& b);

// Smallest-prime-factor sieve for bulk scans of omega / rho / eta.
class SpfSieve {
 public:
  explicit SpfSieve(std::uint32_t limit);

  std::uint32_t limit() const { return static_cast<std::uint32_t>(spf_.size()) - 1; }
  std::uint32_t smallest_factor(std::uint32_t n) const;
  ArithProfile profile(std::uint32_t n) const;

 private:
  std::vector<std::uint32_t> spf_;
};

}  // namespace edskit

#endif
