#include "edskit/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace edskit {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs; this base set decides
// primality for every n < 2^64.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant of Pollard's rho. n must be odd, composite, and not a
// prime power smaller than the trial bound (callers strip those first).
std::uint64_t brent_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    std::uint64_t lam = 1, power = 1;
    while (d == 1) {
      if (lam == power) {
        y = x;
        power <<= 1;
        lam = 0;
      }
      x = (mulmod(x, x, n) + c) % n;
      ++lam;
      std::uint64_t diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // closed a cycle without a factor, retry with the next c
      d = std::gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    primes.push_back(n);
    return;
  }
  std::uint64_t d = brent_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

std::vector<PrimePower> prime_factors(std::uint64_t n) {
  if (n == 0) throw DomainError("prime_factors: n must be >= 1");
  std::vector<PrimePower> out;
  auto push = [&out](std::uint64_t p, int e) { out.push_back({p, e}); };

  for (std::uint64_t p = 2; p <= kTrialLimit && p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    push(p, e);
  }
  if (n > 1) {
    // Whatever survives trial division has no prime factor <= 1e6.
    std::vector<std::uint64_t> rest;
    factor_into(n, rest);
    std::sort(rest.begin(), rest.end());
    for (std::size_t i = 0; i < rest.size();) {
      std::size_t j = i;
      while (j < rest.size() && rest[j] == rest[i]) ++j;
      push(rest[i], static_cast<int>(j - i));
      i = j;
    }
  }
  return out;
}

int omega(std::uint64_t n) {
  if (n == 0) throw DomainError("omega: n must be >= 1");
  return static_cast<int>(prime_factors(n).size());
}

double rho(std::uint64_t n) {
  if (n == 0) throw DomainError("rho: n must be >= 1");
  double r = 0.0;
  for (const auto& pp : prime_factors(n)) {
    double pa1 = std::pow(static_cast<double>(pp.prime), pp.exponent + 1);
    r += pp.exponent / pa1;
  }
  return r;
}

double eta(std::uint64_t n) {
  if (n == 0) throw DomainError("eta: n must be >= 1");
  double e = 0.0;
  for (const auto& pp : prime_factors(n)) e += std::log(static_cast<double>(pp.prime));
  return 2.0 * e;
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) throw DomainError("is_squarefree: n must be >= 1");
  for (const auto& pp : prime_factors(n)) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

ArithProfile arith_profile(std::uint64_t n) {
  if (n == 0) throw DomainError("arith_profile: n must be >= 1");
  ArithProfile ap;
  ap.n = n;
  for (const auto& pp : prime_factors(n)) {
    ap.omega += 1;
    double lp = std::log(static_cast<double>(pp.prime));
    ap.eta += 2.0 * lp;
    ap.rho += pp.exponent / std::pow(static_cast<double>(pp.prime), pp.exponent + 1);
  }
  return ap;
}

double log_big(const BigInt& x) {
  if (x <= 0) throw DomainError("log_big: argument must be positive");
  signed long exp2;
  double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

BigInt remove_shared_factors(BigInt a, const BigInt& b) {
  if (a < 1 || b < 1) throw DomainError("remove_shared_factors: arguments must be >= 1");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  while (g != 1) {
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  return a;
}

SpfSieve::SpfSieve(std::uint32_t limit) {
  if (limit < 2) throw DomainError("SpfSieve: limit must be >= 2");
  spf_.assign(limit + 1, 0);
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i]) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (!spf_[j]) spf_[j] = i;
    }
  }
}

std::uint32_t SpfSieve::smallest_factor(std::uint32_t n) const {
  if (n < 2 || n >= spf_.size()) throw DomainError("SpfSieve: n out of range");
  return spf_[n];
}

ArithProfile SpfSieve::profile(std::uint32_t n) const {
  if (n == 0 || n >= spf_.size()) throw DomainError("SpfSieve: n out of range");
  ArithProfile ap;
  ap.n = n;
  while (n > 1) {
    std::uint32_t p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    ap.omega += 1;
    ap.eta += 2.0 * std::log(static_cast<double>(p));
    ap.rho += e / std::pow(static_cast<double>(p), e + 1);
  }
  return ap;
}

}  // namespace edskit
