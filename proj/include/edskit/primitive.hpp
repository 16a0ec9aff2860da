#ifndef EDSKIT_PRIMITIVE_HPP
#define EDSKIT_PRIMITIVE_HPP

// Factorization-free primitive-divisor detection. A prime p | B_n is
// primitive when it divides no earlier term. Because gcd(B_m, B_n) =
// B_gcd(m,n), a prime of B_n is old iff it divides B_{n/q} for some
// prime q | n, so stripping those finitely many terms decides the
// question without factoring anything.

#include <span>
#include <vector>

#include "edskit/eds.hpp"

namespace edskit {

// Product of p^2 B_{n/p} over primes p | n divides tests, gcd strips,
// and observed-Z scans all read terms from an immutable sequence.

// remove_shared_factors(B_n, prod of B_{n/q} over primes q | n).
// Every prime of the result is a primitive divisor of B_n. n = 1
// returns B_1 itself: first-term primes are new by convention.
BigInt primitive_part(const EdsSequence& seq, int n);

bool has_primitive_divisor(const EdsSequence& seq, int n);

// Divisibility test B_n | prod_{p | n} p^2 B_{n/p}. False certifies a
// primitive divisor exists (contrapositive); true says nothing. n >= 2.
bool fundprop_divides(const EdsSequence& seq, int n);

struct PrimitiveVerdict {
  int n = 0;
  bool has_primitive = false;
  BigInt primitive_part;
  bool fundprop_holds = true;  // vacuously true at n = 1
};

PrimitiveVerdict primitive_verdict(const EdsSequence& seq, int n);

struct ZsigmondyObservation {
  int z = 0;   // max failing index, 0 when none fail
  int ze = 0;  // max failing even index
  int zo = 0;  // max failing odd index
  std::vector<int> failing;
};

// Indices n <= N whose B_n has no primitive divisor. Observed values
// are evidence, not certification; certifying needs the candidate
// bounds of the index-bound machinery.
ZsigmondyObservation observed_zsigmondy(const EdsSequence& seq);

// Strip variant that assumes nothing about divisor structure: removes
// from terms[n-1] every prime shared with ANY earlier term. terms are
// 1-based positive integers. Used by Somos-4 checks and as an
// independent cross-check of primitive_part.
BigInt primitive_part_vs_all(std::span<const BigInt> terms, int n);

}  // namespace edskit

#endif
