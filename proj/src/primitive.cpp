#include "edskit/primitive.hpp"

#include <string>

namespace edskit {

namespace {

// Distinct prime divisors of a sequence index; indices are small.
std::vector<std::uint64_t> index_primes(int n) {
  std::vector<std::uint64_t> ps;
  for (const auto& pp : prime_factors(static_cast<std::uint64_t>(n))) ps.push_back(pp.prime);
  return ps;
}

}  // namespace

BigInt primitive_part(const EdsSequence& seq, int n) {
  if (n < 1 || n > seq.length()) throw DomainError("primitive_part: n out of range");
  if (n == 1) return seq.b(1);
  BigInt earlier = 1;
  for (std::uint64_t q : index_primes(n)) earlier *= seq.b(n / static_cast<int>(q));
  return remove_shared_factors(seq.b(n), earlier);
}

bool has_primitive_divisor(const EdsSequence& seq, int n) { return primitive_part(seq, n) > 1; }

bool fundprop_divides(const EdsSequence& seq, int n) {
  if (n < 2) throw DomainError("fundprop_divides: n must be >= 2");
  if (n > seq.length()) throw DomainError("fundprop_divides: n out of range");
  BigInt prod = 1;
  for (std::uint64_t q : index_primes(n)) {
    prod *= BigInt(q) * q * seq.b(n / static_cast<int>(q));
  }
  return mpz_divisible_p(prod.get_mpz_t(), seq.b(n).get_mpz_t()) != 0;
}

PrimitiveVerdict primitive_verdict(const EdsSequence& seq, int n) {
  PrimitiveVerdict v;
  v.n = n;
  v.primitive_part = primitive_part(seq, n);
  v.has_primitive = v.primitive_part > 1;
  v.fundprop_holds = n == 1 ? true : fundprop_divides(seq, n);
  return v;
}

ZsigmondyObservation observed_zsigmondy(const EdsSequence& seq) {
  ZsigmondyObservation obs;
  for (int n = 1; n <= seq.length(); ++n) {
    if (has_primitive_divisor(seq, n)) continue;
    obs.failing.push_back(n);
    obs.z = n;
    (n % 2 == 0 ? obs.ze : obs.zo) = n;
  }
  return obs;
}

BigInt primitive_part_vs_all(std::span<const BigInt> terms, int n) {
  if (n < 1 || n > static_cast<int>(terms.size())) {
    throw DomainError("primitive_part_vs_all: n out of range");
  }
  BigInt part = terms[static_cast<std::size_t>(n) - 1];
  if (part < 1) throw DomainError("primitive_part_vs_all: terms must be >= 1");
  for (int m = 1; m < n && part > 1; ++m) {
    part = remove_shared_factors(part, terms[static_cast<std::size_t>(m) - 1]);
  }
  return part;
}

}  // namespace edskit
