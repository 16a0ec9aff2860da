#include "edskit/somos.hpp"

#include <algorithm>
#include <string>

#include "edskit/curve.hpp"
#include "edskit/eds.hpp"
#include "edskit/primitive.hpp"

namespace edskit {

const BigInt& SomosSequence::u(int k) const {
  if (k < 1 || k > length()) {
    throw DomainError("SomosSequence: index " + std::to_string(k) + " out of range");
  }
  return terms[static_cast<std::size_t>(k) - 1];
}

SomosSequence somos4(int n, const std::array<BigInt, 4>& seeds) {
  if (n < 4) throw DomainError("somos4: need N >= 4");
  for (const BigInt& s : seeds) {
    if (s == 0) throw DomainError("somos4: seeds must be nonzero");
  }
  SomosSequence seq;
  seq.seeds = seeds;
  seq.terms.assign(seeds.begin(), seeds.end());
  seq.terms.reserve(static_cast<std::size_t>(n));
  for (int k = 5; k <= n; ++k) {
    const BigInt& u1 = seq.terms[static_cast<std::size_t>(k) - 2];  // u_{k-1}
    const BigInt& u2 = seq.terms[static_cast<std::size_t>(k) - 3];
    const BigInt& u3 = seq.terms[static_cast<std::size_t>(k) - 4];
    const BigInt& u4 = seq.terms[static_cast<std::size_t>(k) - 5];
    BigInt num = u1 * u3 + u2 * u2;
    if (!mpz_divisible_p(num.get_mpz_t(), u4.get_mpz_t())) {
      throw DomainError("somos4: recurrence division inexact at index " + std::to_string(k));
    }
    BigInt term;
    mpz_divexact(term.get_mpz_t(), num.get_mpz_t(), u4.get_mpz_t());
    seq.terms.push_back(std::move(term));
  }
  return seq;
}

bool somos4_eds_correspondence(int n) {
  if (n < 1) throw DomainError("somos4_eds_correspondence: need N >= 1");
  FamilyInstance inst = family_instantiate(FamilyKind::Somos4Curve, 0);
  EdsSequence eds = generate(inst.curve, inst.p, 2 * n - 1);
  SomosSequence som = somos4(std::max(n + 2, 4));
  for (int k = 1; k <= n; ++k) {
    if (eds.b(2 * k - 1) != som.u(k + 2) * som.u(k + 2)) return false;
  }
  return true;
}

std::vector<int> somos4_primitive_check(int n) {
  if (n < 5) throw DomainError("somos4_primitive_check: need N >= 5");
  SomosSequence som = somos4(n);
  std::vector<int> failing;
  for (int k = 1; k <= n; ++k) {
    if (primitive_part_vs_all(som.terms, k) == 1) failing.push_back(k);
  }
  return failing;
}

}  // namespace edskit
