/* Copyright 2026 The frobsq Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "frobsq/numeric.hpp"

#include <array>
#include <limits>
#include <string>

#include "frobsq/errors.hpp"

namespace frobsq {
namespace {

template <unsigned M>
constexpr std::array<bool, M> quadratic_residues() {
  std::array<bool, M> table{};
  for (unsigned r = 0; r < M; ++r) table[(r * r) % M] = true;
  return table;
}

constexpr auto kResidues64 = quadratic_residues<64>();
constexpr auto kResidues63 = quadratic_residues<63>();
constexpr auto kResidues65 = quadratic_residues<65>();
constexpr auto kResidues11 = quadratic_residues<11>();
constexpr unsigned long kFilterModulus = 64UL * 63UL * 65UL * 11UL;

}  // namespace

BigInt isqrt(const BigInt& x) {
  if (sgn(x) < 0) throw DomainError("isqrt: negative argument");
  if (sgn(x) == 0) return 0;

  // x < 2^bits, so 2^ceil(bits/2) is an upper bound for the root. From any
  // upper bound the Newton step strictly decreases until it hits the floor.
  const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  BigInt r = 1;
  r <<= (bits + 1) / 2;
  BigInt next;
  for (;;) {
    next = x / r;
    next += r;
    next >>= 1;
    if (next >= r) return r;
    r.swap(next);
  }
}

bool passes_square_residue_filter(const BigInt& x) {
  if (sgn(x) < 0) return false;
  const unsigned long r = mpz_fdiv_ui(x.get_mpz_t(), kFilterModulus);
  return kResidues64[r % 64] && kResidues63[r % 63] && kResidues65[r % 65] &&
         kResidues11[r % 11];
}

std::optional<BigInt> perfect_square_root(const BigInt& x) {
  if (!passes_square_residue_filter(x)) return std::nullopt;
  BigInt r = isqrt(x);
  if (r * r != x) return std::nullopt;
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n > kTrialDivisionLimit) {
    throw ResourceError("is_prime: " + std::to_string(n) + " exceeds trial-division limit");
  }
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePowerParts> prime_power_decompose(std::uint64_t q) {
  if (q < 2) throw DomainError("prime_power_decompose: q must be >= 2, got " + std::to_string(q));
  if (q > kTrialDivisionLimit) {
    throw ResourceError("prime_power_decompose: " + std::to_string(q) +
                        " exceeds trial-division limit");
  }
  // The smallest divisor > 1 is prime.
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned b = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++b;
  }
  if (rest != 1) return std::nullopt;
  return PrimePowerParts{p, b};
}

BigInt big_pow(std::uint64_t base, unsigned long exp) {
  BigInt result;
  BigInt b;
  mpz_set_ui(b.get_mpz_t(), base);
  mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(), exp);
  return result;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      throw ResourceError("checked_pow: " + std::to_string(base) + "^" + std::to_string(exp) +
                          " overflows 64 bits");
    }
    result *= base;
  }
  return result;
}

}  // namespace frobsq
