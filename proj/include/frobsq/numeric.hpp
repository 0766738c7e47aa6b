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

#ifndef FROBSQ_NUMERIC_HPP_
#define FROBSQ_NUMERIC_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>

namespace frobsq {

/// Arbitrary-precision signed integer. Point counts over F_{q^n} reach
/// thousands of bits, so every quantity derived from q^n lives here.
using BigInt = mpz_class;

/// Largest input accepted by is_prime / prime_power_decompose. Both use
/// deterministic trial division, which stays cheap below this bound.
inline constexpr std::uint64_t kTrialDivisionLimit = (std::uint64_t{1} << 32) - 1;

/// Floor of the square root, by integer Newton iteration.
/// Throws DomainError for negative input.
BigInt isqrt(const BigInt& x);

/// Cheap necessary condition for x >= 0 being a square: x must be a
/// quadratic residue modulo 64, 63, 65 and 11. Never rejects a square.
bool passes_square_residue_filter(const BigInt& x);

/// u >= 0 with u*u == x, or nullopt. Negative x is never a square.
std::optional<BigInt> perfect_square_root(const BigInt& x);

/// Throws ResourceError above kTrialDivisionLimit.
bool is_prime(std::uint64_t n);

struct PrimePowerParts {
  std::uint64_t p = 0;
  unsigned b = 0;

  friend bool operator==(const PrimePowerParts&, const PrimePowerParts&) = default;
};

/// (p, b) with q == p^b and p prime, or nullopt when q has two distinct
/// prime divisors. Throws DomainError for q < 2.
std::optional<PrimePowerParts> prime_power_decompose(std::uint64_t q);

/// base^exp as a BigInt.
BigInt big_pow(std::uint64_t base, unsigned long exp);

/// base^exp in 64 bits; throws ResourceError on overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

}  // namespace frobsq

#endif  // FROBSQ_NUMERIC_HPP_
