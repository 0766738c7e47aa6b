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

#include "frobsq/traces.hpp"

#include <numeric>

#include "frobsq/errors.hpp"
#include "frobsq/numeric.hpp"

namespace frobsq {

PrimePower PrimePower::of(std::uint64_t q) {
  if (q < 2) throw DomainError("q = " + std::to_string(q) + " is not a prime power (q < 2)");
  const auto parts = prime_power_decompose(q);
  if (!parts) {
    throw DomainError("q = " + std::to_string(q) +
                      " is not a prime power (it has more than one prime divisor)");
  }
  return PrimePower(parts->p, parts->b, q);
}

PrimePower PrimePower::of(std::uint64_t p, unsigned b) {
  if (b == 0) throw DomainError("prime power exponent must be >= 1");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return PrimePower(p, b, checked_pow(p, b));
}

Degeneracy Degeneracy::root_of_unity(int m) {
  if (m != 1 && m != 2 && m != 3 && m != 4 && m != 6) {
    throw DomainError("root-of-unity order must be 1, 2, 3, 4 or 6, got " + std::to_string(m));
  }
  return Degeneracy(m);
}

std::string Degeneracy::describe() const {
  if (!is_degenerate()) return "nondegenerate";
  return "degenerate, m=" + std::to_string(order_);
}

std::int64_t hasse_bound(std::uint64_t q) {
  const BigInt r = isqrt(BigInt(4) * BigInt(static_cast<unsigned long>(q)));
  return static_cast<std::int64_t>(r.get_si());
}

bool within_hasse(std::uint64_t q, std::int64_t a) {
  const auto mag = static_cast<std::uint64_t>(a < 0 ? -a : a);
  return mag <= static_cast<std::uint64_t>(hasse_bound(q));
}

bool waterhouse_admissible(const PrimePower& q, std::int64_t a) {
  if (!within_hasse(q.q(), a)) return false;
  const std::uint64_t p = q.p();
  const auto mag = static_cast<std::uint64_t>(a < 0 ? -a : a);
  const std::uint64_t a2 = mag * mag;

  if (std::gcd(mag, p) == 1) return true;
  if (q.b() % 2 == 0) {
    if (a2 == 4 * q.q()) return true;
    if (p % 3 != 1 && a2 == q.q()) return true;
    if (p % 4 != 1 && a == 0) return true;
    return false;
  }
  if ((p == 2 || p == 3) && mag == checked_pow(p, (q.b() + 1) / 2)) return true;
  return a == 0;
}

std::vector<std::int64_t> admissible_traces(const PrimePower& q) {
  std::vector<std::int64_t> out;
  const std::int64_t bound = hasse_bound(q.q());
  for (std::int64_t a = -bound; a <= bound; ++a) {
    if (waterhouse_admissible(q, a)) out.push_back(a);
  }
  return out;
}

Degeneracy classify_degeneracy(const PrimePower& q, std::int64_t a) {
  if (!within_hasse(q.q(), a)) {
    throw DomainError("trace " + std::to_string(a) + " violates the Hasse bound for q = " +
                      std::to_string(q.q()));
  }
  const auto mag = static_cast<std::uint64_t>(a < 0 ? -a : a);
  const std::uint64_t a2 = mag * mag;
  const std::uint64_t qq = q.q();
  if (a2 == 4 * qq) return Degeneracy::root_of_unity(1);
  if (a2 == 0) return Degeneracy::root_of_unity(2);
  if (a2 == qq) return Degeneracy::root_of_unity(3);
  if (a2 == 2 * qq) return Degeneracy::root_of_unity(4);
  if (a2 == 3 * qq) return Degeneracy::root_of_unity(6);
  return Degeneracy::nondegenerate();
}

TraceSpec make_trace_spec(const PrimePower& q, std::int64_t a) {
  const Degeneracy d = classify_degeneracy(q, a);
  return TraceSpec{q, a, waterhouse_admissible(q, a), d};
}

}  // namespace frobsq
