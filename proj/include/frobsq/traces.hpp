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

#ifndef FROBSQ_TRACES_HPP_
#define FROBSQ_TRACES_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace frobsq {

/// q = p^b with p prime.
class PrimePower {
 public:
  /// Throws DomainError naming the failed decomposition when q is not a
  /// prime power (or q < 2).
  static PrimePower of(std::uint64_t q);
  static PrimePower of(std::uint64_t p, unsigned b);

  std::uint64_t p() const { return p_; }
  unsigned b() const { return b_; }
  std::uint64_t q() const { return q_; }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
  friend auto operator<=>(const PrimePower& x, const PrimePower& y) { return x.q_ <=> y.q_; }

 private:
  PrimePower(std::uint64_t p, unsigned b, std::uint64_t q) : p_(p), b_(b), q_(q) {}

  std::uint64_t p_;
  unsigned b_;
  std::uint64_t q_;
};

/// Whether alpha/beta is a root of unity, and if so its order m.
class Degeneracy {
 public:
  static constexpr Degeneracy nondegenerate() { return Degeneracy(0); }
  /// m must be one of 1, 2, 3, 4, 6.
  static Degeneracy root_of_unity(int m);

  bool is_degenerate() const { return order_ != 0; }
  /// m, or 0 when nondegenerate.
  int order() const { return order_; }
  std::string describe() const;

  friend bool operator==(const Degeneracy&, const Degeneracy&) = default;

 private:
  constexpr explicit Degeneracy(int order) : order_(order) {}
  int order_;
};

/// floor(2 sqrt(q)), the largest |a| allowed by Hasse.
std::int64_t hasse_bound(std::uint64_t q);
bool within_hasse(std::uint64_t q, std::int64_t a);

/// Waterhouse's criterion: some elliptic curve over F_q has trace a.
/// Returns false (no throw) outside the Hasse interval.
bool waterhouse_admissible(const PrimePower& q, std::int64_t a);

std::vector<std::int64_t> admissible_traces(const PrimePower& q);

/// Exact integer classification: a^2 in {4q, 0, q, 2q, 3q} gives m = 1, 2,
/// 3, 4, 6. Throws DomainError outside the Hasse interval.
Degeneracy classify_degeneracy(const PrimePower& q, std::int64_t a);

struct TraceSpec {
  PrimePower q;
  std::int64_t a;
  bool admissible;
  Degeneracy degeneracy;
};

/// Throws DomainError outside the Hasse interval.
TraceSpec make_trace_spec(const PrimePower& q, std::int64_t a);

}  // namespace frobsq

#endif  // FROBSQ_TRACES_HPP_
