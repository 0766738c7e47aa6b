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

#ifndef FROBSQ_SEQUENCE_HPP_
#define FROBSQ_SEQUENCE_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "frobsq/numeric.hpp"
#include "frobsq/traces.hpp"

namespace frobsq {

/// One term of a_n = alpha^n + beta^n and N_n = q^n + 1 - a_n.
struct SequenceTerm {
  unsigned n = 0;
  BigInt trace;   // a_n
  BigInt points;  // N_n
};

/// Streams terms n = 1, 2, ... of a_0 = 2, a_1 = a,
/// a_n = a a_{n-1} - q a_{n-2}. Constant memory per pair.
class TraceSequence {
 public:
  /// Throws DomainError outside the Hasse interval.
  TraceSequence(const PrimePower& q, std::int64_t a);

  /// Advances to the next n and returns that term.
  const SequenceTerm& next();
  const SequenceTerm& current() const { return term_; }

 private:
  long q_;
  long a_;
  BigInt previous_;  // a_{n-1}
  BigInt q_power_;   // q^n
  BigInt scratch_;
  SequenceTerm term_;
};

/// Terms 1..nmax. Throws DomainError outside the Hasse interval or for nmax == 0.
std::vector<SequenceTerm> trace_sequence(const PrimePower& q, std::int64_t a, unsigned nmax);

/// a_n by the doubling ladder a_{2k} = a_k^2 - 2 q^k,
/// a_{2k+1} = a_k a_{k+1} - a q^k. a_0 = 2.
BigInt trace_at(const PrimePower& q, std::int64_t a, unsigned n);
/// q^n + 1 - a_n.
BigInt point_count_at(const PrimePower& q, std::int64_t a, unsigned n);

enum class HitSource { scan, guaranteed, sporadic };
std::string_view to_string(HitSource source);

/// N_n = u^2 for the pair (q, a).
struct SquareHit {
  PrimePower q;
  std::int64_t a = 0;
  unsigned n = 0;
  BigInt u;
  Degeneracy degeneracy = Degeneracy::nondegenerate();
  HitSource source = HitSource::scan;

  BigInt points() const { return u * u; }
};

/// Key order (q, a, n).
std::strong_ordering compare_key(const SquareHit& x, const SquareHit& y);
bool same_hit(const SquareHit& x, const SquareHit& y);

/// All n <= nmax with N_n a perfect square, source = scan.
std::vector<SquareHit> square_hits_scan(const PrimePower& q, std::int64_t a, unsigned nmax);

/// For a degenerate pair of order m and m | n, N_n is a square: with
/// s^2 = q^n, a_n = 2s gives u = s - 1 and a_n = -2s gives u = s + 1. The
/// sign of a_n comes from trace_at. Empty when m does not divide n.
/// Throws DomainError on a nondegenerate pair.
std::optional<SquareHit> guaranteed_square(const PrimePower& q, std::int64_t a, unsigned n);

/// The squares with n not divisible by m over all degenerate pairs:
/// (2,2,1), (3,3,1), (3,0,1), (2,0,3), (8,0,1), (2,-2,5), (32,8,1).
std::vector<SquareHit> sporadic_list();

/// Recomputes N_n from scratch and checks u >= 0 and u^2 == N_n.
bool reverify(const SquareHit& hit);

}  // namespace frobsq

#endif  // FROBSQ_SEQUENCE_HPP_
