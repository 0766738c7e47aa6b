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

#include "frobsq/sequence.hpp"

#include <bit>

#include "frobsq/errors.hpp"

namespace frobsq {
namespace {

void require_hasse(const PrimePower& q, std::int64_t a) {
  if (!within_hasse(q.q(), a)) {
    throw DomainError("trace " + std::to_string(a) + " violates the Hasse bound for q = " +
                      std::to_string(q.q()));
  }
}

}  // namespace

TraceSequence::TraceSequence(const PrimePower& q, std::int64_t a)
    : q_(static_cast<long>(q.q())), a_(static_cast<long>(a)), previous_(2), q_power_(1) {
  require_hasse(q, a);
  term_.n = 0;
  term_.trace = 2;
  term_.points = 0;
}

const SequenceTerm& TraceSequence::next() {
  if (term_.n == 0) {
    term_.trace = a_;
  } else {
    // a_{n+1} = a a_n - q a_{n-1}
    mpz_mul_si(scratch_.get_mpz_t(), term_.trace.get_mpz_t(), a_);
    mpz_submul_ui(scratch_.get_mpz_t(), previous_.get_mpz_t(), static_cast<unsigned long>(q_));
    previous_.swap(term_.trace);
    term_.trace.swap(scratch_);
  }
  ++term_.n;
  q_power_ *= q_;
  term_.points = q_power_ + 1 - term_.trace;
  return term_;
}

std::vector<SequenceTerm> trace_sequence(const PrimePower& q, std::int64_t a, unsigned nmax) {
  if (nmax == 0) throw DomainError("nmax must be >= 1");
  TraceSequence seq(q, a);
  std::vector<SequenceTerm> out;
  out.reserve(nmax);
  for (unsigned i = 0; i < nmax; ++i) out.push_back(seq.next());
  return out;
}

BigInt trace_at(const PrimePower& q, std::int64_t a, unsigned n) {
  require_hasse(q, a);
  const BigInt qq(static_cast<unsigned long>(q.q()));
  const BigInt aa(static_cast<long>(a));
  // Invariant: lo = a_k, hi = a_{k+1}, qk = q^k.
  BigInt lo = 2;
  BigInt hi = aa;
  BigInt qk = 1;
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    BigInt cross = lo * hi - aa * qk;  // a_{2k+1}
    if ((n >> bit) & 1U) {
      hi = hi * hi - 2 * qk * qq;  // a_{2k+2}
      lo = std::move(cross);
      qk = qk * qk * qq;
    } else {
      lo = lo * lo - 2 * qk;  // a_{2k}
      hi = std::move(cross);
      qk = qk * qk;
    }
  }
  return lo;
}

BigInt point_count_at(const PrimePower& q, std::int64_t a, unsigned n) {
  return big_pow(q.q(), n) + 1 - trace_at(q, a, n);
}

std::string_view to_string(HitSource source) {
  switch (source) {
    case HitSource::scan:
      return "scan";
    case HitSource::guaranteed:
      return "guaranteed";
    case HitSource::sporadic:
      return "sporadic";
  }
  return "unknown";
}

std::strong_ordering compare_key(const SquareHit& x, const SquareHit& y) {
  if (auto c = x.q.q() <=> y.q.q(); c != 0) return c;
  if (auto c = x.a <=> y.a; c != 0) return c;
  return x.n <=> y.n;
}

bool same_hit(const SquareHit& x, const SquareHit& y) {
  return compare_key(x, y) == 0 && x.u == y.u && x.degeneracy == y.degeneracy &&
         x.source == y.source;
}

std::vector<SquareHit> square_hits_scan(const PrimePower& q, std::int64_t a, unsigned nmax) {
  if (nmax == 0) throw DomainError("nmax must be >= 1");
  const Degeneracy degeneracy = classify_degeneracy(q, a);
  std::vector<SquareHit> hits;
  TraceSequence seq(q, a);
  for (unsigned i = 0; i < nmax; ++i) {
    const SequenceTerm& term = seq.next();
    if (auto root = perfect_square_root(term.points)) {
      hits.push_back(SquareHit{q, a, term.n, std::move(*root), degeneracy, HitSource::scan});
    }
  }
  return hits;
}

std::optional<SquareHit> guaranteed_square(const PrimePower& q, std::int64_t a, unsigned n) {
  if (n == 0) throw DomainError("n must be >= 1");
  const Degeneracy degeneracy = classify_degeneracy(q, a);
  if (!degeneracy.is_degenerate()) {
    throw DomainError("(q, a) = (" + std::to_string(q.q()) + ", " + std::to_string(a) +
                      ") is nondegenerate; no guaranteed squares");
  }
  if (n % static_cast<unsigned>(degeneracy.order()) != 0) return std::nullopt;

  const BigInt q_power = big_pow(q.q(), n);
  const BigInt s = isqrt(q_power);
  if (s * s != q_power) {
    throw InvariantViolation("q^n is not a square for a degenerate pair with m | n");
  }
  const BigInt trace = trace_at(q, a, n);
  BigInt u;
  if (trace == 2 * s) {
    u = s - 1;
  } else if (trace == -2 * s) {
    u = s + 1;
  } else {
    throw InvariantViolation("a_n is not +-2 q^(n/2) for a degenerate pair with m | n");
  }
  return SquareHit{q, a, n, std::move(u), degeneracy, HitSource::guaranteed};
}

std::vector<SquareHit> sporadic_list() {
  struct Row {
    std::uint64_t q;
    std::int64_t a;
    unsigned n;
    unsigned long u;
  };
  static constexpr Row kRows[] = {
      {2, 2, 1, 1}, {3, 3, 1, 1}, {3, 0, 1, 2}, {2, 0, 3, 3},
      {8, 0, 1, 3}, {2, -2, 5, 5}, {32, 8, 1, 5},
  };
  std::vector<SquareHit> out;
  for (const Row& row : kRows) {
    const PrimePower q = PrimePower::of(row.q);
    out.push_back(SquareHit{q, row.a, row.n, BigInt(row.u), classify_degeneracy(q, row.a),
                            HitSource::sporadic});
  }
  return out;
}

bool reverify(const SquareHit& hit) {
  if (hit.n == 0 || sgn(hit.u) < 0 || !within_hasse(hit.q.q(), hit.a)) return false;
  return hit.u * hit.u == point_count_at(hit.q, hit.a, hit.n);
}

}  // namespace frobsq
