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

#include <doctest.h>

#include <numeric>

#include "frobsq/errors.hpp"
#include "frobsq/sequence.hpp"
#include "frobsq/traces.hpp"

using frobsq::Degeneracy;
using frobsq::PrimePower;

namespace {

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(hi - lo + 1));
  std::iota(out.begin(), out.end(), lo);
  return out;
}

std::vector<PrimePower> prime_powers_below(std::uint64_t limit) {
  std::vector<PrimePower> out;
  for (std::uint64_t q = 2; q < limit; ++q) {
    if (frobsq::prime_power_decompose(q)) out.push_back(PrimePower::of(q));
  }
  return out;
}

}  // namespace

TEST_CASE("PrimePower") {
  const PrimePower q = PrimePower::of(32);
  CHECK(q.p() == 2);
  CHECK(q.b() == 5);
  CHECK(PrimePower::of(7, 2) == PrimePower::of(49));
  CHECK_THROWS_WITH_AS(PrimePower::of(36), doctest::Contains("not a prime power"),
                       frobsq::DomainError);
  CHECK_THROWS_AS(PrimePower::of(1), frobsq::DomainError);
  CHECK_THROWS_AS(PrimePower::of(6, 1), frobsq::DomainError);
}

TEST_CASE("hasse bound") {
  CHECK(frobsq::hasse_bound(2) == 2);
  CHECK(frobsq::hasse_bound(4) == 4);
  CHECK(frobsq::hasse_bound(7) == 5);
  CHECK(frobsq::hasse_bound(49) == 14);
  CHECK(frobsq::within_hasse(7, -5));
  CHECK_FALSE(frobsq::within_hasse(7, 6));
}

TEST_CASE("waterhouse_admissible examples") {
  CHECK(frobsq::waterhouse_admissible(PrimePower::of(13), 5));
  CHECK_FALSE(frobsq::waterhouse_admissible(PrimePower::of(25), 0));
  CHECK_FALSE(frobsq::waterhouse_admissible(PrimePower::of(27), 3));
  CHECK(frobsq::waterhouse_admissible(PrimePower::of(32), 8));
  // Outside Hasse: false, not an error.
  CHECK_FALSE(frobsq::waterhouse_admissible(PrimePower::of(13), 8));
  CHECK_FALSE(frobsq::waterhouse_admissible(PrimePower::of(49), 7));
  CHECK(frobsq::waterhouse_admissible(PrimePower::of(49), 0));
  CHECK(frobsq::waterhouse_admissible(PrimePower::of(9), 3));
  CHECK(frobsq::waterhouse_admissible(PrimePower::of(27), 9));
  CHECK_FALSE(frobsq::waterhouse_admissible(PrimePower::of(27), 6));
}

TEST_CASE("admissible_traces examples") {
  CHECK(frobsq::admissible_traces(PrimePower::of(2)) == range(-2, 2));
  CHECK(frobsq::admissible_traces(PrimePower::of(4)) == range(-4, 4));
  std::vector<std::int64_t> q25 = range(-10, 10);
  std::erase(q25, 0);
  CHECK(frobsq::admissible_traces(PrimePower::of(25)) == q25);
}

TEST_CASE("admissible traces are symmetric") {
  for (const PrimePower& q : prime_powers_below(2000)) {
    const auto traces = frobsq::admissible_traces(q);
    for (std::int64_t a : traces) {
      REQUIRE(frobsq::waterhouse_admissible(q, -a));
    }
  }
}

TEST_CASE("for prime q every Hasse trace is admissible") {
  for (const PrimePower& q : prime_powers_below(2000)) {
    if (q.b() != 1) continue;
    const std::int64_t bound = frobsq::hasse_bound(q.q());
    REQUIRE(frobsq::admissible_traces(q).size() == static_cast<std::size_t>(2 * bound + 1));
  }
}

TEST_CASE("classify_degeneracy examples") {
  CHECK(frobsq::classify_degeneracy(PrimePower::of(32), 8) == Degeneracy::root_of_unity(4));
  CHECK(frobsq::classify_degeneracy(PrimePower::of(4), 4) == Degeneracy::root_of_unity(1));
  CHECK(frobsq::classify_degeneracy(PrimePower::of(7), 3) == Degeneracy::nondegenerate());
  CHECK(frobsq::classify_degeneracy(PrimePower::of(7), 0) == Degeneracy::root_of_unity(2));
  CHECK(frobsq::classify_degeneracy(PrimePower::of(9), -3) == Degeneracy::root_of_unity(3));
  CHECK(frobsq::classify_degeneracy(PrimePower::of(27), 9) == Degeneracy::root_of_unity(6));
  CHECK(frobsq::classify_degeneracy(PrimePower::of(32), 8).describe() == "degenerate, m=4");
  CHECK_THROWS_AS(frobsq::classify_degeneracy(PrimePower::of(7), 6), frobsq::DomainError);
  CHECK_THROWS_AS(Degeneracy::root_of_unity(5), frobsq::DomainError);
}

TEST_CASE("degeneracy order is the exact order of alpha/beta") {
  // alpha/beta has order m iff alpha^m = beta^m, i.e. a_m^2 = 4 q^m.
  for (const PrimePower& q : prime_powers_below(200)) {
    const std::int64_t bound = frobsq::hasse_bound(q.q());
    for (std::int64_t a = -bound; a <= bound; ++a) {
      const Degeneracy d = frobsq::classify_degeneracy(q, a);
      const unsigned limit = d.is_degenerate() ? static_cast<unsigned>(d.order()) : 12;
      for (unsigned k = 1; k <= limit; ++k) {
        const frobsq::BigInt ak = frobsq::trace_at(q, a, k);
        const frobsq::BigInt bound_k = 4 * frobsq::big_pow(q.q(), k);
        if (d.is_degenerate() && k == limit) {
          REQUIRE(ak * ak == bound_k);
        } else {
          REQUIRE(ak * ak < bound_k);
        }
      }
    }
  }
}

TEST_CASE("degenerate admissible pairs below 50 have the expected shape of q") {
  for (const PrimePower& q : prime_powers_below(50)) {
    for (std::int64_t a : frobsq::admissible_traces(q)) {
      const Degeneracy d = frobsq::classify_degeneracy(q, a);
      if (!d.is_degenerate()) continue;
      // Degenerate traces are never prime to p.
      REQUIRE(std::gcd(a < 0 ? -a : a, static_cast<std::int64_t>(q.p())) != 1);
      switch (d.order()) {
        case 1:
          REQUIRE(q.b() % 2 == 0);
          break;
        case 2:
          REQUIRE_FALSE((q.b() % 2 == 0 && q.p() % 4 == 1));
          break;
        case 3:
          REQUIRE(q.b() % 2 == 0);
          REQUIRE(q.p() % 3 != 1);
          break;
        case 4:
          REQUIRE(q.p() == 2);
          REQUIRE(q.b() % 2 == 1);
          break;
        case 6:
          REQUIRE(q.p() == 3);
          REQUIRE(q.b() % 2 == 1);
          break;
        default:
          FAIL("unexpected order");
      }
    }
  }
}

TEST_CASE("make_trace_spec") {
  const auto spec = frobsq::make_trace_spec(PrimePower::of(27), 3);
  CHECK_FALSE(spec.admissible);
  CHECK_FALSE(spec.degeneracy.is_degenerate());
  CHECK_THROWS_AS(frobsq::make_trace_spec(PrimePower::of(2), 3), frobsq::DomainError);
}
