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

#include <algorithm>
#include <set>

#include <doctest.h>

#include "frobsq/errors.hpp"
#include "frobsq/search.hpp"
#include "oracles.hpp"

using frobsq::HitKey;
using frobsq::SearchConfig;

namespace {

const frobsq::SearchReport& default_report() {
  static const frobsq::SearchReport report = frobsq::run_search(SearchConfig{});
  return report;
}

bool has_key(const std::vector<HitKey>& keys, HitKey key) {
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

}  // namespace

TEST_CASE("option parsing") {
  CHECK(frobsq::parse_admissibility("hasse") == frobsq::Admissibility::hasse);
  CHECK(frobsq::parse_degeneracy_filter("only") == frobsq::DegeneracyFilter::only);
  CHECK(frobsq::to_string(frobsq::DegeneracyFilter::include) == "include");
  CHECK_THROWS_AS(frobsq::parse_admissibility("loose"), frobsq::DomainError);
  CHECK_THROWS_AS(frobsq::parse_degeneracy_filter("all"), frobsq::DomainError);
  SearchConfig bad;
  bad.qmax = 1;
  CHECK_THROWS_AS(bad.validate(), frobsq::DomainError);
  bad.qmax = 10;
  bad.nmax = 0;
  CHECK_THROWS_AS(bad.validate(), frobsq::DomainError);
}

TEST_CASE("enumerate_pairs respects the filters") {
  SearchConfig config;
  config.qmax = 10;
  const auto pairs = frobsq::enumerate_pairs(config);
  for (const auto& pair : pairs) {
    CHECK(pair.q.q() < 10);
    CHECK(frobsq::waterhouse_admissible(pair.q, pair.a));
    CHECK_FALSE(pair.degeneracy.is_degenerate());
  }
  config.admissibility = frobsq::Admissibility::hasse;
  config.degeneracy = frobsq::DegeneracyFilter::include;
  std::size_t total = 0;
  for (std::uint64_t q = 2; q < 10; ++q) {
    if (frobsq::oracle::small_is_prime(q) || q == 4 || q == 8 || q == 9) {
      total += 2 * static_cast<std::size_t>(frobsq::hasse_bound(q)) + 1;
    }
  }
  CHECK(frobsq::enumerate_pairs(config).size() == total);
}

TEST_CASE("search is deterministic and independent of the worker count") {
  SearchConfig config;
  config.qmax = 30;
  config.nmax = 300;
  config.degeneracy = frobsq::DegeneracyFilter::include;
  config.workers = 1;
  const auto serial = frobsq::run_search(config);
  config.workers = 4;
  const auto parallel = frobsq::run_search(config);
  const auto again = frobsq::run_search(config);
  REQUIRE(serial.hits.size() == parallel.hits.size());
  REQUIRE(parallel.hits.size() == again.hits.size());
  for (std::size_t i = 0; i < serial.hits.size(); ++i) {
    CHECK(frobsq::same_hit(serial.hits[i], parallel.hits[i]));
    CHECK(frobsq::same_hit(parallel.hits[i], again.hits[i]));
    if (i > 0) CHECK(frobsq::compare_key(serial.hits[i - 1], serial.hits[i]) < 0);
  }
  CHECK(serial.pairs_scanned == parallel.pairs_scanned);
}

TEST_CASE("default search finds 52 nondegenerate squares") {
  const auto& report = default_report();
  CHECK(report.hits.size() == 52);
  for (const auto& hit : report.hits) {
    CHECK_FALSE(hit.degeneracy.is_degenerate());
    CHECK(frobsq::reverify(hit));
    CHECK(frobsq::waterhouse_admissible(hit.q, hit.a));
  }
  const auto find = [&](std::uint64_t q, std::int64_t a, unsigned n) {
    return std::find_if(report.hits.begin(), report.hits.end(), [&](const frobsq::SquareHit& h) {
      return h.q.q() == q && h.a == a && h.n == n;
    });
  };
  REQUIRE(find(2, -1, 11) != report.hits.end());
  CHECK(find(2, -1, 11)->u == 46);
  REQUIRE(find(47, -1, 3) != report.hits.end());
  CHECK(find(47, -1, 3)->u == 322);
}

TEST_CASE("hasse admissibility adds the inadmissible (27, 3, 1)") {
  SearchConfig config;
  config.admissibility = frobsq::Admissibility::hasse;
  const auto report = frobsq::run_search(config);
  const auto it = std::find_if(report.hits.begin(), report.hits.end(), [](const auto& h) {
    return h.q.q() == 27 && h.a == 3 && h.n == 1;
  });
  REQUIRE(it != report.hits.end());
  CHECK(it->u == 5);
  CHECK_FALSE(frobsq::waterhouse_admissible(it->q, it->a));
}

TEST_CASE("degenerate-only search without guaranteed terms yields the sporadic list") {
  SearchConfig config;
  config.degeneracy = frobsq::DegeneracyFilter::only;
  config.skip_guaranteed = true;
  const auto report = frobsq::run_search(config);
  const auto expected = frobsq::sporadic_list();
  REQUIRE(report.hits.size() == expected.size());
  std::set<HitKey> got;
  for (const auto& hit : report.hits) got.insert(frobsq::key_of(hit));
  for (const auto& hit : expected) CHECK(got.contains(frobsq::key_of(hit)));
}

TEST_CASE("published table") {
  const auto table = frobsq::published_square_table();
  CHECK(table.size() == 53);
  std::size_t errata = 0;
  for (const auto& entry : table) {
    if (!entry.erratum.empty()) ++errata;
    CHECK(entry.q < 50);
    CHECK(entry.n <= 1000);
  }
  CHECK(errata == 3);
}

TEST_CASE("published-list check on the default search") {
  const auto check = frobsq::paper_check(default_report());
  CHECK(check.matching.size() == 50);
  CHECK(check.missing.empty());
  CHECK(check.reverify_failures.empty());
  CHECK(check.deviations.size() == 3);
  CHECK(check.extra.size() == 2);
  CHECK(has_key(check.extra, HitKey{32, -3, 1}));
  CHECK(has_key(check.extra, HitKey{32, 5, 3}));
  CHECK_FALSE(check.clean());
  const std::string text = check.render();
  CHECK(text.find("verdict: MISMATCH") != std::string::npos);
}

TEST_CASE("published-list check detects removed and fabricated hits") {
  auto report = default_report();
  std::erase_if(report.hits, [](const auto& h) { return h.q.q() == 2 && h.a == -1 && h.n == 11; });
  auto check = frobsq::paper_check(report);
  CHECK(check.missing.size() == 1);
  CHECK(has_key(check.missing, HitKey{2, -1, 11}));

  report = default_report();
  report.hits.push_back(frobsq::SquareHit{frobsq::PrimePower::of(2), -1, 2, frobsq::BigInt(3),
                                          frobsq::Degeneracy::nondegenerate(),
                                          frobsq::HitSource::scan});
  check = frobsq::paper_check(report);
  CHECK(has_key(check.extra, HitKey{2, -1, 2}));
  CHECK(has_key(check.reverify_failures, HitKey{2, -1, 2}));
}

TEST_CASE("published-list check requires the reference bounds") {
  SearchConfig config;
  config.qmax = 20;
  CHECK_THROWS_AS(frobsq::paper_check(frobsq::run_search(config)), frobsq::DomainError);
}

TEST_CASE("published-list check with degenerate pairs included") {
  SearchConfig config;
  config.degeneracy = frobsq::DegeneracyFilter::include;
  const auto check = frobsq::paper_check(frobsq::run_search(config));
  CHECK(check.guaranteed_expected > 0);
  CHECK(check.guaranteed_matching == check.guaranteed_expected);
  CHECK(check.guaranteed_missing.empty());
  CHECK(check.missing.empty());
  CHECK(has_key(check.matching, HitKey{32, 8, 1}));
  CHECK(check.extra.size() == 2);
}
