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

#ifndef FROBSQ_SEARCH_HPP_
#define FROBSQ_SEARCH_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobsq/sequence.hpp"
#include "frobsq/traces.hpp"

namespace frobsq {

enum class Admissibility { waterhouse, hasse };
enum class DegeneracyFilter { exclude, include, only };

std::string_view to_string(Admissibility value);
std::string_view to_string(DegeneracyFilter value);
/// Throw DomainError on unknown names.
Admissibility parse_admissibility(std::string_view text);
DegeneracyFilter parse_degeneracy_filter(std::string_view text);

struct SearchConfig {
  std::uint64_t qmax = 50;  // exclusive
  unsigned nmax = 1000;
  Admissibility admissibility = Admissibility::waterhouse;
  DegeneracyFilter degeneracy = DegeneracyFilter::exclude;
  /// Drop degenerate hits with m | n, leaving only the sporadic ones.
  bool skip_guaranteed = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;

  /// Throws DomainError unless qmax >= 2 and nmax >= 1.
  void validate() const;
};

struct TracePair {
  PrimePower q;
  std::int64_t a;
  Degeneracy degeneracy;
};

/// Every (q, a) the search visits, ordered by (q, a).
std::vector<TracePair> enumerate_pairs(const SearchConfig& config);

struct SearchReport {
  SearchConfig config;
  std::vector<SquareHit> hits;  // sorted by (q, a, n), duplicate-free
  std::uint64_t pairs_scanned = 0;
  double elapsed_seconds = 0.0;
};

/// Scans every pair from enumerate_pairs over n = 1..nmax, one pair per work
/// unit. The hit list does not depend on the number of workers.
SearchReport run_search(const SearchConfig& config);

// --------------------------------------------------- published list check

/// A published (q, a, n, u) triple. A non-empty erratum marks a known
/// deviation between the published list and what a correct scan produces.
struct PublishedSquare {
  std::uint64_t q;
  std::int64_t a;
  unsigned n;
  unsigned long u;
  std::string_view erratum;
};

/// The published list of squares for nondegenerate pairs, q < 50, n <= 1000,
/// in publication order.
std::span<const PublishedSquare> published_square_table();

struct HitKey {
  std::uint64_t q;
  std::int64_t a;
  unsigned n;

  friend auto operator<=>(const HitKey&, const HitKey&) = default;
  friend bool operator==(const HitKey&, const HitKey&) = default;
};

std::string to_string(const HitKey& key);
HitKey key_of(const SquareHit& hit);

struct Deviation {
  HitKey key;
  std::string reason;
};

struct PaperCheckReport {
  std::vector<HitKey> matching;        // published or sporadic entries found
  std::vector<HitKey> missing;         // expected but not found
  std::vector<HitKey> extra;           // found but not expected
  std::vector<Deviation> deviations;   // errata entries that were not produced
  std::size_t not_applicable = 0;      // entries the config's filters exclude
  std::size_t guaranteed_expected = 0;
  std::size_t guaranteed_matching = 0;
  std::vector<HitKey> guaranteed_missing;
  std::vector<HitKey> reverify_failures;

  /// Zero missing, zero extra, every hit re-verified.
  bool clean() const;
  std::string render() const;
};

/// Three-way diff of a report against the published tables. Throws
/// DomainError unless the report used qmax = 50 and nmax = 1000.
PaperCheckReport paper_check(const SearchReport& report);

}  // namespace frobsq

#endif  // FROBSQ_SEARCH_HPP_
