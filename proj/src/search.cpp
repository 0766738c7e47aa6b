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

#include "frobsq/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "frobsq/errors.hpp"
#include "frobsq/numeric.hpp"

namespace frobsq {
namespace {

bool passes_filters(const SearchConfig& config, const PrimePower& q, std::int64_t a,
                    const Degeneracy& degeneracy) {
  if (config.admissibility == Admissibility::waterhouse && !waterhouse_admissible(q, a)) {
    return false;
  }
  switch (config.degeneracy) {
    case DegeneracyFilter::exclude:
      return !degeneracy.is_degenerate();
    case DegeneracyFilter::only:
      return degeneracy.is_degenerate();
    case DegeneracyFilter::include:
      return true;
  }
  return false;
}

bool is_guaranteed_term(const Degeneracy& degeneracy, unsigned n) {
  return degeneracy.is_degenerate() && n % static_cast<unsigned>(degeneracy.order()) == 0;
}

// Whether a run with this config can emit the triple at all.
bool producible(const SearchConfig& config, std::uint64_t q_value, std::int64_t a, unsigned n) {
  if (q_value < 2 || q_value >= config.qmax || n < 1 || n > config.nmax) return false;
  if (!prime_power_decompose(q_value)) return false;
  const PrimePower q = PrimePower::of(q_value);
  if (!within_hasse(q.q(), a)) return false;
  const Degeneracy degeneracy = classify_degeneracy(q, a);
  if (!passes_filters(config, q, a, degeneracy)) return false;
  return !(config.skip_guaranteed && is_guaranteed_term(degeneracy, n));
}

}  // namespace

std::string_view to_string(Admissibility value) {
  return value == Admissibility::waterhouse ? "waterhouse" : "hasse";
}

std::string_view to_string(DegeneracyFilter value) {
  switch (value) {
    case DegeneracyFilter::exclude:
      return "exclude";
    case DegeneracyFilter::include:
      return "include";
    case DegeneracyFilter::only:
      return "only";
  }
  return "unknown";
}

Admissibility parse_admissibility(std::string_view text) {
  if (text == "waterhouse") return Admissibility::waterhouse;
  if (text == "hasse") return Admissibility::hasse;
  throw DomainError("unknown admissibility '" + std::string(text) + "'");
}

DegeneracyFilter parse_degeneracy_filter(std::string_view text) {
  if (text == "exclude") return DegeneracyFilter::exclude;
  if (text == "include") return DegeneracyFilter::include;
  if (text == "only") return DegeneracyFilter::only;
  throw DomainError("unknown degeneracy filter '" + std::string(text) + "'");
}

void SearchConfig::validate() const {
  if (qmax < 2) throw DomainError("qmax must be >= 2");
  if (nmax < 1) throw DomainError("nmax must be >= 1");
}

std::vector<TracePair> enumerate_pairs(const SearchConfig& config) {
  config.validate();
  std::vector<TracePair> pairs;
  for (std::uint64_t q_value = 2; q_value < config.qmax; ++q_value) {
    if (!prime_power_decompose(q_value)) continue;
    const PrimePower q = PrimePower::of(q_value);
    const std::int64_t bound = hasse_bound(q_value);
    for (std::int64_t a = -bound; a <= bound; ++a) {
      const Degeneracy degeneracy = classify_degeneracy(q, a);
      if (passes_filters(config, q, a, degeneracy)) pairs.push_back({q, a, degeneracy});
    }
  }
  return pairs;
}

SearchReport run_search(const SearchConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<TracePair> pairs = enumerate_pairs(config);

  std::vector<std::vector<SquareHit>> per_pair(pairs.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      const TracePair& pair = pairs[i];
      std::vector<SquareHit> hits = square_hits_scan(pair.q, pair.a, config.nmax);
      if (config.skip_guaranteed) {
        std::erase_if(hits, [&](const SquareHit& h) { return is_guaranteed_term(h.degeneracy, h.n); });
      }
      per_pair[i] = std::move(hits);
    }
  };

  unsigned workers = config.workers != 0 ? config.workers : std::thread::hardware_concurrency();
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(pairs.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  SearchReport report;
  report.config = config;
  report.pairs_scanned = pairs.size();
  for (auto& hits : per_pair) {
    std::move(hits.begin(), hits.end(), std::back_inserter(report.hits));
  }
  std::sort(report.hits.begin(), report.hits.end(),
            [](const SquareHit& x, const SquareHit& y) { return compare_key(x, y) < 0; });
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// --------------------------------------------------- published list check

std::string to_string(const HitKey& key) {
  return "(" + std::to_string(key.q) + ", " + std::to_string(key.a) + ", " +
         std::to_string(key.n) + ")";
}

HitKey key_of(const SquareHit& hit) { return HitKey{hit.q.q(), hit.a, hit.n}; }

bool PaperCheckReport::clean() const {
  return missing.empty() && extra.empty() && guaranteed_missing.empty() &&
         reverify_failures.empty();
}

PaperCheckReport paper_check(const SearchReport& report) {
  const SearchConfig& config = report.config;
  if (config.qmax != 50 || config.nmax != 1000) {
    throw DomainError("the published list check needs qmax = 50 and nmax = 1000 (got qmax = " +
                      std::to_string(config.qmax) + ", nmax = " + std::to_string(config.nmax) +
                      ")");
  }

  PaperCheckReport out;
  std::map<HitKey, const SquareHit*> found;
  for (const SquareHit& hit : report.hits) {
    found.emplace(key_of(hit), &hit);
    if (!reverify(hit)) out.reverify_failures.push_back(key_of(hit));
  }

  std::set<HitKey> accounted;
  const auto expect = [&](const HitKey& key, const BigInt& u) {
    if (!accounted.insert(key).second) return;
    auto it = found.find(key);
    if (it != found.end() && it->second->u == u) {
      out.matching.push_back(key);
    } else {
      out.missing.push_back(key);
      // A found hit with the wrong root stays unaccounted and shows up as extra.
      if (it != found.end()) accounted.erase(key);
    }
  };

  for (const PublishedSquare& entry : published_square_table()) {
    const HitKey key{entry.q, entry.a, entry.n};
    if (producible(config, entry.q, entry.a, entry.n)) {
      expect(key, BigInt(entry.u));
    } else if (!entry.erratum.empty()) {
      out.deviations.push_back({key, std::string(entry.erratum)});
    } else {
      ++out.not_applicable;
    }
  }

  if (config.degeneracy != DegeneracyFilter::exclude) {
    for (const SquareHit& hit : sporadic_list()) {
      if (producible(config, hit.q.q(), hit.a, hit.n)) {
        expect(key_of(hit), hit.u);
      } else {
        ++out.not_applicable;
      }
    }
    if (!config.skip_guaranteed) {
      for (const TracePair& pair : enumerate_pairs(config)) {
        if (!pair.degeneracy.is_degenerate()) continue;
        const auto m = static_cast<unsigned>(pair.degeneracy.order());
        for (unsigned n = m; n <= config.nmax; n += m) {
          const auto guaranteed = guaranteed_square(pair.q, pair.a, n);
          const HitKey key{pair.q.q(), pair.a, n};
          ++out.guaranteed_expected;
          accounted.insert(key);
          auto it = found.find(key);
          if (it != found.end() && it->second->u == guaranteed->u) {
            ++out.guaranteed_matching;
          } else {
            out.guaranteed_missing.push_back(key);
            if (it != found.end()) accounted.erase(key);
          }
        }
      }
    }
  }

  for (const auto& [key, hit] : found) {
    if (!accounted.contains(key)) out.extra.push_back(key);
  }
  std::sort(out.matching.begin(), out.matching.end());
  std::sort(out.missing.begin(), out.missing.end());
  return out;
}

std::string PaperCheckReport::render() const {
  std::ostringstream os;
  const auto list = [&os](const std::vector<HitKey>& keys) {
    for (const HitKey& key : keys) os << "  " << to_string(key) << '\n';
  };
  os << "matching: " << matching.size() << '\n';
  os << "missing: " << missing.size() << '\n';
  list(missing);
  os << "extra: " << extra.size() << '\n';
  list(extra);
  os << "expected deviations: " << deviations.size() << '\n';
  for (const Deviation& d : deviations) os << "  " << to_string(d.key) << ": " << d.reason << '\n';
  os << "not applicable under this configuration: " << not_applicable << '\n';
  os << "guaranteed squares: " << guaranteed_matching << " of " << guaranteed_expected
     << " matching\n";
  list(guaranteed_missing);
  os << "re-verification failures: " << reverify_failures.size() << '\n';
  list(reverify_failures);
  os << "verdict: " << (clean() ? "clean" : "MISMATCH");
  if (clean() && !deviations.empty()) {
    os << " (modulo " << deviations.size() << " documented errata)";
  }
  os << '\n';
  return os.str();
}

}  // namespace frobsq
