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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "frobsq/cli.hpp"
#include "frobsq/curves.hpp"
#include "frobsq/numeric.hpp"
#include "frobsq/search.hpp"
#include "frobsq/sequence.hpp"
#include "frobsq/traces.hpp"

namespace {

using frobsq::BigInt;
using frobsq::PrimePower;

constexpr std::uint64_t kQmax = 50;
constexpr unsigned kNmax = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<frobsq::TracePair> all_hasse_pairs() {
  frobsq::SearchConfig config;
  config.qmax = kQmax;
  config.nmax = kNmax;
  config.admissibility = frobsq::Admissibility::hasse;
  config.degeneracy = frobsq::DegeneracyFilter::include;
  return frobsq::enumerate_pairs(config);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
}

std::string pair_text(const frobsq::TracePair& pair) {
  return "(" + std::to_string(pair.q.q()) + ", " + std::to_string(pair.a) + ")";
}

Outcome criterion_1() {
  frobsq::SearchConfig config;
  const auto report = frobsq::run_search(config);
  const auto check = frobsq::paper_check(report);
  Outcome out;
  out.pass = check.clean();
  std::ostringstream os;
  os << report.hits.size() << " hits; " << check.matching.size() << " matching, "
     << check.missing.size() << " missing, " << check.extra.size() << " extra, "
     << check.deviations.size() << " annotated errata";
  for (const auto& key : check.missing) os << "; missing " << frobsq::to_string(key);
  for (const auto& key : check.extra) os << "; extra " << frobsq::to_string(key);
  out.detail = os.str();
  return out;
}

Outcome criterion_2() {
  Outcome out;
  std::size_t checked = 0;
  for (const auto& pair : all_hasse_pairs()) {
    if (!pair.degeneracy.is_degenerate() || !frobsq::waterhouse_admissible(pair.q, pair.a)) continue;
    const auto m = static_cast<unsigned>(pair.degeneracy.order());
    frobsq::TraceSequence seq(pair.q, pair.a);
    for (unsigned n = 1; n <= kNmax; ++n) {
      const auto& term = seq.next();
      if (n % m != 0) continue;
      ++checked;
      const auto root = frobsq::perfect_square_root(term.points);
      const auto guaranteed = frobsq::guaranteed_square(pair.q, pair.a, n);
      bool ok = root.has_value() && guaranteed.has_value() && *root == guaranteed->u;
      if (ok && m == 1) {
        // a = 2c with c = +-p^v, so u = |c^n - 1|.
        BigInt c_n;
        mpz_pow_ui(c_n.get_mpz_t(), BigInt(pair.a / 2).get_mpz_t(), n);
        ok = *root == abs(c_n - 1);
      } else if (ok) {
        const BigInt qn = frobsq::big_pow(pair.q.q(), n);
        const auto s = frobsq::perfect_square_root(qn);
        ok = s.has_value() && (*root == *s - 1 || *root == *s + 1);
      }
      if (!ok && out.pass) {
        out.pass = false;
        out.detail = "first failure at " + pair_text(pair) + " n=" + std::to_string(n);
      }
    }
  }
  if (out.pass) out.detail = std::to_string(checked) + " (q, a, n) with m | n checked";
  return out;
}

Outcome criterion_3() {
  frobsq::SearchConfig config;
  config.degeneracy = frobsq::DegeneracyFilter::only;
  config.skip_guaranteed = true;
  const auto report = frobsq::run_search(config);
  std::set<frobsq::HitKey> found;
  for (const auto& hit : report.hits) found.insert(frobsq::key_of(hit));
  std::set<frobsq::HitKey> expected;
  for (const auto& hit : frobsq::sporadic_list()) {
    if (hit.q.q() < kQmax && hit.n <= kNmax) expected.insert(frobsq::key_of(hit));
  }
  Outcome out;
  out.pass = found == expected;
  out.detail = std::to_string(found.size()) + " found, " + std::to_string(expected.size()) +
               " listed";
  return out;
}

Outcome criterion_4() {
  const auto pairs = all_hasse_pairs();
  std::vector<char> agree(pairs.size(), 0);
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto& pair = pairs[i];
    const auto curve = frobsq::realize_trace(pair.q, pair.a);
    bool ok = curve.has_value() == frobsq::waterhouse_admissible(pair.q, pair.a);
    if (ok && curve) {
      ok = frobsq::is_nonsingular(*curve) &&
           frobsq::count_points(*curve) ==
               pair.q.q() + 1 - static_cast<std::uint64_t>(pair.a);
    }
    agree[i] = ok ? 1 : 0;
  });
  Outcome out;
  std::size_t admissible = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (frobsq::waterhouse_admissible(pairs[i].q, pairs[i].a)) ++admissible;
    if (!agree[i]) {
      out.pass = false;
      out.detail += "disagreement at " + pair_text(pairs[i]) + "; ";
    }
  }
  if (out.pass) {
    out.detail = std::to_string(pairs.size()) + " pairs, " + std::to_string(admissible) +
                 " realized, " + std::to_string(pairs.size() - admissible) + " proven absent";
  }
  return out;
}

Outcome criterion_5() {
  std::vector<frobsq::TracePair> pairs;
  for (const auto& pair : all_hasse_pairs()) {
    if (frobsq::waterhouse_admissible(pair.q, pair.a)) pairs.push_back(pair);
  }
  std::vector<std::string> failures(pairs.size());
  std::atomic<std::size_t> counted{0};
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto& pair = pairs[i];
    const auto curve = frobsq::realize_trace(pair.q, pair.a);
    if (!curve) {
      failures[i] = "no curve for " + pair_text(pair);
      return;
    }
    frobsq::TraceSequence seq(pair.q, pair.a);
    std::uint64_t qn = 1;
    for (unsigned n = 1;; ++n) {
      qn *= pair.q.q();
      if (qn > frobsq::kBaseChangeGuard) break;
      const auto& term = seq.next();
      const std::uint64_t count = frobsq::base_change_count(*curve, n);
      ++counted;
      if (BigInt(static_cast<unsigned long>(count)) != term.points) {
        failures[i] = pair_text(pair) + " n=" + std::to_string(n);
        return;
      }
    }
  });
  Outcome out;
  for (const auto& f : failures) {
    if (!f.empty()) {
      out.pass = false;
      out.detail += f + "; ";
    }
  }
  if (out.pass) {
    out.detail = std::to_string(counted.load()) + " extension counts over " +
                 std::to_string(pairs.size()) + " curves";
  }
  return out;
}

Outcome criterion_6() {
  const auto pairs = all_hasse_pairs();
  std::vector<std::string> failures(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto& pair = pairs[i];
    const auto terms = frobsq::trace_sequence(pair.q, pair.a, kNmax);
    std::vector<BigInt> q_powers(kNmax + 1);
    q_powers[0] = 1;
    for (unsigned n = 1; n <= kNmax; ++n) q_powers[n] = q_powers[n - 1] * pair.q.q();
    for (unsigned n = 1; n <= kNmax && failures[i].empty(); ++n) {
      const auto& t = terms[n - 1];
      if (t.trace * t.trace > 4 * q_powers[n]) failures[i] = "Hasse";
      if (t.points <= 0) failures[i] = "positivity";
      if (2 * n <= kNmax && terms[2 * n - 1].trace != t.trace * t.trace - 2 * q_powers[n]) {
        failures[i] = "doubling";
      }
      for (unsigned k = 2 * n; k <= kNmax; k += n) {
        if (mpz_divisible_p(terms[k - 1].points.get_mpz_t(), t.points.get_mpz_t()) == 0) {
          failures[i] = "Lagrange";
        }
      }
      if (!failures[i].empty()) failures[i] += " at " + pair_text(pair) + " n=" + std::to_string(n);
    }
  });
  Outcome out;
  for (const auto& f : failures) {
    if (!f.empty()) {
      out.pass = false;
      out.detail += f + "; ";
    }
  }

  std::mt19937_64 rng(0x5eed);
  gmp_randclass gmp_rng(gmp_randinit_default);
  gmp_rng.seed(static_cast<unsigned long>(rng()));
  std::size_t round_trips = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto bits = static_cast<unsigned long>(1 + rng() % 6000);
    const BigInt x = gmp_rng.get_z_bits(bits);
    const BigInt r = frobsq::isqrt(x);
    const auto exact = frobsq::perfect_square_root(x * x);
    const auto near = frobsq::perfect_square_root(x * x + 1);
    const bool ok = r * r <= x && (r + 1) * (r + 1) > x && exact && *exact == x &&
                    (x == 0 ? near.has_value() : !near.has_value());
    if (ok) {
      ++round_trips;
    } else if (out.pass || out.detail.find("isqrt") == std::string::npos) {
      out.pass = false;
      out.detail += "isqrt round trip failed at " + std::to_string(bits) + " bits; ";
    }
  }
  if (out.pass) {
    out.detail = std::to_string(pairs.size()) + " pairs x " + std::to_string(kNmax) +
                 " terms; " + std::to_string(round_trips) + " random round trips";
  }
  return out;
}

Outcome criterion_7() {
  // The asymptotic upper bound on the number of squares is not computed. The
  // check is that no user-facing text claims it.
  std::ostringstream text;
  std::ostringstream sink;
  for (const char* sub : {"search", "admissible", "classify", "sequence", "realize",
                          "verify-extension", "paper-check"}) {
    frobsq::run_cli({sub, "--help"}, text, sink);
  }
  frobsq::run_cli({"--help"}, text, sink);
  frobsq::run_cli({"paper-check"}, text, sink);
  const std::string all = text.str();
  Outcome out;
  for (const char* claim : {"10^194", "e194", "e+194", "5.6"}) {
    if (all.find(claim) != std::string::npos) {
      out.pass = false;
      out.detail = std::string("output contains '") + claim + "'";
    }
  }
  if (out.pass) out.detail = "upper bound on the square count not verified and not claimed";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"C1 published square list (q < 50, n <= 1000)", criterion_1},
      {"C2 guaranteed squares for m | n", criterion_2},
      {"C3 sporadic squares complete in range", criterion_3},
      {"C4 realize_trace iff admissible", criterion_4},
      {"C5 base-change counts match the recurrence", criterion_5},
      {"C6 sequence and isqrt properties", criterion_6},
      {"C7 count bound declared non-reproduced", criterion_7},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome outcome = run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << ": " << outcome.detail << " ("
              << seconds << " s)" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
