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

#include "frobsq/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "frobsq/curves.hpp"
#include "frobsq/errors.hpp"
#include "frobsq/records.hpp"
#include "frobsq/search.hpp"
#include "frobsq/sequence.hpp"
#include "frobsq/traces.hpp"

namespace frobsq {
namespace {

struct SearchOptions {
  std::uint64_t qmax = 50;
  unsigned nmax = 1000;
  std::string admissibility = "waterhouse";
  std::string degenerate = "exclude";
  bool skip_guaranteed = false;
  unsigned workers = 0;

  SearchConfig config() const {
    SearchConfig c;
    c.qmax = qmax;
    c.nmax = nmax;
    c.admissibility = parse_admissibility(admissibility);
    c.degeneracy = parse_degeneracy_filter(degenerate);
    c.skip_guaranteed = skip_guaranteed;
    c.workers = workers;
    return c;
  }
};

void add_search_options(CLI::App* cmd, SearchOptions& o) {
  cmd->add_option("--qmax", o.qmax, "Exclusive upper bound on q")->capture_default_str();
  cmd->add_option("--nmax", o.nmax, "Largest extension degree n")->capture_default_str();
  cmd->add_option("--admissibility", o.admissibility, "Trace filter")
      ->check(CLI::IsMember({"waterhouse", "hasse"}))
      ->capture_default_str();
  cmd->add_option("--degenerate", o.degenerate, "Degenerate pairs")
      ->check(CLI::IsMember({"exclude", "include", "only"}))
      ->capture_default_str();
  cmd->add_flag("--skip-guaranteed", o.skip_guaranteed,
                "Drop degenerate hits with m | n (keep only sporadic ones)");
  cmd->add_option("--workers", o.workers, "Worker threads (0 = hardware)")->capture_default_str();
}

int cmd_search(const SearchOptions& options, const std::string& format_name,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
  const SearchReport report = run_search(options.config());
  std::vector<OutputRecord> records;
  records.reserve(report.hits.size());
  for (const SquareHit& hit : report.hits) records.push_back(to_record(hit));

  const OutputFormat format = parse_output_format(format_name);
  if (out_path.empty()) {
    write_records(out, records, format);
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw DomainError("cannot open output file '" + out_path + "'");
    write_records(file, records, format);
  }
  err << report.hits.size() << " hits from " << report.pairs_scanned << " (q, a) pairs in "
      << report.elapsed_seconds << " s\n";
  return kExitOk;
}

int cmd_admissible(std::uint64_t q_value, std::ostream& out) {
  const PrimePower q = PrimePower::of(q_value);
  const auto traces = admissible_traces(q);
  for (std::size_t i = 0; i < traces.size(); ++i) out << (i ? " " : "") << traces[i];
  out << '\n';
  return kExitOk;
}

int cmd_classify(std::uint64_t q_value, std::int64_t a, std::ostream& out) {
  out << classify_degeneracy(PrimePower::of(q_value), a).describe() << '\n';
  return kExitOk;
}

int cmd_sequence(std::uint64_t q_value, std::int64_t a, unsigned nmax, bool squares_only,
                 std::ostream& out) {
  const PrimePower q = PrimePower::of(q_value);
  if (nmax == 0) throw DomainError("nmax must be >= 1");
  TraceSequence seq(q, a);
  out << "n\ta_n\tN\tu\n";
  for (unsigned i = 0; i < nmax; ++i) {
    const SequenceTerm& term = seq.next();
    const auto root = perfect_square_root(term.points);
    if (squares_only && !root) continue;
    out << term.n << '\t' << term.trace.get_str() << '\t' << term.points.get_str() << '\t'
        << (root ? root->get_str() : "-") << '\n';
  }
  return kExitOk;
}

int cmd_realize(std::uint64_t q_value, std::int64_t a, std::ostream& out) {
  const PrimePower q = PrimePower::of(q_value);
  if (!within_hasse(q.q(), a)) {
    throw DomainError("trace " + std::to_string(a) + " violates the Hasse bound for q = " +
                      std::to_string(q.q()));
  }
  if (!waterhouse_admissible(q, a)) {
    out << "none: inadmissible\n";
    return kExitOk;
  }
  const auto curve = realize_trace(q, a);
  if (!curve) throw InvariantViolation("admissible trace has no realizing curve");
  out << curve->render() << '\n';
  out << "N = " << (static_cast<std::int64_t>(q.q()) + 1 - a) << ", a = " << a << '\n';
  return kExitOk;
}

int cmd_verify_extension(std::uint64_t q_value, std::int64_t a, std::uint64_t limit,
                         std::ostream& out) {
  const PrimePower q = PrimePower::of(q_value);
  if (!within_hasse(q.q(), a)) {
    throw DomainError("trace " + std::to_string(a) + " violates the Hasse bound for q = " +
                      std::to_string(q.q()));
  }
  if (limit > kDefaultFieldSizeGuard) {
    throw ResourceError("count limit " + std::to_string(limit) + " exceeds field size guard " +
                        std::to_string(kDefaultFieldSizeGuard));
  }
  const auto curve = realize_trace(q, a);
  if (!curve) throw DomainError("no curve over GF(" + std::to_string(q.q()) +
                                ") has trace " + std::to_string(a) + " (inadmissible)");
  out << "curve: " << curve->render() << '\n';
  out << "n\tcount\texpected\tstatus\n";
  bool all_ok = true;
  TraceSequence seq(q, a);
  BigInt q_power = 1;
  for (unsigned n = 1;; ++n) {
    q_power *= static_cast<unsigned long>(q.q());
    if (q_power > limit) break;
    const SequenceTerm& term = seq.next();
    const std::uint64_t count = base_change_count(*curve, n, limit);
    const bool ok = BigInt(static_cast<unsigned long>(count)) == term.points;
    all_ok = all_ok && ok;
    out << n << '\t' << count << '\t' << term.points.get_str() << '\t' << (ok ? "ok" : "MISMATCH")
        << '\n';
  }
  return all_ok ? kExitOk : kExitMismatch;
}

int cmd_paper_check(const SearchOptions& options, std::ostream& out) {
  const SearchConfig config = options.config();
  if (config.qmax != 50 || config.nmax != 1000) {
    // Fail before spending time on the scan.
    throw DomainError("paper-check needs --qmax 50 and --nmax 1000");
  }
  const SearchReport report = run_search(config);
  const PaperCheckReport check = paper_check(report);
  out << "published list check: qmax=" << config.qmax << " nmax=" << config.nmax
      << " admissibility=" << to_string(config.admissibility)
      << " degenerate=" << to_string(config.degeneracy)
      << (config.skip_guaranteed ? " skip-guaranteed" : "") << '\n';
  out << "hits: " << report.hits.size() << " from " << report.pairs_scanned << " (q, a) pairs\n";
  out << check.render();
  return check.clean() ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect squares among elliptic-curve point counts over F_{q^n}", "frobsq"};
  app.require_subcommand(1);

  SearchOptions search_options;
  std::string format = "jsonl";
  std::string out_path;
  auto* search = app.add_subcommand("search", "Scan (q, a) pairs for square point counts");
  add_search_options(search, search_options);
  search->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"jsonl", "csv", "table"}))
      ->capture_default_str();
  search->add_option("--out", out_path, "Write records to FILE instead of stdout");

  std::uint64_t q = 0;
  std::int64_t a = 0;
  unsigned nmax = 0;
  bool squares_only = false;
  std::uint64_t count_limit = kBaseChangeGuard;

  auto* admissible = app.add_subcommand("admissible", "List traces realized by some curve");
  admissible->add_option("--q", q, "Field size")->required();

  auto* classify = app.add_subcommand("classify", "Degeneracy of alpha/beta");
  classify->add_option("--q", q, "Field size")->required();
  classify->add_option("--a", a, "Trace of Frobenius")->required();

  auto* sequence = app.add_subcommand("sequence", "Print a_n and N_n");
  sequence->add_option("--q", q, "Field size")->required();
  sequence->add_option("--a", a, "Trace of Frobenius")->required();
  sequence->add_option("--nmax", nmax, "Last n")->required();
  sequence->add_flag("--squares-only", squares_only, "Only rows where N_n is a square");

  auto* realize = app.add_subcommand("realize", "First curve with the given trace");
  realize->add_option("--q", q, "Field size")->required();
  realize->add_option("--a", a, "Trace of Frobenius")->required();

  auto* verify = app.add_subcommand("verify-extension",
                                    "Compare brute-force extension counts with the recurrence");
  verify->add_option("--q", q, "Field size")->required();
  verify->add_option("--a", a, "Trace of Frobenius")->required();
  verify->add_option("--count-limit", count_limit, "Largest q^n to count")->capture_default_str();

  SearchOptions check_options;
  auto* check = app.add_subcommand("paper-check", "Diff a full search against the published tables");
  add_search_options(check, check_options);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (search->parsed()) return cmd_search(search_options, format, out_path, out, err);
    if (admissible->parsed()) return cmd_admissible(q, out);
    if (classify->parsed()) return cmd_classify(q, a, out);
    if (sequence->parsed()) return cmd_sequence(q, a, nmax, squares_only, out);
    if (realize->parsed()) return cmd_realize(q, a, out);
    if (verify->parsed()) return cmd_verify_extension(q, a, count_limit, out);
    if (check->parsed()) return cmd_paper_check(check_options, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace frobsq
