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

#include "frobsq/records.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "frobsq/errors.hpp"

namespace frobsq {
namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

template <typename T>
T parse_number(const std::string& text, std::string_view field) {
  try {
    std::size_t used = 0;
    long long value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return static_cast<T>(value);
  } catch (const std::exception&) {
    throw DomainError("bad value '" + text + "' for field " + std::string(field));
  }
}

bool is_decimal(const std::string& text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

OutputRecord to_record(const SquareHit& hit) {
  OutputRecord r;
  r.q = hit.q.q();
  r.p = hit.q.p();
  r.b = hit.q.b();
  r.a = hit.a;
  r.n = hit.n;
  r.N = hit.points().get_str();
  r.u = hit.u.get_str();
  if (hit.degeneracy.is_degenerate()) r.degenerate_m = hit.degeneracy.order();
  r.admissible = waterhouse_admissible(hit.q, hit.a);
  r.source = std::string(to_string(hit.source));
  return r;
}

std::string to_jsonl(const OutputRecord& record) {
  ordered_json j;
  j["q"] = record.q;
  j["p"] = record.p;
  j["b"] = record.b;
  j["a"] = record.a;
  j["n"] = record.n;
  j["N"] = record.N;
  j["u"] = record.u;
  j["degenerate_m"] = record.degenerate_m ? ordered_json(*record.degenerate_m) : ordered_json();
  j["admissible"] = record.admissible;
  j["source"] = record.source;
  return j.dump();
}

OutputRecord from_jsonl(std::string_view line) {
  try {
    const ordered_json j = ordered_json::parse(line);
    OutputRecord r;
    r.q = j.at("q").get<std::uint64_t>();
    r.p = j.at("p").get<std::uint64_t>();
    r.b = j.at("b").get<unsigned>();
    r.a = j.at("a").get<std::int64_t>();
    r.n = j.at("n").get<unsigned>();
    r.N = j.at("N").get<std::string>();
    r.u = j.at("u").get<std::string>();
    if (!j.at("degenerate_m").is_null()) r.degenerate_m = j.at("degenerate_m").get<int>();
    r.admissible = j.at("admissible").get<bool>();
    r.source = j.at("source").get<std::string>();
    if (!is_decimal(r.N) || !is_decimal(r.u)) throw DomainError("N and u must be decimal strings");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed JSONL record: ") + e.what());
  }
}

std::string to_csv(const OutputRecord& record) {
  std::ostringstream os;
  os << record.q << ',' << record.p << ',' << record.b << ',' << record.a << ',' << record.n << ','
     << record.N << ',' << record.u << ',';
  if (record.degenerate_m) os << *record.degenerate_m;
  os << ',' << (record.admissible ? "true" : "false") << ',' << record.source;
  return os.str();
}

OutputRecord from_csv(std::string_view line) {
  const std::vector<std::string> f = split_csv(line);
  if (f.size() != 10) {
    throw DomainError("CSV record needs 10 fields, got " + std::to_string(f.size()));
  }
  OutputRecord r;
  r.q = parse_number<std::uint64_t>(f[0], "q");
  r.p = parse_number<std::uint64_t>(f[1], "p");
  r.b = parse_number<unsigned>(f[2], "b");
  r.a = parse_number<std::int64_t>(f[3], "a");
  r.n = parse_number<unsigned>(f[4], "n");
  if (!is_decimal(f[5]) || !is_decimal(f[6])) throw DomainError("N and u must be decimal strings");
  r.N = f[5];
  r.u = f[6];
  if (!f[7].empty()) r.degenerate_m = parse_number<int>(f[7], "degenerate_m");
  if (f[8] != "true" && f[8] != "false") throw DomainError("bad admissible flag '" + f[8] + "'");
  r.admissible = f[8] == "true";
  r.source = f[9];
  return r;
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "jsonl") return OutputFormat::jsonl;
  if (text == "csv") return OutputFormat::csv;
  if (text == "table") return OutputFormat::table;
  throw DomainError("unknown output format '" + std::string(text) + "'");
}

std::string abbreviate_digits(const std::string& digits) {
  if (digits.size() <= 12) return digits;
  return digits.substr(0, 12) + "…(" + std::to_string(digits.size()) + " digits)";
}

void write_records(std::ostream& os, std::span<const OutputRecord> records, OutputFormat format) {
  switch (format) {
    case OutputFormat::jsonl:
      for (const OutputRecord& r : records) os << to_jsonl(r) << '\n';
      return;
    case OutputFormat::csv:
      os << kCsvHeader << '\n';
      for (const OutputRecord& r : records) os << to_csv(r) << '\n';
      return;
    case OutputFormat::table:
      os << std::left << std::setw(5) << "q" << std::setw(6) << "a" << std::setw(6) << "n"
         << std::setw(30) << "N" << std::setw(30) << "u" << std::setw(4) << "m"
         << std::setw(5) << "adm" << "source\n";
      for (const OutputRecord& r : records) {
        // setw counts bytes; the ellipsis is three bytes wide but one column.
        const std::string big_n = abbreviate_digits(r.N);
        const std::string big_u = abbreviate_digits(r.u);
        const int pad_n = r.N.size() > 12 ? 32 : 30;
        const int pad_u = r.u.size() > 12 ? 32 : 30;
        os << std::setw(5) << r.q << std::setw(6) << r.a << std::setw(6) << r.n
           << std::setw(pad_n) << big_n << std::setw(pad_u) << big_u << std::setw(4)
           << (r.degenerate_m ? std::to_string(*r.degenerate_m) : "-") << std::setw(5)
           << (r.admissible ? "yes" : "no") << r.source << '\n';
      }
      os << std::right;
      return;
  }
}

}  // namespace frobsq
