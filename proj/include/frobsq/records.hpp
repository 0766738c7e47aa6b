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

#ifndef FROBSQ_RECORDS_HPP_
#define FROBSQ_RECORDS_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobsq/sequence.hpp"

namespace frobsq {

/// Serialized form of a SquareHit. N and u are decimal strings because they
/// run to thousands of bits.
struct OutputRecord {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  unsigned b = 0;
  std::int64_t a = 0;
  unsigned n = 0;
  std::string N;
  std::string u;
  std::optional<int> degenerate_m;
  bool admissible = false;
  std::string source;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord to_record(const SquareHit& hit);

/// One JSON object, keys in field order, no trailing newline.
std::string to_jsonl(const OutputRecord& record);
/// Throws DomainError on malformed input.
OutputRecord from_jsonl(std::string_view line);

inline constexpr std::string_view kCsvHeader = "q,p,b,a,n,N,u,degenerate_m,admissible,source";
std::string to_csv(const OutputRecord& record);
OutputRecord from_csv(std::string_view line);

enum class OutputFormat { jsonl, csv, table };
OutputFormat parse_output_format(std::string_view text);

/// Decimal strings longer than 12 digits become "<first 12>…(D digits)".
std::string abbreviate_digits(const std::string& digits);

void write_records(std::ostream& os, std::span<const OutputRecord> records, OutputFormat format);

}  // namespace frobsq

#endif  // FROBSQ_RECORDS_HPP_
