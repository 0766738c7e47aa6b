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

namespace frobsq {
namespace {

constexpr std::string_view kInadmissible27 =
    "a = 3 is not Waterhouse-admissible for q = 27 (p | a, b odd allows only 0 and +-9); "
    "produced only with hasse admissibility";
constexpr std::string_view kDegenerate32 =
    "(32, 8) is degenerate (a^2 = 2q, m = 4); produced only when degenerate pairs are included";
constexpr std::string_view kNotPrimePower36 = "36 is not a prime power; no field of that size exists";

// Grouped by the square, as published.
constexpr PublishedSquare kPublished[] = {
    // 4 = 2^2
    {2, -1, 1, 2, {}}, {2, -1, 3, 2, {}}, {4, 1, 1, 2, {}}, {5, 2, 1, 2, {}},
    {7, 4, 1, 2, {}}, {8, 5, 1, 2, {}},
    // 9 = 3^2
    {5, -3, 1, 3, {}}, {7, -1, 1, 3, {}}, {9, 1, 1, 3, {}}, {11, 3, 1, 3, {}},
    {13, 5, 1, 3, {}},
    // 16 = 4^2
    {2, -1, 4, 4, {}}, {2, 1, 4, 4, {}}, {4, -3, 2, 4, {}}, {4, 3, 2, 4, {}},
    {11, -4, 1, 4, {}}, {13, -2, 1, 4, {}}, {16, 1, 1, 4, {}}, {17, 2, 1, 4, {}},
    {19, 4, 1, 4, {}}, {23, 8, 1, 4, {}},
    // 25 = 5^2
    {17, -7, 1, 5, {}}, {19, -5, 1, 5, {}}, {23, -1, 1, 5, {}}, {25, 1, 1, 5, {}},
    {27, 3, 1, 5, kInadmissible27}, {29, 5, 1, 5, {}}, {31, 7, 1, 5, {}},
    {32, 8, 1, 5, kDegenerate32},
    // 36 = 6^2
    {3, 1, 3, 6, {}}, {27, -8, 1, 6, {}}, {29, -6, 1, 6, {}}, {31, -4, 1, 6, {}},
    {36, 1, 1, 6, kNotPrimePower36}, {37, 2, 1, 6, {}}, {41, 6, 1, 6, {}},
    {43, 8, 1, 6, {}}, {47, 12, 1, 6, {}},
    // 49 = 7^2
    {37, -11, 1, 7, {}}, {41, -7, 1, 7, {}}, {43, -5, 1, 7, {}}, {47, -1, 1, 7, {}},
    {49, 1, 1, 7, {}},
    // larger squares
    {5, 3, 3, 12, {}},
    {7, -4, 3, 18, {}}, {7, -1, 3, 18, {}}, {7, 5, 3, 18, {}},
    {2, -1, 11, 46, {}},
    {5, 1, 5, 55, {}},
    {17, -7, 3, 70, {}},
    {23, -1, 3, 110, {}},
    {29, -9, 3, 156, {}},
    {47, -1, 3, 322, {}},
};

}  // namespace

std::span<const PublishedSquare> published_square_table() { return kPublished; }

}  // namespace frobsq
