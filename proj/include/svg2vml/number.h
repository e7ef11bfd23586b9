// Copyright 2026 The svg2vml Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace svg2vml {

inline constexpr int kDefaultPrecision = 6;
inline constexpr int kMaxPrecision = 12;

inline bool isXmlSpace(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

void skipSpaces(std::string_view s, std::size_t& pos) noexcept;

/// Skips whitespace with at most one comma in between.
void skipCommaSpaces(std::string_view s, std::size_t& pos) noexcept;

/// Reads `[+-]? (digits ('.' digits?)? | '.' digits)` starting at `pos`.
/// Exponent notation is rejected. On success `pos` is advanced past the
/// number; on failure it is left unchanged.
std::optional<double> scanNumber(std::string_view s, std::size_t& pos) noexcept;

/// Whole-string number, surrounding whitespace allowed.
std::optional<double> parseNumber(std::string_view s) noexcept;

/// Numbers separated by whitespace and/or commas. Empty input yields an
/// empty list; any stray token yields nullopt.
std::optional<std::vector<double>> parseNumberList(std::string_view s);

/// Fixed-point rendering with `precision` decimals, trailing zeros trimmed,
/// and negative zero printed as "0". Never uses exponent notation.
std::string formatNumber(double value, int precision = kDefaultPrecision);

std::string_view trim(std::string_view s) noexcept;

} // namespace svg2vml
