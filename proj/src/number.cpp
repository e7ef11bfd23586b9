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

#include <svg2vml/number.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace svg2vml {

namespace {

bool isDigit(char c) noexcept {
    return c >= '0' && c <= '9';
}

} // namespace

void skipSpaces(std::string_view s, std::size_t& pos) noexcept {
    while (pos < s.size() && isXmlSpace(s[pos])) {
        ++pos;
    }
}

void skipCommaSpaces(std::string_view s, std::size_t& pos) noexcept {
    skipSpaces(s, pos);
    if (pos < s.size() && s[pos] == ',') {
        ++pos;
        skipSpaces(s, pos);
    }
}

std::optional<double> scanNumber(std::string_view s, std::size_t& pos) noexcept {
    std::size_t i = pos;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    const std::size_t start = i;
    std::size_t intDigits = 0;
    while (i < s.size() && isDigit(s[i])) {
        ++i;
        ++intDigits;
    }
    std::size_t fracDigits = 0;
    if (i < s.size() && s[i] == '.') {
        std::size_t j = i + 1;
        while (j < s.size() && isDigit(s[j])) {
            ++j;
            ++fracDigits;
        }
        // "5." is accepted, a lone "." is not.
        if (intDigits > 0 || fracDigits > 0) {
            i = j;
        }
    }
    if (intDigits == 0 && fracDigits == 0) {
        return std::nullopt;
    }
    // An exponent is 'e' followed by digits; "2em" is a number and a unit.
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) {
            ++j;
        }
        if (j < s.size() && isDigit(s[j])) {
            return std::nullopt;
        }
    }
    double value = 0.0;
    // from_chars rejects a trailing '.', so parse "5." as "5".
    std::size_t end = i;
    if (s[end - 1] == '.') {
        --end;
    }
    auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + end, value);
    if (ec != std::errc() || ptr != s.data() + end) {
        return std::nullopt;
    }
    pos = i;
    return negative ? -value : value;
}

std::optional<double> parseNumber(std::string_view s) noexcept {
    std::size_t pos = 0;
    skipSpaces(s, pos);
    auto value = scanNumber(s, pos);
    if (!value) {
        return std::nullopt;
    }
    skipSpaces(s, pos);
    if (pos != s.size()) {
        return std::nullopt;
    }
    return value;
}

std::optional<std::vector<double>> parseNumberList(std::string_view s) {
    std::vector<double> out;
    std::size_t pos = 0;
    skipSpaces(s, pos);
    while (pos < s.size()) {
        auto value = scanNumber(s, pos);
        if (!value) {
            return std::nullopt;
        }
        out.push_back(*value);
        const std::size_t before = pos;
        skipSpaces(s, pos);
        bool comma = false;
        if (pos < s.size() && s[pos] == ',') {
            comma = true;
            ++pos;
            skipSpaces(s, pos);
        }
        if (pos == s.size()) {
            if (comma) {
                return std::nullopt; // trailing comma
            }
            break;
        }
        if (pos == before) {
            // Adjacent numbers need a separator unless the next one starts
            // with a sign or a dot ("10-5", "0.5.5").
            const char c = s[pos];
            if (c != '-' && c != '+' && c != '.') {
                return std::nullopt;
            }
        }
    }
    return out;
}

std::string formatNumber(double value, int precision) {
    precision = std::clamp(precision, 0, kMaxPrecision);
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
    std::string out(buf);
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') {
            out.pop_back();
        }
        if (out.back() == '.') {
            out.pop_back();
        }
    }
    if (out == "-0") {
        out = "0";
    }
    return out;
}

std::string_view trim(std::string_view s) noexcept {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && isXmlSpace(s[b])) {
        ++b;
    }
    while (e > b && isXmlSpace(s[e - 1])) {
        --e;
    }
    return s.substr(b, e - b);
}

} // namespace svg2vml
