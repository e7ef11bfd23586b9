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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace svg2vml {

enum class Severity { Warning, Error };

/// Stable diagnostic codes. The string values are part of the command-line
/// compatibility surface and must not change.
namespace codes {
inline constexpr std::string_view UnsupportedCommand = "UNSUPPORTED_COMMAND";
inline constexpr std::string_view FutureWorkArc = "FUTURE_WORK_ARC";
inline constexpr std::string_view UnsupportedTransform = "UNSUPPORTED_TRANSFORM";
inline constexpr std::string_view UnsupportedGradient = "UNSUPPORTED_GRADIENT";
inline constexpr std::string_view UnsupportedUnit = "UNSUPPORTED_UNIT";
inline constexpr std::string_view DanglingRef = "DANGLING_REF";
inline constexpr std::string_view SingularSkew = "SINGULAR_SKEW";

inline constexpr std::string_view MalformedXml = "MALFORMED_XML";
inline constexpr std::string_view NoSvgRoot = "NO_SVG_ROOT";
inline constexpr std::string_view UnknownElement = "UNKNOWN_ELEMENT";
inline constexpr std::string_view DuplicateId = "DUPLICATE_ID";
inline constexpr std::string_view InvalidNumber = "INVALID_NUMBER";
inline constexpr std::string_view InvalidViewBox = "INVALID_VIEWBOX";
inline constexpr std::string_view InvalidPoints = "INVALID_POINTS";
inline constexpr std::string_view InvalidPath = "INVALID_PATH";
inline constexpr std::string_view InvalidTransform = "INVALID_TRANSFORM";
inline constexpr std::string_view MissingViewBox = "MISSING_VIEWBOX";
inline constexpr std::string_view MissingRootSize = "MISSING_ROOT_SIZE";
inline constexpr std::string_view DegenerateShape = "DEGENERATE_SHAPE";
inline constexpr std::string_view NegativeRadius = "NEGATIVE_RADIUS";
inline constexpr std::string_view MissingHref = "MISSING_HREF";
inline constexpr std::string_view CircularRef = "CIRCULAR_REF";
inline constexpr std::string_view TextPathParent = "TEXTPATH_PARENT";
inline constexpr std::string_view DefaultFontSize = "DEFAULT_FONT_SIZE";
inline constexpr std::string_view UnknownToken = "UNKNOWN_TOKEN";
inline constexpr std::string_view OpacityRange = "OPACITY_RANGE";
inline constexpr std::string_view UnsupportedAttribute = "UNSUPPORTED_ATTRIBUTE";
inline constexpr std::string_view IoError = "IO_ERROR";
} // namespace codes

struct Diagnostic {
    Severity severity = Severity::Warning;
    std::string code;
    std::string message;
    std::string location; // "line:column", or empty when not tied to input text

    /// `severity code: message @location`
    std::string format() const;
};

/// Thrown by a strict Diagnostics sink when an error is reported.
class ConversionAborted : public std::runtime_error {
public:
    explicit ConversionAborted(Diagnostic diagnostic);
    const Diagnostic& diagnostic() const noexcept { return diagnostic_; }

private:
    Diagnostic diagnostic_;
};

/// Collects diagnostics for one conversion.
///
/// In strict mode warnings are promoted to errors and the first error throws
/// ConversionAborted after being recorded.
class Diagnostics {
public:
    Diagnostics() = default;
    explicit Diagnostics(bool strict) : strict_(strict) {}

    void warning(std::string_view code, std::string message, std::string location = {});
    void error(std::string_view code, std::string message, std::string location = {});
    void report(Diagnostic d);

    bool strict() const noexcept { return strict_; }
    bool hasErrors() const noexcept;
    bool contains(std::string_view code) const noexcept;
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }

    const std::vector<Diagnostic>& items() const noexcept { return items_; }
    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

private:
    bool strict_ = false;
    std::vector<Diagnostic> items_;
};

} // namespace svg2vml
