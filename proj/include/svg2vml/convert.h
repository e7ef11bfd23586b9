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

#include <svg2vml/diagnostics.h>
#include <svg2vml/emitter.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace svg2vml {

struct ConvertOptions {
    OutputMode mode = OutputMode::VmlHtml;
    int precision = kDefaultPrecision; // clamped to [0, kMaxPrecision]
    bool strict = false;
    bool pretty = false;
    std::optional<std::string> title;
};

struct ConvertResult {
    /// Absent when the input could not be parsed or a strict conversion
    /// stopped at its first error.
    std::optional<std::string> output;
    std::vector<Diagnostic> diagnostics;

    bool hasErrors() const noexcept;
};

/// parse -> map -> emit. Lenient conversions always produce output once
/// the document parses, with errors reported alongside.
ConvertResult convertSvg(std::string_view text, const ConvertOptions& options);

} // namespace svg2vml
