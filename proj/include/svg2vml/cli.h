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

#include <svg2vml/convert.h>

#include <iosfwd>
#include <string>

namespace svg2vml {

/// Path meaning standard input or standard output.
inline constexpr std::string_view kStdStream = "-";

struct CliConfig {
    std::string input;
    std::string output; // empty until resolved
    OutputMode mode = OutputMode::VmlHtml;
    int precision = kDefaultPrecision;
    bool strict = false;
    bool pretty = false;
    bool quiet = false;
};

/// Input stem plus ".html" or ".xhtml", next to the input; "-" for stdin.
std::string defaultOutputPath(const std::string& input, OutputMode mode);

/// Runs `svg2vml convert ...`. Returns 0 on success, 1 on conversion or
/// I/O errors, 2 on usage errors.
int runCli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace svg2vml
