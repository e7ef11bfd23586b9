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

#include <svg2vml/diagnostics.h>

#include <algorithm>

namespace svg2vml {

std::string Diagnostic::format() const {
    std::string out = severity == Severity::Error ? "error " : "warning ";
    out += code;
    out += ": ";
    out += message;
    if (!location.empty()) {
        out += " @";
        out += location;
    }
    return out;
}

ConversionAborted::ConversionAborted(Diagnostic diagnostic)
    : std::runtime_error(diagnostic.format())
    , diagnostic_(std::move(diagnostic)) {
}

void Diagnostics::warning(std::string_view code, std::string message, std::string location) {
    report({Severity::Warning, std::string(code), std::move(message), std::move(location)});
}

void Diagnostics::error(std::string_view code, std::string message, std::string location) {
    report({Severity::Error, std::string(code), std::move(message), std::move(location)});
}

void Diagnostics::report(Diagnostic d) {
    if (strict_) {
        d.severity = Severity::Error;
    }
    items_.push_back(d);
    if (strict_) {
        throw ConversionAborted(std::move(d));
    }
}

bool Diagnostics::hasErrors() const noexcept {
    return std::any_of(items_.begin(), items_.end(), [](const Diagnostic& d) {
        return d.severity == Severity::Error;
    });
}

bool Diagnostics::contains(std::string_view code) const noexcept {
    return std::any_of(items_.begin(), items_.end(), [code](const Diagnostic& d) {
        return d.code == code;
    });
}

} // namespace svg2vml
