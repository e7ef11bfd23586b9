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


#include <svg2vml/convert.h>

#include <svg2vml/mappers.h>
#include <svg2vml/svg_dom.h>

#include <algorithm>

namespace svg2vml {

bool ConvertResult::hasErrors() const noexcept {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

ConvertResult convertSvg(std::string_view text, const ConvertOptions& options) {
    ConvertResult result;
    Diagnostics diags(options.strict);
    EmitOptions emit;
    emit.mode = options.mode;
    emit.precision = std::clamp(options.precision, 0, kMaxPrecision);
    emit.pretty = options.pretty;
    emit.title = options.title;
    try {
        auto doc = parseSvg(text, diags);
        if (doc) {
            if (options.mode == OutputMode::XhtmlPassthrough) {
                result.output = emitXhtmlPassthrough(*doc, emit);
            }
            else {
                MapOptions map;
                map.precision = emit.precision;
                result.output = emitVmlHtml(mapDocument(*doc, map, diags), emit);
            }
        }
    }
    catch (const ConversionAborted&) {
        result.output.reset();
    }
    result.diagnostics = diags.items();
    return result;
}

} // namespace svg2vml
