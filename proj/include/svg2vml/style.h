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

#include <svg2vml/attribute_table.h>
#include <svg2vml/diagnostics.h>
#include <svg2vml/number.h>
#include <svg2vml/svg_dom.h>
#include <svg2vml/vml_node.h>

#include <optional>
#include <string>

namespace svg2vml {

/// Resolved stroke features. Absent members are left to VML defaults.
struct StrokeSpec {
    std::optional<std::string> color;
    std::optional<double> weight;
    std::optional<std::string> endcap;
    std::optional<std::string> joinstyle;
    std::optional<double> miterlimit;
    std::optional<double> opacity; // in [0, 1]
};

/// Presentation mapping for one shape: attributes to set on the host
/// element (stroked="f", filled="f") and at most one child node.
struct PaintResult {
    AttributeTable hostAttributes;
    std::optional<VmlNode> child;
};

enum class GradientDirection { Horizontal, Vertical };

struct GradientSpec {
    GradientDirection direction = GradientDirection::Horizontal;
    std::string colorStart; // color at offset 0%
    std::string colorEnd;   // color at offset 100%
};

/// True when `name` is one of the six stroke attributes.
bool isStrokeAttribute(std::string_view name) noexcept;

/// Reads the stroke attributes of `attrs`. Returns nullopt when none is
/// present or stroke is "none". Linecap "butt" becomes "flat"; unknown
/// cap and join tokens pass through with an UNKNOWN_TOKEN warning.
std::optional<StrokeSpec> resolveStroke(const AttributeTable& attrs, Diagnostics& diags,
                                        const std::string& location = {});

/// v:stroke with attributes in the order color, weight, endcap, joinstyle,
/// miterlimit, opacity.
VmlNode strokeElement(const StrokeSpec& spec, int precision = kDefaultPrecision);

/// stroke="none" sets stroked="f" on the host; otherwise a v:stroke child
/// is produced when any stroke attribute is present.
PaintResult mapStroke(const AttributeTable& attrs, Diagnostics& diags, const std::string& location = {},
                      int precision = kDefaultPrecision);

/// fill="none" sets filled="f"; a color yields v:fill color; url(#id) is
/// resolved through `doc` into a two-color gradient fill. An unresolvable
/// reference reports DANGLING_REF.
PaintResult mapFill(const AttributeTable& attrs, const SvgDocument& doc, Diagnostics& diags,
                    const std::string& location = {});

/// Classifies a linearGradient. y1 = y2 is horizontal, x1 = x2 vertical;
/// a reversed vector swaps the colors. Anything other than exactly two
/// stops at 0% and 100% along an axis reports UNSUPPORTED_GRADIENT.
std::optional<GradientSpec> resolveGradient(const SvgNode& gradient, Diagnostics& diags);

/// 100 * value. Values outside [0, 1] are clamped with OPACITY_RANGE.
double mapOpacity(double value, Diagnostics& diags, const std::string& location = {});

} // namespace svg2vml
