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
#include <svg2vml/number.h>
#include <svg2vml/svg_dom.h>
#include <svg2vml/vml_node.h>

#include <optional>
#include <string>

namespace svg2vml {

enum class OutputMode { VmlHtml, XhtmlPassthrough };

struct EmitOptions {
    OutputMode mode = OutputMode::VmlHtml;
    /// Decimals for mapped numbers, in [0, kMaxPrecision]. Applied when the
    /// tree is mapped; serialization never reformats numbers.
    int precision = kDefaultPrecision;
    bool pretty = false;
    std::optional<std::string> title;
};

/// "name:value;" for each entry, in order.
std::string serializeStyle(const AttributeTable& style);

/// Markup for one node. Attributes are written in order, followed by the
/// style table; childless elements self-close. In pretty mode every
/// element starts on its own line indented two spaces per level, except
/// inside text-bearing elements, whose content is written inline.
std::string serializeNode(const VmlNode& node, bool pretty, int depth = 0);

/// HTML page that binds the v: prefix to the VML behavior and holds the
/// serialized tree in its body.
std::string emitVmlHtml(const VmlNode& tree, const EmitOptions& options);

/// The document as a markup tree: SVG elements under the "svg:" prefix,
/// foreign markup under its own names, character data as text nodes.
VmlNode passthroughTree(const SvgNode& node);

/// XHTML page with the original SVG inline. The namespaces are declared on
/// the html element, so an empty document yields a bare <svg:svg/>.
std::string emitXhtmlPassthrough(const SvgDocument& doc, const EmitOptions& options);

} // namespace svg2vml
