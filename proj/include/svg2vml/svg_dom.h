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
#include <svg2vml/geometry.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace svg2vml {

enum class ElementKind {
    Svg,
    G,
    Defs,
    Use,
    Rect,
    Circle,
    Ellipse,
    Line,
    Polyline,
    Polygon,
    Path,
    Text,
    TextPath,
    LinearGradient,
    Stop,
    A,
    ForeignObject,
    Unknown,  // SVG-side element outside the supported set
    Foreign,  // arbitrary markup carried inside foreignObject
    CharData, // character data child
};

/// Maps an SVG local name to its kind; Unknown when unsupported.
ElementKind elementKindFromName(std::string_view localName) noexcept;

/// Canonical SVG local name of a supported kind ("" for the others).
std::string_view elementName(ElementKind kind) noexcept;

struct SourceLocation {
    int line = 0;
    int column = 0;

    std::string str() const;
};

/// The canonical reference attribute. All other namespace prefixes on
/// attributes are stripped.
inline constexpr std::string_view kHrefAttribute = "xlink:href";

struct SvgNode {
    ElementKind kind = ElementKind::Unknown;
    std::string name; // local name; qualified name for Foreign nodes
    AttributeTable attributes;
    std::vector<SvgNode> children;
    std::optional<std::string> text; // CharData payload
    SourceLocation location;

    const std::string* attribute(std::string_view attrName) const noexcept {
        return attributes.find(attrName);
    }
    bool hasAttribute(std::string_view attrName) const noexcept {
        return attributes.contains(attrName);
    }
    bool isCharData() const noexcept { return kind == ElementKind::CharData; }

    /// Concatenated payload of the direct CharData children.
    std::string directText() const;

    /// Reference target from xlink:href (or a bare href), without the '#'.
    std::optional<std::string> hrefId() const;
};

/// Same kinds, names, attributes (in order), payloads, and children.
/// Source locations are ignored.
bool structurallyEqual(const SvgNode& a, const SvgNode& b);

/// Parsed document. The tree is immutable and shared between copies.
class SvgDocument {
public:
    /// Builds the id index over `root`; duplicate ids after the first
    /// produce DUPLICATE_ID warnings.
    static SvgDocument fromRoot(SvgNode root, Diagnostics& diags);

    const SvgNode& root() const noexcept { return *root_; }
    const SvgNode* findById(std::string_view id) const;
    const std::map<std::string, const SvgNode*, std::less<>>& idIndex() const noexcept { return index_; }

    /// Diagnostics reported while the document was built.
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    friend std::optional<SvgDocument> parseSvg(std::string_view, Diagnostics&);
    static SvgDocument build(SvgNode root, Diagnostics& diags, std::size_t firstDiagnostic);

    std::shared_ptr<const SvgNode> root_;
    std::map<std::string, const SvgNode*, std::less<>> index_;
    std::vector<Diagnostic> diagnostics_;
};

/// Parses SVG markup. The document element must be `svg`; otherwise the
/// first `svg` descendant is used (e.g. an XHTML page with inline SVG).
std::optional<SvgDocument> parseSvg(std::string_view text, Diagnostics& diags);

/// "min-x min-y width height", whitespace and/or comma separated.
std::optional<ViewBox> parseViewBox(std::string_view value, Diagnostics& diags, std::string location = {});

std::optional<std::vector<Point>> parsePoints(std::string_view value, Diagnostics& diags, std::string location = {});

/// A number with an optional "px" suffix, in user units.
std::optional<double> parseLength(std::string_view value, Diagnostics& diags, std::string location = {});

} // namespace svg2vml
