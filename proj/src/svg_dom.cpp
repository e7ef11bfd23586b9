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

#include <svg2vml/svg_dom.h>

#include <svg2vml/number.h>
#include <svg2vml/xml.h>

#include <algorithm>
#include <array>
#include <utility>

namespace svg2vml {

namespace {

constexpr std::array<std::pair<std::string_view, ElementKind>, 17> kElementNames = {{
    {"svg", ElementKind::Svg},
    {"g", ElementKind::G},
    {"defs", ElementKind::Defs},
    {"use", ElementKind::Use},
    {"rect", ElementKind::Rect},
    {"circle", ElementKind::Circle},
    {"ellipse", ElementKind::Ellipse},
    {"line", ElementKind::Line},
    {"polyline", ElementKind::Polyline},
    {"polygon", ElementKind::Polygon},
    {"path", ElementKind::Path},
    {"text", ElementKind::Text},
    {"textPath", ElementKind::TextPath},
    {"linearGradient", ElementKind::LinearGradient},
    {"stop", ElementKind::Stop},
    {"a", ElementKind::A},
    {"foreignObject", ElementKind::ForeignObject},
}};

bool isBlank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), isXmlSpace);
}

bool keepsWhitespace(ElementKind kind) {
    return kind == ElementKind::Text || kind == ElementKind::TextPath || kind == ElementKind::ForeignObject;
}

class TreeBuilder {
public:
    explicit TreeBuilder(Diagnostics& diags)
        : diags_(diags) {}

    SvgNode build(const xml::Node& element) { return convert(element, false, false); }

private:
    Diagnostics& diags_;

    static SourceLocation locationOf(const xml::Node& n) { return {n.line, n.column}; }

    SvgNode charData(const xml::Node& n) {
        SvgNode out;
        out.kind = ElementKind::CharData;
        out.text = n.text;
        out.location = locationOf(n);
        return out;
    }

    SvgNode convertForeign(const xml::Node& n) {
        if (n.isText()) {
            return charData(n);
        }
        SvgNode out;
        out.kind = ElementKind::Foreign;
        out.name = n.name;
        out.location = locationOf(n);
        for (const auto& a : n.attributes) {
            out.attributes.insert(a.name, a.value);
        }
        for (const auto& c : n.children) {
            out.children.push_back(convertForeign(c));
        }
        return out;
    }

    SvgNode convert(const xml::Node& n, bool insideUnknown, bool textContext) {
        SvgNode out;
        out.location = locationOf(n);
        out.name = std::string(xml::localName(n.name));
        out.kind = elementKindFromName(out.name);
        if (out.kind == ElementKind::Unknown && !insideUnknown) {
            diags_.warning(codes::UnknownElement, "unsupported element <" + n.name + "> is skipped",
                           out.location.str());
        }
        for (const auto& a : n.attributes) {
            if (a.name == "xmlns" || xml::prefix(a.name) == "xmlns") {
                continue;
            }
            const bool isXlinkHref = a.name == kHrefAttribute;
            const std::string_view name = isXlinkHref ? std::string_view(kHrefAttribute) : xml::localName(a.name);
            out.attributes.insert(name, a.value);
        }
        const bool childInsideUnknown = insideUnknown || out.kind == ElementKind::Unknown;
        const bool childTextContext = textContext || keepsWhitespace(out.kind);
        for (const auto& c : n.children) {
            if (c.isText()) {
                if (childTextContext || !isBlank(c.text)) {
                    out.children.push_back(charData(c));
                }
            }
            else if (out.kind == ElementKind::ForeignObject) {
                out.children.push_back(convertForeign(c));
            }
            else {
                out.children.push_back(convert(c, childInsideUnknown, childTextContext));
            }
        }
        return out;
    }
};

const xml::Node* findSvgElement(const xml::Node& n) {
    if (n.isElement() && xml::localName(n.name) == "svg") {
        return &n;
    }
    for (const auto& c : n.children) {
        if (const auto* found = findSvgElement(c)) {
            return found;
        }
    }
    return nullptr;
}

void indexIds(const SvgNode& node, std::map<std::string, const SvgNode*, std::less<>>& index, Diagnostics& diags) {
    if (node.kind != ElementKind::CharData && node.kind != ElementKind::Foreign) {
        if (const auto* id = node.attribute("id")) {
            if (!index.emplace(*id, &node).second) {
                diags.warning(codes::DuplicateId, "duplicate id '" + *id + "'; the first occurrence is used",
                              node.location.str());
            }
        }
    }
    for (const auto& c : node.children) {
        indexIds(c, index, diags);
    }
}

} // namespace

ElementKind elementKindFromName(std::string_view localName) noexcept {
    for (const auto& [name, kind] : kElementNames) {
        if (name == localName) {
            return kind;
        }
    }
    return ElementKind::Unknown;
}

std::string_view elementName(ElementKind kind) noexcept {
    for (const auto& [name, k] : kElementNames) {
        if (k == kind) {
            return name;
        }
    }
    return {};
}

std::string SourceLocation::str() const {
    if (line <= 0) {
        return {};
    }
    return std::to_string(line) + ":" + std::to_string(column);
}

std::string SvgNode::directText() const {
    std::string out;
    for (const auto& c : children) {
        if (c.isCharData() && c.text) {
            out += *c.text;
        }
    }
    return out;
}

std::optional<std::string> SvgNode::hrefId() const {
    const std::string* href = attribute(kHrefAttribute);
    if (!href) {
        href = attribute("href");
    }
    if (!href) {
        return std::nullopt;
    }
    std::string_view ref = trim(*href);
    if (ref.empty() || ref.front() != '#') {
        return std::nullopt;
    }
    return std::string(ref.substr(1));
}

bool structurallyEqual(const SvgNode& a, const SvgNode& b) {
    if (a.kind != b.kind || a.name != b.name || !(a.attributes == b.attributes) || a.text != b.text ||
        a.children.size() != b.children.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!structurallyEqual(a.children[i], b.children[i])) {
            return false;
        }
    }
    return true;
}

SvgDocument SvgDocument::fromRoot(SvgNode root, Diagnostics& diags) {
    return build(std::move(root), diags, diags.size());
}

SvgDocument SvgDocument::build(SvgNode root, Diagnostics& diags, std::size_t firstDiagnostic) {
    SvgDocument doc;
    auto shared = std::make_shared<const SvgNode>(std::move(root));
    indexIds(*shared, doc.index_, diags);
    doc.root_ = std::move(shared);
    doc.diagnostics_.assign(diags.items().begin() + static_cast<std::ptrdiff_t>(firstDiagnostic),
                            diags.items().end());
    return doc;
}

const SvgNode* SvgDocument::findById(std::string_view id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : it->second;
}

std::optional<SvgDocument> parseSvg(std::string_view text, Diagnostics& diags) {
    const std::size_t before = diags.size();
    auto element = xml::parse(text, diags);
    if (!element) {
        return std::nullopt;
    }
    const xml::Node* svg = findSvgElement(*element);
    if (!svg) {
        diags.error(codes::NoSvgRoot, "no <svg> element found", "1:1");
        return std::nullopt;
    }
    TreeBuilder builder(diags);
    return SvgDocument::build(builder.build(*svg), diags, before);
}

std::optional<ViewBox> parseViewBox(std::string_view value, Diagnostics& diags, std::string location) {
    auto numbers = parseNumberList(value);
    if (!numbers || numbers->size() != 4) {
        diags.error(codes::InvalidViewBox, "viewBox must be four numbers, got '" + std::string(value) + "'",
                    std::move(location));
        return std::nullopt;
    }
    ViewBox box{(*numbers)[0], (*numbers)[1], (*numbers)[2], (*numbers)[3]};
    if (box.width <= 0 || box.height <= 0) {
        diags.error(codes::InvalidViewBox, "viewBox width and height must be positive", std::move(location));
        return std::nullopt;
    }
    return box;
}

std::optional<std::vector<Point>> parsePoints(std::string_view value, Diagnostics& diags, std::string location) {
    auto numbers = parseNumberList(value);
    if (!numbers) {
        diags.error(codes::InvalidPoints, "malformed points list '" + std::string(value) + "'", std::move(location));
        return std::nullopt;
    }
    if (numbers->size() % 2 != 0) {
        diags.error(codes::InvalidPoints, "points list has an odd number of coordinates", std::move(location));
        return std::nullopt;
    }
    std::vector<Point> points;
    points.reserve(numbers->size() / 2);
    for (std::size_t i = 0; i < numbers->size(); i += 2) {
        points.push_back({(*numbers)[i], (*numbers)[i + 1]});
    }
    return points;
}

std::optional<double> parseLength(std::string_view value, Diagnostics& diags, std::string location) {
    const std::string_view v = trim(value);
    std::size_t pos = 0;
    auto number = scanNumber(v, pos);
    if (!number) {
        diags.error(codes::InvalidNumber, "invalid length '" + std::string(value) + "'", std::move(location));
        return std::nullopt;
    }
    const std::string_view unit = trim(v.substr(pos));
    if (unit.empty() || unit == "px") {
        return number;
    }
    const bool looksLikeUnit = unit == "%" || std::all_of(unit.begin(), unit.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    });
    if (looksLikeUnit) {
        diags.error(codes::UnsupportedUnit, "unsupported unit '" + std::string(unit) + "' in '" + std::string(value) + "'",
                    std::move(location));
    }
    else {
        diags.error(codes::InvalidNumber, "invalid length '" + std::string(value) + "'", std::move(location));
    }
    return std::nullopt;
}

} // namespace svg2vml
