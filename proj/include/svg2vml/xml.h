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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

/// Minimal non-validating XML reader.
///
/// Comments, processing instructions and the document type declaration are
/// skipped. Only the five predefined entities and numeric character
/// references are expanded. Malformed input produces MALFORMED_XML errors;
/// the offending subtree is dropped and reading continues.
namespace svg2vml::xml {

struct Attribute {
    std::string name;
    std::string value;

    friend bool operator==(const Attribute&, const Attribute&) = default;
};

struct Node {
    enum class Kind { Element, Text };

    Kind kind = Kind::Element;
    std::string name; // qualified name as written, elements only
    std::vector<Attribute> attributes;
    std::vector<Node> children;
    std::string text; // character data, text nodes only
    int line = 0;
    int column = 0;

    bool isElement() const noexcept { return kind == Kind::Element; }
    bool isText() const noexcept { return kind == Kind::Text; }
    const std::string* attribute(std::string_view name) const noexcept;
};

/// Returns the document element, or nullopt when none could be read.
std::optional<Node> parse(std::string_view text, Diagnostics& diags);

std::string_view localName(std::string_view qualifiedName) noexcept;
std::string_view prefix(std::string_view qualifiedName) noexcept;

std::string escapeText(std::string_view s);
std::string escapeAttribute(std::string_view s);

} // namespace svg2vml::xml
