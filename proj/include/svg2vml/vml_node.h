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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace svg2vml {

/// Output tree node. A node with an empty tag is a text node carrying
/// `text`; element nodes never carry text directly.
struct VmlNode {
    std::string tag; // qualified, e.g. "v:group", "html:div"
    AttributeTable attributes;
    AttributeTable style; // serialized into the style attribute, in order
    std::vector<VmlNode> children;
    std::optional<std::string> text;

    VmlNode() = default;
    explicit VmlNode(std::string tagName)
        : tag(std::move(tagName)) {}

    static VmlNode textNode(std::string payload) {
        VmlNode n;
        n.text = std::move(payload);
        return n;
    }

    bool isText() const noexcept { return tag.empty(); }

    VmlNode& append(VmlNode child) {
        children.push_back(std::move(child));
        return children.back();
    }

    /// First direct child with `childTag`, or nullptr.
    const VmlNode* child(std::string_view childTag) const noexcept {
        for (const auto& c : children) {
            if (c.tag == childTag) {
                return &c;
            }
        }
        return nullptr;
    }

    friend bool operator==(const VmlNode&, const VmlNode&) = default;
};

} // namespace svg2vml
