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


#include <svg2vml/emitter.h>

#include <svg2vml/xml.h>

#include <algorithm>

namespace svg2vml {

namespace {

constexpr std::string_view kVmlNamespace = "urn:schemas-microsoft-com:vml";
constexpr std::string_view kXhtmlNamespace = "http://www.w3.org/1999/xhtml";
constexpr std::string_view kSvgNamespace = "http://www.w3.org/2000/svg";
constexpr std::string_view kXlinkNamespace = "http://www.w3.org/1999/xlink";
constexpr std::string_view kContentType =
    R"(<meta http-equiv="Content-Type" content="text/html; charset=utf-8"/>)";

// Whitespace inside these elements is content, so pretty printing must not
// add any.
bool keepsContentInline(const VmlNode& node) {
    static constexpr std::string_view kTextElements[] = {"svg:text", "svg:textPath", "svg:foreignObject",
                                                         "v:textbox"};
    if (std::find(std::begin(kTextElements), std::end(kTextElements), node.tag) != std::end(kTextElements)) {
        return true;
    }
    return std::any_of(node.children.begin(), node.children.end(), [](const VmlNode& c) { return c.isText(); });
}

void writeNode(std::string& out, const VmlNode& node, bool pretty, int depth) {
    if (node.isText()) {
        out += xml::escapeText(node.text.value_or(std::string()));
        return;
    }
    if (pretty) {
        out.append(static_cast<std::size_t>(depth) * 2, ' ');
    }
    out += '<';
    out += node.tag;
    for (const auto& [name, value] : node.attributes) {
        out += ' ';
        out += name;
        out += "=\"";
        out += xml::escapeAttribute(value);
        out += '"';
    }
    if (!node.style.empty()) {
        out += " style=\"";
        out += xml::escapeAttribute(serializeStyle(node.style));
        out += '"';
    }
    if (node.children.empty()) {
        out += "/>";
    }
    else if (!pretty || keepsContentInline(node)) {
        out += '>';
        for (const auto& c : node.children) {
            writeNode(out, c, false, 0);
        }
        out += "</";
        out += node.tag;
        out += '>';
    }
    else {
        out += ">\n";
        for (const auto& c : node.children) {
            writeNode(out, c, true, depth + 1);
        }
        out.append(static_cast<std::size_t>(depth) * 2, ' ');
        out += "</";
        out += node.tag;
        out += '>';
    }
    if (pretty) {
        out += '\n';
    }
}

// Page skeleton lines; `indent` is applied only in pretty mode.
class PageWriter {
public:
    explicit PageWriter(bool pretty)
        : pretty_(pretty) {}

    void line(int depth, std::string_view text) {
        if (pretty_) {
            out_.append(static_cast<std::size_t>(depth) * 2, ' ');
        }
        out_ += text;
        out_ += '\n';
    }

    void tree(const VmlNode& node, int depth) {
        if (pretty_) {
            writeNode(out_, node, true, depth);
        }
        else {
            writeNode(out_, node, false, 0);
            out_ += '\n';
        }
    }

    void title(const std::optional<std::string>& title) {
        if (title) {
            line(2, "<title>" + xml::escapeText(*title) + "</title>");
        }
    }

    std::string take() { return std::move(out_); }

private:
    bool pretty_;
    std::string out_;
};

} // namespace

std::string serializeStyle(const AttributeTable& style) {
    std::string out;
    for (const auto& [name, value] : style) {
        out += name;
        out += ':';
        out += value;
        out += ';';
    }
    return out;
}

std::string serializeNode(const VmlNode& node, bool pretty, int depth) {
    std::string out;
    writeNode(out, node, pretty, depth);
    return out;
}

std::string emitVmlHtml(const VmlNode& tree, const EmitOptions& options) {
    PageWriter page(options.pretty);
    page.line(0, "<html xmlns:v=\"" + std::string(kVmlNamespace) + "\" xmlns:html=\"" +
                     std::string(kXhtmlNamespace) + "\">");
    page.line(1, "<head>");
    page.line(2, kContentType);
    page.title(options.title);
    page.line(2, R"(<style type="text/css">v\:* { behavior: url(#default#VML); }</style>)");
    page.line(1, "</head>");
    page.line(1, "<body>");
    page.tree(tree, 2);
    page.line(1, "</body>");
    page.line(0, "</html>");
    return page.take();
}

VmlNode passthroughTree(const SvgNode& node) {
    if (node.isCharData()) {
        return VmlNode::textNode(node.text.value_or(std::string()));
    }
    VmlNode out(node.kind == ElementKind::Foreign ? node.name : "svg:" + node.name);
    out.attributes = node.attributes;
    for (const auto& c : node.children) {
        out.append(passthroughTree(c));
    }
    return out;
}

std::string emitXhtmlPassthrough(const SvgDocument& doc, const EmitOptions& options) {
    PageWriter page(options.pretty);
    page.line(0, R"(<?xml version="1.0" encoding="UTF-8"?>)");
    page.line(0, "<html xmlns=\"" + std::string(kXhtmlNamespace) + "\" xmlns:svg=\"" + std::string(kSvgNamespace) +
                     "\" xmlns:xlink=\"" + std::string(kXlinkNamespace) + "\">");
    page.line(1, "<head>");
    page.line(2, kContentType);
    page.title(options.title);
    page.line(1, "</head>");
    page.line(1, "<body>");
    page.tree(passthroughTree(doc.root()), 2);
    page.line(1, "</body>");
    page.line(0, "</html>");
    return page.take();
}

} // namespace svg2vml
