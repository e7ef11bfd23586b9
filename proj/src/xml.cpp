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

#include <svg2vml/xml.h>

#include <algorithm>
#include <charconv>
#include <cstdint>

namespace svg2vml::xml {

namespace {

bool isSpace(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

bool isNameStart(char c) noexcept {
    const auto u = static_cast<unsigned char>(c);
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == ':' || u >= 0x80;
}

bool isNameChar(char c) noexcept {
    return isNameStart(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

void appendUtf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    }
    else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

class Reader {
public:
    Reader(std::string_view text, Diagnostics& diags)
        : s_(text)
        , diags_(diags) {
        lineStarts_.push_back(0);
        for (std::size_t i = 0; i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                lineStarts_.push_back(i + 1);
            }
        }
    }

    std::optional<Node> run();

private:
    struct Frame {
        Node node;
        bool malformed = false;
    };

    std::string_view s_;
    Diagnostics& diags_;
    std::size_t pos_ = 0;
    std::vector<std::size_t> lineStarts_;
    std::vector<Frame> stack_;
    std::optional<Node> root_;
    bool extraRootReported_ = false;

    std::pair<int, int> lineColumn(std::size_t offset) const {
        auto it = std::upper_bound(lineStarts_.begin(), lineStarts_.end(), offset);
        const auto line = static_cast<int>(it - lineStarts_.begin());
        const auto col = static_cast<int>(offset - *(it - 1)) + 1;
        return {line, col};
    }

    std::string location(std::size_t offset) const {
        auto [line, col] = lineColumn(offset);
        return std::to_string(line) + ":" + std::to_string(col);
    }

    void fail(std::size_t offset, std::string message) {
        diags_.error(codes::MalformedXml, std::move(message), location(offset));
    }

    bool startsWith(std::string_view prefix) const noexcept {
        return s_.substr(pos_, prefix.size()) == prefix;
    }

    bool skipPast(std::string_view terminator) {
        auto at = s_.find(terminator, pos_);
        if (at == std::string_view::npos) {
            pos_ = s_.size();
            return false;
        }
        pos_ = at + terminator.size();
        return true;
    }

    void skipSpaces() noexcept {
        while (pos_ < s_.size() && isSpace(s_[pos_])) {
            ++pos_;
        }
    }

    std::string readName() {
        const std::size_t start = pos_;
        if (pos_ < s_.size() && isNameStart(s_[pos_])) {
            ++pos_;
            while (pos_ < s_.size() && isNameChar(s_[pos_])) {
                ++pos_;
            }
        }
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string decode(std::string_view raw, std::size_t offset, bool attribute);
    void skipDoctype();
    void readEndTag();
    void readStartTag();
    void readText();
    void addText(std::string text, std::size_t offset);
    void attach(Frame frame);
};

std::string Reader::decode(std::string_view raw, std::size_t offset, bool attribute) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const char c = raw[i];
        if (c == '&') {
            const auto semi = raw.find(';', i);
            if (semi == std::string_view::npos) {
                fail(offset + i, "unterminated entity reference");
                out += c;
                continue;
            }
            const auto name = raw.substr(i + 1, semi - i - 1);
            bool ok = true;
            if (name == "lt") {
                out += '<';
            }
            else if (name == "gt") {
                out += '>';
            }
            else if (name == "amp") {
                out += '&';
            }
            else if (name == "quot") {
                out += '"';
            }
            else if (name == "apos") {
                out += '\'';
            }
            else if (name.size() > 1 && name[0] == '#') {
                std::uint32_t cp = 0;
                const bool hex = name[1] == 'x' || name[1] == 'X';
                const auto digits = name.substr(hex ? 2 : 1);
                auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), cp, hex ? 16 : 10);
                ok = !digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size() && cp > 0 && cp <= 0x10FFFF;
                if (ok) {
                    appendUtf8(out, cp);
                }
            }
            else {
                ok = false;
            }
            if (!ok) {
                fail(offset + i, "unknown entity '&" + std::string(name) + ";'");
                out.append(raw.substr(i, semi - i + 1));
            }
            i = semi;
        }
        else if (attribute && (c == '\t' || c == '\n' || c == '\r')) {
            out += ' ';
        }
        else {
            out += c;
        }
    }
    return out;
}

void Reader::skipDoctype() {
    int depth = 0;
    while (pos_ < s_.size()) {
        const char c = s_[pos_++];
        if (c == '[') {
            ++depth;
        }
        else if (c == ']') {
            --depth;
        }
        else if (c == '>' && depth <= 0) {
            return;
        }
    }
    fail(pos_, "unterminated document type declaration");
}

void Reader::attach(Frame frame) {
    if (frame.malformed) {
        return;
    }
    if (!stack_.empty()) {
        if (!stack_.back().malformed) {
            stack_.back().node.children.push_back(std::move(frame.node));
        }
        return;
    }
    if (!root_) {
        root_ = std::move(frame.node);
    }
    else if (!extraRootReported_) {
        extraRootReported_ = true;
        auto [line, col] = std::pair{frame.node.line, frame.node.column};
        diags_.error(codes::MalformedXml, "more than one document element",
                     std::to_string(line) + ":" + std::to_string(col));
    }
}

void Reader::readEndTag() {
    const std::size_t start = pos_;
    pos_ += 2;
    const std::string name = readName();
    skipSpaces();
    if (pos_ >= s_.size() || s_[pos_] != '>') {
        fail(start, "malformed end tag");
        skipPast(">");
    }
    else {
        ++pos_;
    }
    auto match = std::find_if(stack_.rbegin(), stack_.rend(), [&](const Frame& f) {
        return f.node.name == name;
    });
    if (match == stack_.rend()) {
        fail(start, "unexpected end tag </" + name + ">");
        return;
    }
    if (match != stack_.rbegin()) {
        fail(start, "end tag </" + name + "> does not match <" + stack_.back().node.name + ">");
        // The unclosed descendants are the malformed subtree; the matching
        // element keeps its earlier children.
        const auto keep = static_cast<std::size_t>(stack_.rend() - match);
        stack_.resize(keep);
    }
    Frame frame = std::move(stack_.back());
    stack_.pop_back();
    attach(std::move(frame));
}

void Reader::readStartTag() {
    const std::size_t start = pos_;
    ++pos_;
    Frame frame;
    auto [line, col] = lineColumn(start);
    frame.node.line = line;
    frame.node.column = col;
    frame.node.name = readName();
    bool selfClosing = false;
    bool bad = frame.node.name.empty();
    while (!bad) {
        const std::size_t before = pos_;
        skipSpaces();
        if (pos_ >= s_.size()) {
            bad = true;
            break;
        }
        if (s_[pos_] == '>') {
            ++pos_;
            break;
        }
        if (s_.substr(pos_, 2) == "/>") {
            pos_ += 2;
            selfClosing = true;
            break;
        }
        if (pos_ == before) {
            bad = true; // attributes must be separated by whitespace
            break;
        }
        const std::size_t attrStart = pos_;
        std::string name = readName();
        skipSpaces();
        if (name.empty() || pos_ >= s_.size() || s_[pos_] != '=') {
            bad = true;
            break;
        }
        ++pos_;
        skipSpaces();
        if (pos_ >= s_.size() || (s_[pos_] != '"' && s_[pos_] != '\'')) {
            bad = true;
            break;
        }
        const char quote = s_[pos_++];
        const auto close = s_.find(quote, pos_);
        if (close == std::string_view::npos) {
            bad = true;
            break;
        }
        const auto raw = s_.substr(pos_, close - pos_);
        if (raw.find('<') != std::string_view::npos) {
            bad = true;
            break;
        }
        std::string value = decode(raw, pos_, true);
        pos_ = close + 1;
        auto& attrs = frame.node.attributes;
        if (std::any_of(attrs.begin(), attrs.end(), [&](const Attribute& a) { return a.name == name; })) {
            fail(attrStart, "duplicate attribute '" + name + "'");
            continue;
        }
        attrs.push_back({std::move(name), std::move(value)});
    }
    if (bad) {
        fail(start, "malformed start tag" + (frame.node.name.empty() ? std::string() : " <" + frame.node.name + ">"));
        const auto gt = s_.find('>', pos_);
        pos_ = gt == std::string_view::npos ? s_.size() : gt + 1;
        selfClosing = gt == std::string_view::npos || (gt > 0 && s_[gt - 1] == '/');
        frame.malformed = true;
        if (frame.node.name.empty()) {
            return;
        }
    }
    if (selfClosing) {
        attach(std::move(frame));
    }
    else {
        stack_.push_back(std::move(frame));
    }
}

void Reader::addText(std::string text, std::size_t offset) {
    if (stack_.empty()) {
        const bool blank = std::all_of(text.begin(), text.end(), isSpace);
        if (!blank) {
            fail(offset, "character data outside the document element");
        }
        return;
    }
    auto& children = stack_.back().node.children;
    if (!children.empty() && children.back().isText()) {
        children.back().text += text;
        return;
    }
    Node node;
    node.kind = Node::Kind::Text;
    node.text = std::move(text);
    auto [line, col] = lineColumn(offset);
    node.line = line;
    node.column = col;
    children.push_back(std::move(node));
}

void Reader::readText() {
    const std::size_t start = pos_;
    const auto lt = s_.find('<', pos_);
    const std::size_t end = lt == std::string_view::npos ? s_.size() : lt;
    pos_ = end;
    addText(decode(s_.substr(start, end - start), start, false), start);
}

std::optional<Node> Reader::run() {
    while (pos_ < s_.size()) {
        if (s_[pos_] != '<') {
            readText();
            continue;
        }
        const std::size_t start = pos_;
        if (startsWith("<?")) {
            if (!skipPast("?>")) {
                fail(start, "unterminated processing instruction");
            }
        }
        else if (startsWith("<!--")) {
            if (!skipPast("-->")) {
                fail(start, "unterminated comment");
            }
        }
        else if (startsWith("<![CDATA[")) {
            pos_ += 9;
            const auto close = s_.find("]]>", pos_);
            if (close == std::string_view::npos) {
                fail(start, "unterminated CDATA section");
                pos_ = s_.size();
                continue;
            }
            std::string text(s_.substr(pos_, close - pos_));
            pos_ = close + 3;
            if (stack_.empty()) {
                fail(start, "CDATA section outside the document element");
            }
            else {
                addText(std::move(text), start);
            }
        }
        else if (startsWith("<!DOCTYPE") || startsWith("<!doctype")) {
            skipDoctype();
        }
        else if (startsWith("</")) {
            readEndTag();
        }
        else {
            readStartTag();
        }
    }
    if (!stack_.empty()) {
        fail(s_.size(), "unclosed element <" + stack_.back().node.name + ">");
        while (!stack_.empty()) {
            Frame frame = std::move(stack_.back());
            stack_.pop_back();
            attach(std::move(frame));
        }
    }
    if (!root_) {
        fail(s_.size(), "no document element");
    }
    return std::move(root_);
}

} // namespace

const std::string* Node::attribute(std::string_view attrName) const noexcept {
    for (const auto& a : attributes) {
        if (a.name == attrName) {
            return &a.value;
        }
    }
    return nullptr;
}

std::optional<Node> parse(std::string_view text, Diagnostics& diags) {
    Reader reader(text, diags);
    return reader.run();
}

std::string_view localName(std::string_view qualifiedName) noexcept {
    const auto colon = qualifiedName.find(':');
    return colon == std::string_view::npos ? qualifiedName : qualifiedName.substr(colon + 1);
}

std::string_view prefix(std::string_view qualifiedName) noexcept {
    const auto colon = qualifiedName.find(':');
    return colon == std::string_view::npos ? std::string_view() : qualifiedName.substr(0, colon);
}

std::string escapeText(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string escapeAttribute(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\n': out += "&#10;"; break;
        case '\t': out += "&#9;"; break;
        case '\r': out += "&#13;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace svg2vml::xml
