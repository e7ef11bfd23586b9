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


#include <svg2vml/style.h>

#include <algorithm>
#include <array>

namespace svg2vml {

namespace {

constexpr std::array<std::string_view, 6> kStrokeAttributes = {
    "stroke", "stroke-width", "stroke-linecap", "stroke-linejoin", "stroke-miterlimit", "stroke-opacity",
};

std::optional<double> parseFraction(std::string_view raw) {
    std::string_view v = trim(raw);
    bool percent = false;
    if (!v.empty() && v.back() == '%') {
        percent = true;
        v.remove_suffix(1);
    }
    auto number = parseNumber(v);
    if (!number) {
        return std::nullopt;
    }
    return percent ? *number / 100.0 : *number;
}

struct UrlReference {
    std::string id;
    std::optional<std::string> fallback;
};

// "url(#id)" with an optional fallback color after the closing paren.
std::optional<UrlReference> parseUrlReference(std::string_view value) {
    std::string_view v = trim(value);
    if (v.substr(0, 4) != "url(") {
        return std::nullopt;
    }
    const std::size_t close = v.find(')');
    if (close == std::string_view::npos) {
        return std::nullopt;
    }
    std::string_view inner = trim(v.substr(4, close - 4));
    if (inner.size() >= 2 && (inner.front() == '\'' || inner.front() == '"') && inner.back() == inner.front()) {
        inner = trim(inner.substr(1, inner.size() - 2));
    }
    if (inner.empty() || inner.front() != '#') {
        return std::nullopt;
    }
    UrlReference ref{std::string(inner.substr(1)), std::nullopt};
    const std::string_view rest = trim(v.substr(close + 1));
    if (!rest.empty()) {
        ref.fallback = std::string(rest);
    }
    return ref;
}

std::optional<double> strokeNumber(const AttributeTable& attrs, std::string_view name, Diagnostics& diags,
                                   const std::string& location) {
    const std::string* raw = attrs.find(name);
    if (!raw) {
        return std::nullopt;
    }
    if (name == "stroke-width") {
        return parseLength(*raw, diags, location);
    }
    auto v = parseNumber(*raw);
    if (!v) {
        diags.error(codes::InvalidNumber, std::string(name) + " must be a number, got '" + *raw + "'", location);
    }
    return v;
}

std::string mapToken(std::string_view attribute, std::string_view value,
                     std::initializer_list<std::pair<std::string_view, std::string_view>> table,
                     Diagnostics& diags, const std::string& location) {
    const std::string_view v = trim(value);
    for (const auto& [from, to] : table) {
        if (v == from) {
            return std::string(to);
        }
    }
    diags.warning(codes::UnknownToken,
                  "unknown " + std::string(attribute) + " value '" + std::string(v) + "' passed through", location);
    return std::string(v);
}

} // namespace

bool isStrokeAttribute(std::string_view name) noexcept {
    return std::find(kStrokeAttributes.begin(), kStrokeAttributes.end(), name) != kStrokeAttributes.end();
}

std::optional<StrokeSpec> resolveStroke(const AttributeTable& attrs, Diagnostics& diags,
                                        const std::string& location) {
    const bool any = std::any_of(kStrokeAttributes.begin(), kStrokeAttributes.end(),
                                 [&](std::string_view a) { return attrs.contains(a); });
    if (!any) {
        return std::nullopt;
    }
    const std::string* color = attrs.find("stroke");
    if (color && trim(*color) == "none") {
        return std::nullopt;
    }
    StrokeSpec spec;
    if (color) {
        spec.color = std::string(trim(*color));
    }
    spec.weight = strokeNumber(attrs, "stroke-width", diags, location);
    if (spec.weight && *spec.weight < 0) {
        diags.error(codes::InvalidNumber, "stroke-width must not be negative", location);
        spec.weight.reset();
    }
    if (const std::string* cap = attrs.find("stroke-linecap")) {
        spec.endcap = mapToken("stroke-linecap", *cap, {{"butt", "flat"}, {"round", "round"}, {"square", "square"}},
                               diags, location);
    }
    if (const std::string* join = attrs.find("stroke-linejoin")) {
        spec.joinstyle = mapToken("stroke-linejoin", *join,
                                  {{"miter", "miter"}, {"round", "round"}, {"bevel", "bevel"}}, diags, location);
    }
    spec.miterlimit = strokeNumber(attrs, "stroke-miterlimit", diags, location);
    if (auto opacity = strokeNumber(attrs, "stroke-opacity", diags, location)) {
        spec.opacity = mapOpacity(*opacity, diags, location) / 100.0;
    }
    return spec;
}

VmlNode strokeElement(const StrokeSpec& spec, int precision) {
    VmlNode stroke("v:stroke");
    if (spec.color) {
        stroke.attributes.set("color", *spec.color);
    }
    if (spec.weight) {
        stroke.attributes.set("weight", formatNumber(*spec.weight, precision));
    }
    if (spec.endcap) {
        stroke.attributes.set("endcap", *spec.endcap);
    }
    if (spec.joinstyle) {
        stroke.attributes.set("joinstyle", *spec.joinstyle);
    }
    if (spec.miterlimit) {
        stroke.attributes.set("miterlimit", formatNumber(*spec.miterlimit, precision));
    }
    if (spec.opacity) {
        stroke.attributes.set("opacity", formatNumber(*spec.opacity, precision));
    }
    return stroke;
}

PaintResult mapStroke(const AttributeTable& attrs, Diagnostics& diags, const std::string& location, int precision) {
    PaintResult result;
    const std::string* color = attrs.find("stroke");
    if (color && trim(*color) == "none") {
        result.hostAttributes.set("stroked", "f");
        return result;
    }
    if (auto spec = resolveStroke(attrs, diags, location)) {
        result.child = strokeElement(*spec, precision);
    }
    return result;
}

PaintResult mapFill(const AttributeTable& attrs, const SvgDocument& doc, Diagnostics& diags,
                    const std::string& location) {
    PaintResult result;
    if (attrs.contains("fill-opacity")) {
        diags.warning(codes::UnsupportedAttribute, "fill-opacity is not mapped", location);
    }
    const std::string* raw = attrs.find("fill");
    if (!raw) {
        return result;
    }
    const std::string_view value = trim(*raw);
    if (value == "none") {
        result.hostAttributes.set("filled", "f");
        return result;
    }
    VmlNode fill("v:fill");
    if (value.substr(0, 4) != "url(") {
        fill.attributes.set("color", std::string(value));
        result.child = std::move(fill);
        return result;
    }
    auto ref = parseUrlReference(value);
    if (!ref) {
        diags.error(codes::DanglingRef, "malformed paint reference '" + std::string(value) + "'", location);
        return result;
    }
    const SvgNode* target = doc.findById(ref->id);
    if (!target) {
        diags.error(codes::DanglingRef, "fill refers to missing id '" + ref->id + "'", location);
        if (ref->fallback && *ref->fallback != "none") {
            fill.attributes.set("color", *ref->fallback);
            result.child = std::move(fill);
        }
        return result;
    }
    if (target->kind != ElementKind::LinearGradient) {
        diags.error(codes::UnsupportedGradient,
                    "fill refers to <" + target->name + "> '" + ref->id + "', only linearGradient is supported",
                    location);
        return result;
    }
    auto gradient = resolveGradient(*target, diags);
    if (!gradient) {
        return result;
    }
    fill.attributes.set("type", "gradient");
    fill.attributes.set("color", gradient->colorStart);
    fill.attributes.set("color2", gradient->colorEnd);
    fill.attributes.set("angle", gradient->direction == GradientDirection::Horizontal ? "90" : "0");
    result.child = std::move(fill);
    return result;
}

std::optional<GradientSpec> resolveGradient(const SvgNode& gradient, Diagnostics& diags) {
    const std::string location = gradient.location.str();
    auto unsupported = [&](const std::string& why) -> std::optional<GradientSpec> {
        diags.error(codes::UnsupportedGradient, why, location);
        return std::nullopt;
    };
    auto coordinate = [&](std::string_view name, double fallback) -> std::optional<double> {
        const std::string* raw = gradient.attribute(name);
        if (!raw) {
            return fallback;
        }
        auto v = parseFraction(*raw);
        if (!v) {
            diags.error(codes::InvalidNumber, "invalid gradient coordinate " + std::string(name) + "='" + *raw + "'",
                        location);
        }
        return v;
    };
    const auto x1 = coordinate("x1", 0.0);
    const auto y1 = coordinate("y1", 0.0);
    const auto x2 = coordinate("x2", 1.0);
    const auto y2 = coordinate("y2", 0.0);
    if (!x1 || !y1 || !x2 || !y2) {
        return std::nullopt;
    }

    std::vector<const SvgNode*> stops;
    for (const auto& c : gradient.children) {
        if (c.kind == ElementKind::Stop) {
            stops.push_back(&c);
        }
    }
    if (stops.size() != 2) {
        return unsupported("linearGradient needs exactly two stops, found " + std::to_string(stops.size()));
    }
    std::optional<std::string> atStart;
    std::optional<std::string> atEnd;
    for (const SvgNode* stop : stops) {
        const std::string* rawOffset = stop->attribute("offset");
        const auto offset = rawOffset ? parseFraction(*rawOffset) : std::optional<double>(0.0);
        const std::string* color = stop->attribute("stop-color");
        const std::string colorValue = color ? std::string(trim(*color)) : std::string("black");
        if (offset && *offset == 0.0 && !atStart) {
            atStart = colorValue;
        }
        else if (offset && *offset == 1.0 && !atEnd) {
            atEnd = colorValue;
        }
        else {
            return unsupported("gradient stops must sit at offsets 0% and 100%");
        }
    }

    GradientSpec spec;
    bool reversed = false;
    if (*y1 == *y2) {
        spec.direction = GradientDirection::Horizontal;
        reversed = *x2 < *x1;
    }
    else if (*x1 == *x2) {
        spec.direction = GradientDirection::Vertical;
        reversed = *y2 < *y1;
    }
    else {
        return unsupported("diagonal gradients are not supported");
    }
    spec.colorStart = reversed ? *atEnd : *atStart;
    spec.colorEnd = reversed ? *atStart : *atEnd;
    return spec;
}

double mapOpacity(double value, Diagnostics& diags, const std::string& location) {
    if (value < 0.0 || value > 1.0) {
        diags.warning(codes::OpacityRange, "opacity " + formatNumber(value) + " clamped to [0, 1]", location);
        value = std::clamp(value, 0.0, 1.0);
    }
    return value * 100.0;
}

} // namespace svg2vml
