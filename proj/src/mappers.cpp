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


#include <svg2vml/mappers.h>

#include <svg2vml/style.h>

#include <algorithm>
#include <array>

namespace svg2vml {

namespace {

constexpr std::array<std::string_view, 13> kInheritable = {
    "fill",          "fill-opacity",   "stroke",      "stroke-width", "stroke-linecap",
    "stroke-linejoin", "stroke-miterlimit", "stroke-opacity", "opacity", "font-size",
    "font-family",   "font-weight",    "font-style",
};

constexpr double kDefaultFontSize = 16.0;

std::optional<double> readLength(const SvgNode& node, std::string_view name, const MapperContext& ctx) {
    const std::string* raw = node.attribute(name);
    if (!raw) {
        return std::nullopt;
    }
    return parseLength(*raw, ctx.diags, node.location.str());
}

double lengthOr(const SvgNode& node, std::string_view name, const MapperContext& ctx, double fallback) {
    auto v = readLength(node, name, ctx);
    return v ? *v : fallback;
}

std::string collapseWhitespace(std::string_view s) {
    std::string out;
    bool pendingSpace = false;
    for (char c : s) {
        if (isXmlSpace(c)) {
            pendingSpace = !out.empty();
            continue;
        }
        if (pendingSpace) {
            out += ' ';
            pendingSpace = false;
        }
        out += c;
    }
    return out;
}

void appendText(const SvgNode& node, std::string& out) {
    for (const auto& c : node.children) {
        if (c.isCharData() && c.text) {
            out += *c.text;
        }
        else {
            appendText(c, out);
        }
    }
}

void mapCore(const SvgNode& node, const MapperContext& ctx, VmlNode& out) {
    if (ctx.dropIds) {
        return;
    }
    if (const std::string* id = node.attribute("id")) {
        out.attributes.set("id", *id);
    }
}

void mapStylable(const AttributeTable& effective, const SvgNode& node, const MapperContext& ctx, VmlNode& out) {
    const std::string location = node.location.str();
    PaintResult fill = mapFill(effective, ctx.document, ctx.diags, location);
    PaintResult stroke = mapStroke(effective, ctx.diags, location, ctx.options.precision);
    for (const auto& [name, value] : fill.hostAttributes) {
        out.attributes.set(name, value);
    }
    for (const auto& [name, value] : stroke.hostAttributes) {
        out.attributes.set(name, value);
    }
    if (fill.child) {
        out.append(std::move(*fill.child));
    }
    if (stroke.child) {
        out.append(std::move(*stroke.child));
    }
}

// VML shapes have no opacity of their own; only text boxes take the
// alpha filter.
void warnShapeOpacity(const AttributeTable& effective, const SvgNode& node, const MapperContext& ctx) {
    const std::string* opacity = effective.find("opacity");
    if (opacity && parseNumber(*opacity) != std::optional<double>(1.0)) {
        ctx.diags.warning(codes::UnsupportedAttribute, "opacity is not mapped on <" + node.name + ">",
                          node.location.str());
    }
}

std::optional<std::string> alphaFilter(const AttributeTable& effective, const SvgNode& node,
                                       const MapperContext& ctx) {
    const std::string* raw = effective.find("opacity");
    if (!raw) {
        return std::nullopt;
    }
    auto value = parseNumber(*raw);
    if (!value) {
        ctx.diags.error(codes::InvalidNumber, "opacity must be a number, got '" + *raw + "'", node.location.str());
        return std::nullopt;
    }
    return "alpha(opacity=" + ctx.format(mapOpacity(*value, ctx.diags, node.location.str())) + ")";
}

std::string joinFilters(const std::optional<std::string>& a, const std::optional<std::string>& b) {
    if (a && b) {
        return *a + " " + *b;
    }
    return a ? *a : b ? *b : std::string();
}

void setPosition(VmlNode& out, const ShapeBox& box, const MapperContext& ctx) {
    out.style.set("left", ctx.format(box.x));
    out.style.set("top", ctx.format(box.y));
    out.style.set("width", ctx.format(box.width));
    out.style.set("height", ctx.format(box.height));
}

bool allTranslations(const TransformList& ops) {
    return std::all_of(ops.begin(), ops.end(), [](const TransformOp& op) {
        return std::holds_alternative<TranslateOp>(op);
    });
}

void moveGeometry(TransformStrategy strategy, TransformGeometry& geometry, double dx, double dy) {
    if (dx == 0.0 && dy == 0.0) {
        return;
    }
    switch (strategy) {
    case TransformStrategy::SkewShape:
    case TransformStrategy::MatrixFilter:
        geometry.box.x += dx;
        geometry.box.y += dy;
        break;
    case TransformStrategy::SkewPath:
        geometry.path = mapPathPoints(geometry.path, [&](Point p) { return Point{p.x + dx, p.y + dy}; });
        break;
    case TransformStrategy::RecalcPoints:
        for (auto& p : geometry.points) {
            p = {p.x + dx, p.y + dy};
        }
        break;
    case TransformStrategy::Distribute:
        break;
    }
}

TransformResult applyTransformList(const TransformList& ops, const SvgNode& node, const MapperContext& ctx,
                                   TransformStrategy strategy, TransformGeometry& geometry) {
    TransformResult result;
    if (ops.empty() || strategy == TransformStrategy::Distribute) {
        return result;
    }
    const std::string location = node.location.str();
    if (auto unsupported = checkSupport(strategy, ops, location)) {
        ctx.diags.report(std::move(*unsupported));
        return result;
    }
    auto ctm = composeCtm(ops, ctx.diags, location);
    if (!ctm) {
        return result;
    }
    if (strategy == TransformStrategy::RecalcPoints) {
        geometry.points = recalcPoints(*ctm, geometry.points);
        return result;
    }
    if (allTranslations(ops)) {
        moveGeometry(strategy, geometry, ctm->e, ctm->f);
        return result;
    }

    // A single rotate about a center keeps its coordinates: the shift to
    // the center and back cancel, and the offset rule accounts for it.
    Offset offset;
    if (ops.size() == 1) {
        auto single = computeOffset(ops.front(), geometry.box, ctx.rootSize, strategy, ctx.diags, location);
        if (!single) {
            return result;
        }
        offset = *single;
    }
    else {
        offset = computeComposedOffset(*ctm, geometry.box, ctx.rootSize, strategy);
        moveGeometry(strategy, geometry, ctm->e, ctm->f);
    }
    TransformMatrix linear = *ctm;
    linear.e = 0.0;
    linear.f = 0.0;

    const int precision = ctx.options.precision;
    if (strategy == TransformStrategy::MatrixFilter) {
        result.filter = formatMatrixFilter(matrixFilterParams(linear), precision);
        geometry.box.x -= offset.dx;
        geometry.box.y -= offset.dy;
        return result;
    }
    VmlNode skew("v:skew");
    skew.attributes.set("on", "t");
    skew.attributes.set("matrix", strategy == TransformStrategy::SkewShape ? skewMatrixForShape(linear, precision)
                                                                         : skewMatrixForPath(linear, precision));
    skew.attributes.set("offset", ctx.format(offset.dx) + "px," + ctx.format(offset.dy) + "px");
    result.skew = std::move(skew);
    return result;
}

void mapChildren(const SvgNode& node, const MapperContext& childCtx, VmlNode& out) {
    for (const auto& child : node.children) {
        for (auto& mapped : mapNode(child, childCtx, &node)) {
            out.append(std::move(mapped));
        }
    }
}

VmlNode mapSvgElement(const SvgNode& node, MapperContext& ctx, bool outermost) {
    const std::string location = node.location.str();
    VmlNode group("v:group");
    mapCore(node, ctx, group);

    const auto width = readLength(node, "width", ctx);
    const auto height = readLength(node, "height", ctx);
    std::optional<ViewBox> viewBox;
    if (const std::string* raw = node.attribute("viewBox")) {
        viewBox = parseViewBox(*raw, ctx.diags, location);
    }

    RootSize size = kFallbackRootSize;
    bool sized = true;
    if (width && *width > 0) {
        size.width = *width;
    }
    else if (viewBox) {
        size.width = viewBox->width;
    }
    else {
        sized = false;
    }
    if (height && *height > 0) {
        size.height = *height;
    }
    else if (viewBox) {
        size.height = viewBox->height;
    }
    else {
        sized = false;
    }
    if (!sized) {
        ctx.diags.warning(codes::MissingRootSize,
                          "svg has neither width/height nor a viewBox; assuming " + ctx.format(size.width) + "x" +
                              ctx.format(size.height),
                          location);
    }
    if (outermost) {
        ctx.rootSize = size;
    }

    if (viewBox) {
        group.attributes.set("coordorigin", ctx.format(viewBox->minX) + "," + ctx.format(viewBox->minY));
        group.attributes.set("coordsize", ctx.format(viewBox->width) + "," + ctx.format(viewBox->height));
    }
    else {
        ctx.diags.warning(codes::MissingViewBox, "svg has no viewBox; using its width and height", location);
        group.attributes.set("coordorigin", "0,0");
        group.attributes.set("coordsize", ctx.format(size.width) + "," + ctx.format(size.height));
    }
    if (!outermost) {
        if (auto x = readLength(node, "x", ctx)) {
            group.style.set("left", ctx.format(*x));
        }
        if (auto y = readLength(node, "y", ctx)) {
            group.style.set("top", ctx.format(*y));
        }
    }
    if (width) {
        group.style.set("width", ctx.format(*width));
    }
    if (height) {
        group.style.set("height", ctx.format(*height));
    }
    mapChildren(node, childContext(node, ctx), group);
    return group;
}

VmlNode convertForeign(const SvgNode& node) {
    if (node.isCharData()) {
        return VmlNode::textNode(node.text.value_or(std::string()));
    }
    VmlNode out(node.name);
    out.attributes = node.attributes;
    for (const auto& c : node.children) {
        out.append(convertForeign(c));
    }
    return out;
}

void pushInherited(const SvgNode& container, MapperContext& ctx) {
    for (const auto& [name, value] : container.attributes) {
        if (isInheritable(name)) {
            ctx.inherited.set(name, value);
        }
    }
}

std::optional<VmlNode> mapOval(const SvgNode& node, const MapperContext& ctx, double rx, double ry) {
    VmlNode oval("v:oval");
    mapCore(node, ctx, oval);
    const AttributeTable effective = effectiveAttributes(node, ctx);
    mapStylable(effective, node, ctx, oval);
    warnShapeOpacity(effective, node, ctx);
    const double cx = lengthOr(node, "cx", ctx, 0.0);
    const double cy = lengthOr(node, "cy", ctx, 0.0);
    TransformGeometry geometry;
    geometry.box = {cx - rx, cy - ry, 2.0 * rx, 2.0 * ry};
    TransformResult t = applyTransform(node, ctx, TransformStrategy::SkewShape, geometry);
    setPosition(oval, geometry.box, ctx);
    if (t.skew) {
        oval.append(std::move(*t.skew));
    }
    return oval;
}

std::optional<double> radius(const SvgNode& node, std::string_view name, const MapperContext& ctx) {
    auto r = readLength(node, name, ctx);
    if (!r) {
        if (!node.hasAttribute(name)) {
            ctx.diags.warning(codes::DegenerateShape, "<" + node.name + "> without " + std::string(name) + " is skipped",
                              node.location.str());
        }
        return std::nullopt;
    }
    if (*r < 0) {
        ctx.diags.error(codes::NegativeRadius, std::string(name) + " must not be negative", node.location.str());
        return std::nullopt;
    }
    return r;
}

} // namespace

bool isInheritable(std::string_view name) noexcept {
    return std::find(kInheritable.begin(), kInheritable.end(), name) != kInheritable.end();
}

AttributeTable effectiveAttributes(const SvgNode& node, const MapperContext& ctx) {
    AttributeTable out = node.attributes;
    for (const auto& [name, value] : ctx.inherited) {
        out.insert(name, value);
    }
    return out;
}

TransformList effectiveTransforms(const SvgNode& node, const MapperContext& ctx) {
    TransformList ops = ctx.transforms;
    if (const std::string* raw = node.attribute("transform")) {
        if (auto own = parseTransformList(*raw, ctx.diags, node.location.str())) {
            ops.insert(ops.end(), own->begin(), own->end());
        }
    }
    return ops;
}

MapperContext childContext(const SvgNode& container, const MapperContext& ctx) {
    MapperContext child = ctx;
    pushInherited(container, child);
    child.transforms = effectiveTransforms(container, ctx);
    return child;
}

TransformResult applyTransform(const SvgNode& node, const MapperContext& ctx, TransformStrategy strategy,
                               TransformGeometry& geometry) {
    return applyTransformList(effectiveTransforms(node, ctx), node, ctx, strategy, geometry);
}

VmlNode mapDocument(const SvgDocument& doc, const MapOptions& options, Diagnostics& diags) {
    MapperContext ctx(doc, diags, options);
    return mapSvgRoot(doc.root(), ctx);
}

VmlNode mapSvgRoot(const SvgNode& node, MapperContext& ctx) {
    return mapSvgElement(node, ctx, true);
}

std::vector<VmlNode> mapNode(const SvgNode& node, const MapperContext& ctx, const SvgNode* parent) {
    std::vector<VmlNode> out;
    auto push = [&](std::optional<VmlNode> mapped) {
        if (mapped) {
            out.push_back(std::move(*mapped));
        }
    };
    switch (node.kind) {
    case ElementKind::Svg: {
        MapperContext nested = ctx;
        out.push_back(mapSvgElement(node, nested, false));
        break;
    }
    case ElementKind::G: push(mapG(node, ctx)); break;
    case ElementKind::Defs: push(mapDefs(node, ctx)); break;
    case ElementKind::Use: push(mapUse(node, ctx)); break;
    case ElementKind::Rect: push(mapRect(node, ctx)); break;
    case ElementKind::Circle: push(mapCircle(node, ctx)); break;
    case ElementKind::Ellipse: push(mapEllipse(node, ctx)); break;
    case ElementKind::Line:
    case ElementKind::Polyline:
    case ElementKind::Polygon: push(mapPoly(node, ctx)); break;
    case ElementKind::Path: push(mapPath(node, ctx)); break;
    case ElementKind::Text: out = mapText(node, ctx); break;
    case ElementKind::TextPath: push(mapTextPath(node, parent, ctx)); break;
    case ElementKind::A: push(mapAnchor(node, ctx)); break;
    case ElementKind::ForeignObject: push(mapForeignObject(node, ctx)); break;
    // Gradients are read through fill references; unknown elements were
    // reported by the parser.
    case ElementKind::LinearGradient:
    case ElementKind::Stop:
    case ElementKind::Unknown:
    case ElementKind::Foreign:
    case ElementKind::CharData: break;
    }
    return out;
}

std::optional<VmlNode> mapG(const SvgNode& node, const MapperContext& ctx) {
    VmlNode group("v:group");
    mapCore(node, ctx, group);
    mapChildren(node, childContext(node, ctx), group);
    return group;
}

std::optional<VmlNode> mapRect(const SvgNode& node, const MapperContext& ctx) {
    const std::string location = node.location.str();
    const auto width = readLength(node, "width", ctx);
    const auto height = readLength(node, "height", ctx);
    if (!width || !height || *width <= 0 || *height <= 0) {
        ctx.diags.warning(codes::DegenerateShape, "rect needs a positive width and height; skipped", location);
        return std::nullopt;
    }
    VmlNode rect("v:roundrect");
    mapCore(node, ctx, rect);

    // rx and ry both write arcsize; the later attribute wins.
    std::optional<double> arcsize;
    for (const auto& [name, value] : node.attributes) {
        if (name != "rx" && name != "ry") {
            continue;
        }
        auto r = parseLength(value, ctx.diags, location);
        if (!r) {
            continue;
        }
        if (*r < 0) {
            ctx.diags.error(codes::NegativeRadius, name + " must not be negative", location);
            continue;
        }
        const double half = (name == "rx" ? *width : *height) / 2.0;
        arcsize = std::clamp(*r / half, 0.0, 1.0);
    }
    if (arcsize) {
        rect.attributes.set("arcsize", ctx.format(*arcsize));
    }

    const AttributeTable effective = effectiveAttributes(node, ctx);
    mapStylable(effective, node, ctx, rect);
    warnShapeOpacity(effective, node, ctx);

    TransformGeometry geometry;
    geometry.box = {lengthOr(node, "x", ctx, 0.0), lengthOr(node, "y", ctx, 0.0), *width, *height};
    TransformResult t = applyTransform(node, ctx, TransformStrategy::SkewShape, geometry);
    setPosition(rect, geometry.box, ctx);
    if (t.skew) {
        rect.append(std::move(*t.skew));
    }
    return rect;
}

std::optional<VmlNode> mapCircle(const SvgNode& node, const MapperContext& ctx) {
    auto r = radius(node, "r", ctx);
    if (!r) {
        return std::nullopt;
    }
    return mapOval(node, ctx, *r, *r);
}

std::optional<VmlNode> mapEllipse(const SvgNode& node, const MapperContext& ctx) {
    auto rx = radius(node, "rx", ctx);
    auto ry = radius(node, "ry", ctx);
    if (!rx || !ry) {
        return std::nullopt;
    }
    return mapOval(node, ctx, *rx, *ry);
}

std::optional<VmlNode> mapPoly(const SvgNode& node, const MapperContext& ctx) {
    const std::string location = node.location.str();
    std::vector<Point> points;
    if (node.kind == ElementKind::Line) {
        points = {{lengthOr(node, "x1", ctx, 0.0), lengthOr(node, "y1", ctx, 0.0)},
                  {lengthOr(node, "x2", ctx, 0.0), lengthOr(node, "y2", ctx, 0.0)}};
    }
    else {
        const std::string* raw = node.attribute("points");
        auto parsed = parsePoints(raw ? std::string_view(*raw) : std::string_view(), ctx.diags, location);
        if (!parsed) {
            return std::nullopt;
        }
        points = std::move(*parsed);
    }
    if (points.size() < 2) {
        ctx.diags.warning(codes::DegenerateShape, "<" + node.name + "> needs at least two points; skipped", location);
        return std::nullopt;
    }

    VmlNode shape("v:shape");
    mapCore(node, ctx, shape);
    TransformGeometry geometry;
    geometry.points = std::move(points);
    applyTransform(node, ctx, TransformStrategy::RecalcPoints, geometry);

    std::vector<PathCommand> commands;
    commands.push_back(PathCommand::moveTo(geometry.points.front().x, geometry.points.front().y));
    for (std::size_t i = 1; i < geometry.points.size(); ++i) {
        commands.push_back(PathCommand::lineTo(geometry.points[i].x, geometry.points[i].y));
    }
    if (node.kind == ElementKind::Polygon) {
        commands.push_back(PathCommand::closePath());
    }
    shape.attributes.set("path", emitVmlPath(commands, ctx.options.precision));

    const AttributeTable effective = effectiveAttributes(node, ctx);
    mapStylable(effective, node, ctx, shape);
    warnShapeOpacity(effective, node, ctx);
    return shape;
}

std::optional<VmlNode> mapPath(const SvgNode& node, const MapperContext& ctx) {
    const std::string location = node.location.str();
    const std::string* d = node.attribute("d");
    auto commands = parsePathData(d ? std::string_view(*d) : std::string_view(), ctx.diags, location);
    if (!commands) {
        return std::nullopt;
    }
    if (commands->empty()) {
        ctx.diags.warning(codes::DegenerateShape, "path without data is skipped", location);
        return std::nullopt;
    }
    VmlNode shape("v:shape");
    mapCore(node, ctx, shape);
    TransformGeometry geometry;
    geometry.path = toAbsolute(*commands);
    TransformResult t = applyTransform(node, ctx, TransformStrategy::SkewPath, geometry);
    shape.attributes.set("path", emitVmlPath(geometry.path, ctx.options.precision));

    const AttributeTable effective = effectiveAttributes(node, ctx);
    mapStylable(effective, node, ctx, shape);
    warnShapeOpacity(effective, node, ctx);
    if (t.skew) {
        shape.append(std::move(*t.skew));
    }
    return shape;
}

std::vector<VmlNode> mapText(const SvgNode& node, const MapperContext& ctx) {
    std::vector<VmlNode> out;
    const std::string location = node.location.str();
    const TransformList ops = effectiveTransforms(node, ctx);
    const AttributeTable effective = effectiveAttributes(node, ctx);
    const std::string payload = collapseWhitespace(node.directText());

    if (!payload.empty()) {
        VmlNode box("v:textbox");
        mapCore(node, ctx, box);
        std::optional<double> fontSize;
        if (const std::string* raw = effective.find("font-size")) {
            fontSize = parseLength(*raw, ctx.diags, location);
        }
        else {
            ctx.diags.warning(codes::DefaultFontSize,
                              "text without font-size uses " + ctx.format(kDefaultFontSize), location);
        }
        const double size = fontSize.value_or(kDefaultFontSize);

        TransformGeometry geometry;
        geometry.box = {lengthOr(node, "x", ctx, 0.0), lengthOr(node, "y", ctx, 0.0) - size, 0.0, 0.0};
        TransformResult t = applyTransformList(ops, node, ctx, TransformStrategy::MatrixFilter, geometry);

        box.style.set("left", ctx.format(geometry.box.x));
        box.style.set("top", ctx.format(geometry.box.y));
        box.style.set("font-size", ctx.format(size));
        for (std::string_view property : {"font-family", "font-weight", "font-style"}) {
            if (const std::string* v = effective.find(property)) {
                box.style.set(property, std::string(trim(*v)));
            }
        }
        if (const std::string* fill = effective.find("fill")) {
            const std::string_view color = trim(*fill);
            if (color.substr(0, 4) == "url(") {
                ctx.diags.warning(codes::UnsupportedAttribute, "gradient fill on text is not mapped", location);
            }
            else if (color != "none") {
                box.style.set("color", std::string(color));
            }
        }
        const std::string filter = joinFilters(t.filter, alphaFilter(effective, node, ctx));
        if (!filter.empty()) {
            box.style.set("filter", filter);
        }
        box.append(VmlNode::textNode(payload));
        out.push_back(std::move(box));
    }

    MapperContext textCtx = ctx;
    pushInherited(node, textCtx);
    textCtx.transforms = ops;
    for (const auto& child : node.children) {
        if (child.kind == ElementKind::TextPath) {
            if (auto shape = mapTextPath(child, &node, textCtx)) {
                out.push_back(std::move(*shape));
            }
        }
    }
    return out;
}

std::optional<VmlNode> mapForeignObject(const SvgNode& node, const MapperContext& ctx) {
    VmlNode box("v:textbox");
    mapCore(node, ctx, box);
    const AttributeTable effective = effectiveAttributes(node, ctx);
    const auto width = readLength(node, "width", ctx);
    const auto height = readLength(node, "height", ctx);

    TransformGeometry geometry;
    geometry.box = {lengthOr(node, "x", ctx, 0.0), lengthOr(node, "y", ctx, 0.0), width.value_or(0.0),
                    height.value_or(0.0)};
    TransformResult t = applyTransform(node, ctx, TransformStrategy::MatrixFilter, geometry);

    box.style.set("left", ctx.format(geometry.box.x));
    box.style.set("top", ctx.format(geometry.box.y));
    if (width) {
        box.style.set("width", ctx.format(*width));
    }
    if (height) {
        box.style.set("height", ctx.format(*height));
    }
    const std::string filter = joinFilters(t.filter, alphaFilter(effective, node, ctx));
    if (!filter.empty()) {
        box.style.set("filter", filter);
    }
    for (const auto& c : node.children) {
        box.append(convertForeign(c));
    }
    return box;
}

std::optional<VmlNode> mapDefs(const SvgNode& node, const MapperContext& ctx) {
    VmlNode div("html:div");
    mapCore(node, ctx, div);
    div.style.set("visibility", "hidden");
    mapChildren(node, childContext(node, ctx), div);
    return div;
}

std::optional<VmlNode> mapUse(const SvgNode& node, const MapperContext& ctx) {
    const std::string location = node.location.str();
    VmlNode div("html:div");
    mapCore(node, ctx, div);
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 4> kBox = {{
        {"x", "left"}, {"y", "top"}, {"width", "width"}, {"height", "height"},
    }};
    for (const auto& [attribute, property] : kBox) {
        if (auto v = readLength(node, attribute, ctx)) {
            div.style.set(property, ctx.format(*v));
        }
    }

    const auto id = node.hrefId();
    if (!id) {
        ctx.diags.warning(codes::MissingHref, "use without a local reference is empty", location);
        return div;
    }
    const SvgNode* target = ctx.document.findById(*id);
    if (!target) {
        ctx.diags.error(codes::DanglingRef, "use refers to missing id '" + *id + "'", location);
        return div;
    }
    if (std::find(ctx.expanding.begin(), ctx.expanding.end(), target) != ctx.expanding.end()) {
        ctx.diags.error(codes::CircularRef, "use of '" + *id + "' refers back to itself", location);
        return div;
    }
    MapperContext copyCtx = childContext(node, ctx);
    copyCtx.expanding.push_back(target);
    copyCtx.dropIds = true;
    for (auto& mapped : mapNode(*target, copyCtx, nullptr)) {
        div.append(std::move(mapped));
    }
    return div;
}

std::optional<VmlNode> mapTextPath(const SvgNode& node, const SvgNode* parentText, const MapperContext& ctx) {
    const std::string location = node.location.str();
    if (!parentText || parentText->kind != ElementKind::Text) {
        ctx.diags.error(codes::TextPathParent, "textPath must be a child of text", location);
        return std::nullopt;
    }
    const auto id = node.hrefId();
    if (!id) {
        ctx.diags.error(codes::MissingHref, "textPath needs a reference to a path", location);
        return std::nullopt;
    }
    const SvgNode* target = ctx.document.findById(*id);
    if (!target) {
        ctx.diags.error(codes::DanglingRef, "textPath refers to missing id '" + *id + "'", location);
        return std::nullopt;
    }
    if (target->kind != ElementKind::Path) {
        ctx.diags.error(codes::DanglingRef, "textPath refers to <" + target->name + ">, not a path", location);
        return std::nullopt;
    }
    const std::string* d = target->attribute("d");
    auto commands = parsePathData(d ? std::string_view(*d) : std::string_view(), ctx.diags, target->location.str());
    if (!commands) {
        return std::nullopt;
    }

    VmlNode shape("v:shape");
    mapCore(node, ctx, shape);
    TransformGeometry geometry;
    geometry.path = toAbsolute(*commands);
    TransformResult t = applyTransform(node, ctx, TransformStrategy::MatrixFilter, geometry);
    shape.attributes.set("path", emitVmlPath(geometry.path, ctx.options.precision));
    if (geometry.box.x != 0.0 || geometry.box.y != 0.0) {
        shape.style.set("left", ctx.format(geometry.box.x));
        shape.style.set("top", ctx.format(geometry.box.y));
    }
    if (t.filter) {
        shape.style.set("filter", *t.filter);
    }

    const AttributeTable effective = effectiveAttributes(node, ctx);
    mapStylable(effective, node, ctx, shape);

    VmlNode path("v:path");
    path.attributes.set("textpathok", "t");
    shape.append(std::move(path));

    std::string font;
    auto addFont = [&](std::string_view key, const std::string& value) {
        if (!font.empty()) {
            font += ';';
        }
        font += key;
        font += ':';
        font += value;
    };
    if (const std::string* size = effective.find("font-size")) {
        if (auto v = parseLength(*size, ctx.diags, location)) {
            addFont("FONT-SIZE", ctx.format(*v));
        }
    }
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 3> kFont = {{
        {"font-family", "FONT-FAMILY"}, {"font-weight", "FONT-WEIGHT"}, {"font-style", "FONT-STYLE"},
    }};
    for (const auto& [attribute, key] : kFont) {
        if (const std::string* v = effective.find(attribute)) {
            addFont(key, std::string(trim(*v)));
        }
    }
    std::string payload;
    appendText(node, payload);

    VmlNode textpath("v:textpath");
    if (!font.empty()) {
        textpath.attributes.set("style", font);
    }
    textpath.attributes.set("on", "t");
    textpath.attributes.set("string", collapseWhitespace(payload));
    shape.append(std::move(textpath));
    return shape;
}

std::optional<VmlNode> mapAnchor(const SvgNode& node, const MapperContext& ctx) {
    VmlNode anchor("html:a");
    mapCore(node, ctx, anchor);
    const std::string* href = node.attribute(kHrefAttribute);
    if (!href) {
        href = node.attribute("href");
    }
    if (href) {
        anchor.attributes.set("href", *href);
    }
    else {
        ctx.diags.warning(codes::MissingHref, "a without xlink:href has no link target", node.location.str());
    }
    mapChildren(node, childContext(node, ctx), anchor);
    return anchor;
}

} // namespace svg2vml
