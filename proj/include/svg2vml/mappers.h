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
#include <svg2vml/number.h>
#include <svg2vml/path_data.h>
#include <svg2vml/svg_dom.h>
#include <svg2vml/transform.h>
#include <svg2vml/vml_node.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace svg2vml {

struct MapOptions {
    int precision = kDefaultPrecision;
};

/// Root size used when the svg element gives neither width/height nor a
/// viewBox.
inline constexpr RootSize kFallbackRootSize{300.0, 150.0};

/// State pushed down the tree while mapping. Copied per subtree, so a
/// child's changes never leak to its siblings.
struct MapperContext {
    const SvgDocument& document;
    Diagnostics& diags;
    MapOptions options;
    RootSize rootSize{kFallbackRootSize};

    /// Inheritable presentation attributes set by ancestors.
    AttributeTable inherited;
    /// Transforms of ancestor groups, outermost first.
    TransformList transforms;
    /// use targets currently being expanded, for cycle detection.
    std::vector<const SvgNode*> expanding;
    /// Set inside use copies: ids are not copied.
    bool dropIds = false;

    MapperContext(const SvgDocument& doc, Diagnostics& sink, MapOptions opts = {})
        : document(doc), diags(sink), options(opts) {}

    std::string format(double value) const { return formatNumber(value, options.precision); }
};

/// Presentation attributes that groups push down to their descendants.
bool isInheritable(std::string_view name) noexcept;

/// The node's own attributes, followed by inherited ones it does not set.
AttributeTable effectiveAttributes(const SvgNode& node, const MapperContext& ctx);

/// Context for the children of a container: its inheritable attributes
/// override the inherited ones and its transform list is appended.
MapperContext childContext(const SvgNode& container, const MapperContext& ctx);

/// Inherited transforms followed by the node's own list. A malformed
/// transform attribute is reported and contributes nothing.
TransformList effectiveTransforms(const SvgNode& node, const MapperContext& ctx);

/// Geometry that a transform strategy may rewrite in place.
struct TransformGeometry {
    ShapeBox box;                  // SkewShape, MatrixFilter
    std::vector<Point> points;     // RecalcPoints
    std::vector<PathCommand> path; // SkewPath, absolute commands
};

/// Output of a transform strategy besides the rewritten geometry.
struct TransformResult {
    std::optional<VmlNode> skew;       // SkewShape, SkewPath
    std::optional<std::string> filter; // MatrixFilter
};

/// Simulates the node's effective transform list with `strategy`.
///
/// Lists made only of translations move the geometry directly. A single
/// other transform uses its skew matrix or filter and its offset. Longer
/// supported lists use the CTM's linear part, the composed offset, and
/// move the geometry by the CTM's translation. Unsupported lists report
/// UNSUPPORTED_TRANSFORM and leave the element untransformed.
TransformResult applyTransform(const SvgNode& node, const MapperContext& ctx, TransformStrategy strategy,
                               TransformGeometry& geometry);

/// Maps a whole document to a v:group tree.
VmlNode mapDocument(const SvgDocument& doc, const MapOptions& options, Diagnostics& diags);

/// Maps `node` and its subtree; elements without output yield nothing.
/// `parent` is the node's SVG parent, needed by textPath.
std::vector<VmlNode> mapNode(const SvgNode& node, const MapperContext& ctx, const SvgNode* parent = nullptr);

/// svg -> v:group with coordorigin/coordsize from viewBox and style
/// width/height. Sets ctx.rootSize for the outermost svg.
VmlNode mapSvgRoot(const SvgNode& node, MapperContext& ctx);

std::optional<VmlNode> mapG(const SvgNode& node, const MapperContext& ctx);
std::optional<VmlNode> mapRect(const SvgNode& node, const MapperContext& ctx);
std::optional<VmlNode> mapCircle(const SvgNode& node, const MapperContext& ctx);
std::optional<VmlNode> mapEllipse(const SvgNode& node, const MapperContext& ctx);

/// line, polyline and polygon -> v:shape with a recalculated path.
std::optional<VmlNode> mapPoly(const SvgNode& node, const MapperContext& ctx);

std::optional<VmlNode> mapPath(const SvgNode& node, const MapperContext& ctx);

/// A v:textbox for the text's own character data, followed by one v:shape
/// per textPath child.
std::vector<VmlNode> mapText(const SvgNode& node, const MapperContext& ctx);

std::optional<VmlNode> mapForeignObject(const SvgNode& node, const MapperContext& ctx);
std::optional<VmlNode> mapDefs(const SvgNode& node, const MapperContext& ctx);
std::optional<VmlNode> mapUse(const SvgNode& node, const MapperContext& ctx);

/// The referenced path as a v:shape carrying v:path textpathok="t" and a
/// v:textpath with the parent text's font and the payload string.
std::optional<VmlNode> mapTextPath(const SvgNode& node, const SvgNode* parentText, const MapperContext& ctx);

std::optional<VmlNode> mapAnchor(const SvgNode& node, const MapperContext& ctx);

} // namespace svg2vml
