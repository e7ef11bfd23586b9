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
#include <svg2vml/geometry.h>
#include <svg2vml/number.h>
#include <svg2vml/svg_dom.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace svg2vml {

/// Affine matrix [a b c d e f], i.e. the 3x3 matrix
///
///     | a c e |
///     | b d f |
///     | 0 0 1 |
struct TransformMatrix {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 1.0;
    double e = 0.0;
    double f = 0.0;

    static constexpr TransformMatrix identity() noexcept { return {}; }

    bool hasIdentityLinearPart() const noexcept { return a == 1.0 && b == 0.0 && c == 0.0 && d == 1.0; }

    /// Matrix product `*this · rhs`.
    TransformMatrix operator*(const TransformMatrix& rhs) const noexcept;

    friend bool operator==(const TransformMatrix&, const TransformMatrix&) = default;
};

struct MatrixOp {
    double a, b, c, d, e, f;
};
struct TranslateOp {
    double tx;
    double ty = 0.0;
};
struct ScaleOp {
    double sx;
    double sy;
};
struct RotateOp {
    double angle; // degrees
    std::optional<Point> center;
};
struct SkewXOp {
    double angle; // degrees
};
struct SkewYOp {
    double angle; // degrees
};

using TransformOp = std::variant<MatrixOp, TranslateOp, ScaleOp, RotateOp, SkewXOp, SkewYOp>;
using TransformList = std::vector<TransformOp>;

/// Function name as written in a transform attribute ("rotate", ...).
std::string_view transformName(const TransformOp& op) noexcept;

/// How an element kind simulates its transform.
enum class TransformStrategy {
    SkewShape,    // rect, circle, ellipse: negated skew matrix plus offset
    SkewPath,     // path: skew matrix plus root-size offset
    RecalcPoints, // line, polyline, polygon: coordinates rewritten
    MatrixFilter, // text, textPath, foreignObject: matrix filter plus offset
    Distribute,   // g: pushed down to the children
};

std::optional<TransformStrategy> strategyFor(ElementKind kind) noexcept;
std::string_view strategyName(TransformStrategy strategy) noexcept;

struct Offset {
    double dx = 0.0;
    double dy = 0.0;
};

struct MatrixFilterParams {
    double m11 = 1.0;
    double m12 = 0.0;
    double m21 = 0.0;
    double m22 = 1.0;
};

/// Parses a transform list such as "translate(10) rotate(20, 300, 300)".
/// Omitted parameters take their defaults (ty = 0, sy = sx, rotation about
/// the origin).
std::optional<TransformList> parseTransformList(std::string_view value, Diagnostics& diags,
                                                std::string location = {});

/// SINGULAR_SKEW when a skew angle sits on a tangent pole.
std::optional<TransformMatrix> opToMatrix(const TransformOp& op, Diagnostics& diags, std::string location = {});

/// Left-to-right product of the list's matrices; identity when empty.
std::optional<TransformMatrix> composeCtm(std::span<const TransformOp> ops, Diagnostics& diags,
                                          std::string location = {});

Point applyToPoint(const TransformMatrix& m, Point p) noexcept;

std::vector<Point> recalcPoints(const TransformMatrix& ctm, std::span<const Point> points);

/// "-a, -b, -c, -d, 0, 0" for shapes, whose skew runs mirrored.
std::string skewMatrixForShape(const TransformMatrix& ctm, int precision = kDefaultPrecision);

/// "a, c, b, d, 0, 0" for paths: the linear part read row by row, which
/// reads "cos, -sin, sin, cos" for a rotation.
std::string skewMatrixForPath(const TransformMatrix& ctm, int precision = kDefaultPrecision);

/// M11 = a, M12 = c, M21 = b, M22 = d.
MatrixFilterParams matrixFilterParams(const TransformMatrix& ctm) noexcept;

/// "progid:DXImageTransform.Microsoft.Matrix(M11=..., ..., SizingMethod='auto expand')"
std::string formatMatrixFilter(const MatrixFilterParams& params, int precision = kDefaultPrecision);

/// Positional correction for a single transform under `strategy`.
///
/// SkewShape and MatrixFilter:
///   skewX(t)          (tan t * y + width, height)
///   skewY(t)          (width, tan t * x + height)
///   rotate(t)         (x cos t - y sin t - width, x sin t + y cos t - height)
///   rotate(t, cx, cy) (cos t (x - cx) - sin t (y - cy) - width + cx,
///                      sin t (x - cx) + cos t (y - cy) - height + cy)
///   scale(sx, sy)     (sx * width, sy * height)
///   translate         (0, 0); the coordinates move instead
///
/// SkewPath uses the root size W, H instead of the box:
///   rotate(t[, cx, cy]) (cos t W - sin t H - W, sin t W + cos t H - H)
///   scale/skewX/skewY   the same rule with the op's linear part
///   translate           (0, 0)
///
/// matrix() and the other strategies yield UNSUPPORTED_TRANSFORM.
std::optional<Offset> computeOffset(const TransformOp& op, const ShapeBox& box, const RootSize& root,
                                    TransformStrategy strategy, Diagnostics& diags, std::string location = {});

/// Offset for a composed multi-transform list, from the CTM's linear part
/// [a b c d]. SkewShape and MatrixFilter use (a * width + c * y,
/// b * x + d * height), which reproduces the scale and skew rules above;
/// SkewPath uses (a W + c H - W, b W + d H - H), which reproduces the path
/// rotation rule.
Offset computeComposedOffset(const TransformMatrix& ctm, const ShapeBox& box, const RootSize& root,
                             TransformStrategy strategy) noexcept;

/// Support matrix for transform lists. A single transform is always
/// supported; longer lists are limited to
///   RecalcPoints: anything
///   SkewShape:    scale, translate, skewX, skewY
///   SkewPath:     scale, translate
///   MatrixFilter: scale, skewX, skewY
///   Distribute:   decided by the children
/// Returns the UNSUPPORTED_TRANSFORM diagnostic, or nullopt when supported.
std::optional<Diagnostic> checkSupport(TransformStrategy strategy, std::span<const TransformOp> ops,
                                       std::string location = {});

} // namespace svg2vml
