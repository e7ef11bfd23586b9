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

#include <svg2vml/transform.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace svg2vml {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct SinCos {
    double sin;
    double cos;
};

// Quarter turns are returned exactly so that rotate(90) maps integer
// coordinates onto integers.
SinCos sinCosDegrees(double degrees) noexcept {
    const double turns = degrees / 90.0;
    if (turns == std::floor(turns) && std::abs(turns) < 1e15) {
        const auto q = static_cast<long long>(turns);
        switch (((q % 4) + 4) % 4) {
        case 0: return {0.0, 1.0};
        case 1: return {1.0, 0.0};
        case 2: return {0.0, -1.0};
        default: return {-1.0, 0.0};
        }
    }
    const double r = degrees * std::numbers::pi / 180.0;
    return {std::sin(r), std::cos(r)};
}

bool onTangentPole(double degrees) noexcept {
    const double r = std::fmod(std::abs(degrees), 180.0);
    return std::abs(r - 90.0) < 1e-9;
}

std::optional<double> tanDegrees(double degrees, Diagnostics& diags, const std::string& location) {
    if (onTangentPole(degrees)) {
        diags.error(codes::SingularSkew, "skew angle " + formatNumber(degrees) + " has no finite tangent", location);
        return std::nullopt;
    }
    const SinCos sc = sinCosDegrees(degrees);
    return sc.sin / sc.cos;
}

std::string joinNumbers(std::initializer_list<double> values, int precision) {
    std::string out;
    for (double v : values) {
        if (!out.empty()) {
            out += ", ";
        }
        out += formatNumber(v, precision);
    }
    return out;
}

bool isOneOf(const TransformOp& op, const std::vector<std::size_t>& indices) {
    return std::find(indices.begin(), indices.end(), op.index()) != indices.end();
}

constexpr std::size_t kMatrix = 0;
constexpr std::size_t kTranslate = 1;
constexpr std::size_t kScale = 2;
constexpr std::size_t kRotate = 3;
constexpr std::size_t kSkewX = 4;
constexpr std::size_t kSkewY = 5;

} // namespace

TransformMatrix TransformMatrix::operator*(const TransformMatrix& r) const noexcept {
    return {
        a * r.a + c * r.b,
        b * r.a + d * r.b,
        a * r.c + c * r.d,
        b * r.c + d * r.d,
        a * r.e + c * r.f + e,
        b * r.e + d * r.f + f,
    };
}

std::string_view transformName(const TransformOp& op) noexcept {
    static constexpr std::string_view names[] = {"matrix", "translate", "scale", "rotate", "skewX", "skewY"};
    return names[op.index()];
}

std::optional<TransformStrategy> strategyFor(ElementKind kind) noexcept {
    switch (kind) {
    case ElementKind::Rect:
    case ElementKind::Circle:
    case ElementKind::Ellipse: return TransformStrategy::SkewShape;
    case ElementKind::Path: return TransformStrategy::SkewPath;
    case ElementKind::Line:
    case ElementKind::Polyline:
    case ElementKind::Polygon: return TransformStrategy::RecalcPoints;
    case ElementKind::Text:
    case ElementKind::TextPath:
    case ElementKind::ForeignObject: return TransformStrategy::MatrixFilter;
    case ElementKind::G: return TransformStrategy::Distribute;
    default: return std::nullopt;
    }
}

std::string_view strategyName(TransformStrategy strategy) noexcept {
    switch (strategy) {
    case TransformStrategy::SkewShape: return "skew-shape";
    case TransformStrategy::SkewPath: return "skew-path";
    case TransformStrategy::RecalcPoints: return "recalc-points";
    case TransformStrategy::MatrixFilter: return "matrix-filter";
    case TransformStrategy::Distribute: return "distribute";
    }
    return {};
}

std::optional<TransformList> parseTransformList(std::string_view value, Diagnostics& diags, std::string location) {
    TransformList ops;
    std::size_t pos = 0;
    auto fail = [&](std::string message) -> std::optional<TransformList> {
        diags.error(codes::InvalidTransform, std::move(message) + " in '" + std::string(value) + "'", location);
        return std::nullopt;
    };
    skipSpaces(value, pos);
    while (pos < value.size()) {
        const std::size_t nameStart = pos;
        while (pos < value.size() && std::isalpha(static_cast<unsigned char>(value[pos]))) {
            ++pos;
        }
        const std::string_view name = value.substr(nameStart, pos - nameStart);
        if (name.empty()) {
            return fail("expected a transform name");
        }
        skipSpaces(value, pos);
        if (pos >= value.size() || value[pos] != '(') {
            return fail("expected '(' after '" + std::string(name) + "'");
        }
        ++pos;
        std::vector<double> args;
        skipSpaces(value, pos);
        while (pos < value.size() && value[pos] != ')') {
            if (!args.empty()) {
                skipCommaSpaces(value, pos);
            }
            auto number = scanNumber(value, pos);
            if (!number) {
                return fail("malformed argument to '" + std::string(name) + "'");
            }
            args.push_back(*number);
            skipSpaces(value, pos);
        }
        if (pos >= value.size()) {
            return fail("missing ')'");
        }
        ++pos;
        const std::size_t n = args.size();
        auto arity = [&](std::string_view expected) {
            return fail("'" + std::string(name) + "' takes " + std::string(expected) + " arguments, got " +
                        std::to_string(n));
        };
        if (name == "matrix") {
            if (n != 6) {
                return arity("6");
            }
            ops.emplace_back(MatrixOp{args[0], args[1], args[2], args[3], args[4], args[5]});
        }
        else if (name == "translate") {
            if (n != 1 && n != 2) {
                return arity("1 or 2");
            }
            ops.emplace_back(TranslateOp{args[0], n == 2 ? args[1] : 0.0});
        }
        else if (name == "scale") {
            if (n != 1 && n != 2) {
                return arity("1 or 2");
            }
            ops.emplace_back(ScaleOp{args[0], n == 2 ? args[1] : args[0]});
        }
        else if (name == "rotate") {
            if (n != 1 && n != 3) {
                return arity("1 or 3");
            }
            RotateOp rotate{args[0], std::nullopt};
            if (n == 3) {
                rotate.center = Point{args[1], args[2]};
            }
            ops.emplace_back(rotate);
        }
        else if (name == "skewX" || name == "skewY") {
            if (n != 1) {
                return arity("1");
            }
            if (name == "skewX") {
                ops.emplace_back(SkewXOp{args[0]});
            }
            else {
                ops.emplace_back(SkewYOp{args[0]});
            }
        }
        else {
            return fail("unknown transform '" + std::string(name) + "'");
        }
        skipCommaSpaces(value, pos);
    }
    return ops;
}

std::optional<TransformMatrix> opToMatrix(const TransformOp& op, Diagnostics& diags, std::string location) {
    return std::visit(
        Overloaded{
            [](const MatrixOp& m) -> std::optional<TransformMatrix> {
                return TransformMatrix{m.a, m.b, m.c, m.d, m.e, m.f};
            },
            [](const TranslateOp& t) -> std::optional<TransformMatrix> {
                return TransformMatrix{1, 0, 0, 1, t.tx, t.ty};
            },
            [](const ScaleOp& s) -> std::optional<TransformMatrix> {
                return TransformMatrix{s.sx, 0, 0, s.sy, 0, 0};
            },
            [](const RotateOp& r) -> std::optional<TransformMatrix> {
                const SinCos sc = sinCosDegrees(r.angle);
                const TransformMatrix rotation{sc.cos, sc.sin, -sc.sin, sc.cos, 0, 0};
                if (!r.center) {
                    return rotation;
                }
                const Point c = *r.center;
                return TransformMatrix{1, 0, 0, 1, c.x, c.y} * rotation * TransformMatrix{1, 0, 0, 1, -c.x, -c.y};
            },
            [&](const SkewXOp& s) -> std::optional<TransformMatrix> {
                auto t = tanDegrees(s.angle, diags, location);
                if (!t) {
                    return std::nullopt;
                }
                return TransformMatrix{1, 0, *t, 1, 0, 0};
            },
            [&](const SkewYOp& s) -> std::optional<TransformMatrix> {
                auto t = tanDegrees(s.angle, diags, location);
                if (!t) {
                    return std::nullopt;
                }
                return TransformMatrix{1, *t, 0, 1, 0, 0};
            },
        },
        op);
}

std::optional<TransformMatrix> composeCtm(std::span<const TransformOp> ops, Diagnostics& diags, std::string location) {
    TransformMatrix ctm;
    for (const auto& op : ops) {
        auto m = opToMatrix(op, diags, location);
        if (!m) {
            return std::nullopt;
        }
        ctm = ctm * *m;
    }
    return ctm;
}

Point applyToPoint(const TransformMatrix& m, Point p) noexcept {
    return {m.a * p.x + m.c * p.y + m.e, m.b * p.x + m.d * p.y + m.f};
}

std::vector<Point> recalcPoints(const TransformMatrix& ctm, std::span<const Point> points) {
    std::vector<Point> out;
    out.reserve(points.size());
    for (const Point& p : points) {
        out.push_back(applyToPoint(ctm, p));
    }
    return out;
}

std::string skewMatrixForShape(const TransformMatrix& ctm, int precision) {
    return joinNumbers({-ctm.a, -ctm.b, -ctm.c, -ctm.d, 0.0, 0.0}, precision);
}

std::string skewMatrixForPath(const TransformMatrix& ctm, int precision) {
    return joinNumbers({ctm.a, ctm.c, ctm.b, ctm.d, 0.0, 0.0}, precision);
}

MatrixFilterParams matrixFilterParams(const TransformMatrix& ctm) noexcept {
    return {ctm.a, ctm.c, ctm.b, ctm.d};
}

std::string formatMatrixFilter(const MatrixFilterParams& p, int precision) {
    return "progid:DXImageTransform.Microsoft.Matrix(M11=" + formatNumber(p.m11, precision) +
           ", M12=" + formatNumber(p.m12, precision) + ", M21=" + formatNumber(p.m21, precision) +
           ", M22=" + formatNumber(p.m22, precision) + ", SizingMethod='auto expand')";
}

std::optional<Offset> computeOffset(const TransformOp& op, const ShapeBox& box, const RootSize& root,
                                    TransformStrategy strategy, Diagnostics& diags, std::string location) {
    auto unsupported = [&]() -> std::optional<Offset> {
        diags.error(codes::UnsupportedTransform,
                    "no offset rule for " + std::string(transformName(op)) + "() under the " +
                        std::string(strategyName(strategy)) + " strategy",
                    location);
        return std::nullopt;
    };
    if (op.index() == kMatrix) {
        return unsupported();
    }
    if (op.index() == kTranslate) {
        if (strategy == TransformStrategy::RecalcPoints || strategy == TransformStrategy::Distribute) {
            return unsupported();
        }
        return Offset{};
    }
    switch (strategy) {
    case TransformStrategy::SkewShape:
    case TransformStrategy::MatrixFilter:
        if (const auto* s = std::get_if<ScaleOp>(&op)) {
            return Offset{s->sx * box.width, s->sy * box.height};
        }
        if (const auto* k = std::get_if<SkewXOp>(&op)) {
            auto t = tanDegrees(k->angle, diags, location);
            if (!t) {
                return std::nullopt;
            }
            return Offset{*t * box.y + box.width, box.height};
        }
        if (const auto* k = std::get_if<SkewYOp>(&op)) {
            auto t = tanDegrees(k->angle, diags, location);
            if (!t) {
                return std::nullopt;
            }
            return Offset{box.width, *t * box.x + box.height};
        }
        if (const auto* r = std::get_if<RotateOp>(&op)) {
            const SinCos sc = sinCosDegrees(r->angle);
            if (!r->center) {
                return Offset{box.x * sc.cos - box.y * sc.sin - box.width,
                              box.x * sc.sin + box.y * sc.cos - box.height};
            }
            const double cx = r->center->x;
            const double cy = r->center->y;
            return Offset{sc.cos * (box.x - cx) - sc.sin * (box.y - cy) - box.width + cx,
                          sc.sin * (box.x - cx) + sc.cos * (box.y - cy) - box.height + cy};
        }
        break;
    case TransformStrategy::SkewPath: {
        if (const auto* r = std::get_if<RotateOp>(&op)) {
            const SinCos sc = sinCosDegrees(r->angle);
            return Offset{sc.cos * root.width - sc.sin * root.height - root.width,
                          sc.sin * root.width + sc.cos * root.height - root.height};
        }
        auto m = opToMatrix(op, diags, location);
        if (!m) {
            return std::nullopt;
        }
        return computeComposedOffset(*m, box, root, strategy);
    }
    case TransformStrategy::RecalcPoints:
    case TransformStrategy::Distribute:
        break;
    }
    return unsupported();
}

Offset computeComposedOffset(const TransformMatrix& m, const ShapeBox& box, const RootSize& root,
                             TransformStrategy strategy) noexcept {
    if (strategy == TransformStrategy::SkewPath) {
        return {m.a * root.width + m.c * root.height - root.width,
                m.b * root.width + m.d * root.height - root.height};
    }
    return {m.a * box.width + m.c * box.y, m.b * box.x + m.d * box.height};
}

std::optional<Diagnostic> checkSupport(TransformStrategy strategy, std::span<const TransformOp> ops,
                                       std::string location) {
    if (ops.size() <= 1) {
        return std::nullopt;
    }
    std::vector<std::size_t> allowed;
    std::string_view allowedText;
    switch (strategy) {
    case TransformStrategy::RecalcPoints:
    case TransformStrategy::Distribute:
        return std::nullopt;
    case TransformStrategy::SkewShape:
        allowed = {kScale, kTranslate, kSkewX, kSkewY};
        allowedText = "scale, translate, skewX, skewY";
        break;
    case TransformStrategy::SkewPath:
        allowed = {kScale, kTranslate};
        allowedText = "scale, translate";
        break;
    case TransformStrategy::MatrixFilter:
        allowed = {kScale, kSkewX, kSkewY};
        allowedText = "scale, skewX, skewY";
        break;
    }
    for (const auto& op : ops) {
        if (!isOneOf(op, allowed)) {
            return Diagnostic{Severity::Error, std::string(codes::UnsupportedTransform),
                              "transform lists under the " + std::string(strategyName(strategy)) +
                                  " strategy may only combine " + std::string(allowedText) + "; found " +
                                  std::string(transformName(op)) + "()",
                              std::move(location)};
        }
    }
    return std::nullopt;
}

} // namespace svg2vml
