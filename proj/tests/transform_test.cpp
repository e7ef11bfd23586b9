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

#include "oracles.h"

#include <gtest/gtest.h>

#include <cmath>

namespace svg2vml {
namespace {

TransformList parseOk(std::string_view value) {
    Diagnostics diags;
    auto ops = parseTransformList(value, diags);
    EXPECT_TRUE(ops) << value;
    EXPECT_TRUE(diags.empty()) << value;
    return ops.value_or(TransformList{});
}

TransformMatrix matrixOk(const TransformOp& op) {
    Diagnostics diags;
    auto m = opToMatrix(op, diags);
    EXPECT_TRUE(m);
    return m.value_or(TransformMatrix{});
}

void expectNear(const TransformMatrix& m, const oracle::Mat3& o, double tolerance) {
    EXPECT_NEAR(m.a, static_cast<double>(o[0][0]), tolerance);
    EXPECT_NEAR(m.b, static_cast<double>(o[1][0]), tolerance);
    EXPECT_NEAR(m.c, static_cast<double>(o[0][1]), tolerance);
    EXPECT_NEAR(m.d, static_cast<double>(o[1][1]), tolerance);
    EXPECT_NEAR(m.e, static_cast<double>(o[0][2]), tolerance);
    EXPECT_NEAR(m.f, static_cast<double>(o[1][2]), tolerance);
}

TEST(TransformParse, PaperExamples) {
    auto ops = parseOk("rotate(20, 300, 300)");
    ASSERT_EQ(ops.size(), 1u);
    const auto& r = std::get<RotateOp>(ops[0]);
    EXPECT_EQ(r.angle, 20);
    ASSERT_TRUE(r.center);
    EXPECT_EQ(*r.center, (Point{300, 300}));

    EXPECT_TRUE(parseOk("").empty());

    ops = parseOk("scale(3,1)");
    ASSERT_EQ(ops.size(), 1u);
    EXPECT_EQ(std::get<ScaleOp>(ops[0]).sx, 3);
    EXPECT_EQ(std::get<ScaleOp>(ops[0]).sy, 1);
}

TEST(TransformParse, DefaultsAndSeparators) {
    const auto ops = parseOk(" translate(10) , scale(2)rotate(5)\nskewX(1) skewY(-2) matrix(1 0 0 1 5 6)");
    ASSERT_EQ(ops.size(), 6u);
    EXPECT_EQ(std::get<TranslateOp>(ops[0]).ty, 0);
    EXPECT_EQ(std::get<ScaleOp>(ops[1]).sy, 2);
    EXPECT_FALSE(std::get<RotateOp>(ops[2]).center);
    EXPECT_EQ(std::get<SkewXOp>(ops[3]).angle, 1);
    EXPECT_EQ(std::get<SkewYOp>(ops[4]).angle, -2);
    EXPECT_EQ(std::get<MatrixOp>(ops[5]).f, 6);
}

TEST(TransformParse, ErrorsForBadNamesAndArity) {
    for (const char* text : {"spin(3)", "rotate(1,2)", "matrix(1 2 3 4 5)", "translate()", "scale(1,2,3)",
                             "skewX(1,2)", "rotate(1", "rotate 1"}) {
        Diagnostics diags;
        EXPECT_FALSE(parseTransformList(text, diags)) << text;
        EXPECT_TRUE(diags.contains(codes::InvalidTransform)) << text;
    }
}

TEST(TransformMatrixOps, PaperAndOracleValues) {
    EXPECT_EQ(matrixOk(ScaleOp{3, 1}), (TransformMatrix{3, 0, 0, 1, 0, 0}));
    EXPECT_EQ(matrixOk(TranslateOp{0, 0}), TransformMatrix::identity());
    const auto r90 = matrixOk(RotateOp{90, std::nullopt});
    expectNear(r90, oracle::matrixOf(RotateOp{90, std::nullopt}), 1e-12);
    EXPECT_NEAR(r90.a, 0, 1e-12);
    EXPECT_NEAR(r90.b, 1, 1e-12);
    EXPECT_NEAR(r90.c, -1, 1e-12);
    EXPECT_NEAR(r90.d, 0, 1e-12);
}

TEST(TransformMatrixOps, RotateAboutCenterConjugatesTranslations) {
    const RotateOp op{20, Point{300, 300}};
    expectNear(matrixOk(op), oracle::matrixOf(op), 1e-9);
}

TEST(TransformMatrixOps, SkewMatchesTangentOracle) {
    expectNear(matrixOk(SkewXOp{10}), oracle::matrixOf(SkewXOp{10}), 1e-12);
    expectNear(matrixOk(SkewYOp{-35}), oracle::matrixOf(SkewYOp{-35}), 1e-12);
}

TEST(TransformMatrixOps, SingularSkewAtTangentPoles) {
    for (double angle : {90.0, -90.0, 270.0, 450.0}) {
        Diagnostics diags;
        EXPECT_FALSE(opToMatrix(SkewXOp{angle}, diags)) << angle;
        EXPECT_TRUE(diags.contains(codes::SingularSkew)) << angle;
        Diagnostics diagsY;
        EXPECT_FALSE(opToMatrix(SkewYOp{angle}, diagsY)) << angle;
        EXPECT_TRUE(diagsY.contains(codes::SingularSkew)) << angle;
    }
    Diagnostics diags;
    EXPECT_TRUE(opToMatrix(SkewXOp{180}, diags));
}

TEST(Ctm, Examples) {
    Diagnostics diags;
    const TransformList inverse = {TranslateOp{2, 3}, TranslateOp{-2, -3}};
    EXPECT_EQ(composeCtm(inverse, diags), TransformMatrix::identity());

    const TransformList scaleThenMove = {ScaleOp{2, 2}, TranslateOp{5, 0}};
    const auto m = composeCtm(scaleThenMove, diags);
    EXPECT_EQ(m, (TransformMatrix{2, 0, 0, 2, 10, 0}));
    expectNear(*m, oracle::product(scaleThenMove), 0);

    const TransformList single = {RotateOp{20, Point{300, 300}}};
    EXPECT_EQ(composeCtm(single, diags), opToMatrix(single[0], diags));
    EXPECT_EQ(composeCtm({}, diags), TransformMatrix::identity());
    EXPECT_TRUE(diags.empty());
}

TEST(Ctm, SingularSkewPropagates) {
    Diagnostics diags;
    const TransformList ops = {ScaleOp{2, 2}, SkewXOp{90}};
    EXPECT_FALSE(composeCtm(ops, diags));
    EXPECT_TRUE(diags.contains(codes::SingularSkew));
}

TEST(Points, ApplyExamples) {
    EXPECT_EQ(applyToPoint(TransformMatrix::identity(), {7, 9}), (Point{7, 9}));
    const auto rot = matrixOk(RotateOp{90, Point{300, 300}});
    EXPECT_EQ(applyToPoint(rot, {350, 300}), (Point{300, 350}));
    EXPECT_EQ(applyToPoint(matrixOk(ScaleOp{3, 1}), {100, 50}), (Point{300, 50}));
}

TEST(Points, RecalcExamples) {
    const std::vector<Point> in = {{300, 300}, {350, 300}, {350, 250}, {400, 250}, {400, 300}, {450, 300}};
    const std::vector<Point> expected = {{300, 300}, {300, 350}, {350, 350}, {350, 400}, {300, 400}, {300, 450}};
    EXPECT_EQ(recalcPoints(matrixOk(RotateOp{90, Point{300, 300}}), in), expected);
    EXPECT_EQ(recalcPoints(TransformMatrix::identity(), in), in);
    const std::vector<Point> two = {{0, 0}, {1, 1}};
    EXPECT_EQ(recalcPoints(matrixOk(TranslateOp{10, -5}), two), (std::vector<Point>{{10, -5}, {11, -4}}));
}

TEST(SkewStrings, Shape) {
    EXPECT_EQ(skewMatrixForShape(matrixOk(ScaleOp{3, 1})), "-3, 0, 0, -1, 0, 0");
    EXPECT_EQ(skewMatrixForShape(TransformMatrix::identity()), "-1, 0, 0, -1, 0, 0");
    EXPECT_EQ(skewMatrixForShape(matrixOk(SkewXOp{10})), "-1, 0, -0.176327, -1, 0, 0");
    EXPECT_EQ(formatNumber(static_cast<double>(-oracle::tanDeg(10))), "-0.176327");
}

TEST(SkewStrings, Path) {
    EXPECT_EQ(skewMatrixForPath(matrixOk(RotateOp{20, std::nullopt})), "0.939693, -0.34202, 0.34202, 0.939693, 0, 0");
    EXPECT_EQ(skewMatrixForPath(TransformMatrix::identity()), "1, 0, 0, 1, 0, 0");
    EXPECT_EQ(skewMatrixForPath(matrixOk(ScaleOp{2, 2})), "2, 0, 0, 2, 0, 0");
}

TEST(MatrixFilter, Params) {
    const auto p = matrixFilterParams(matrixOk(RotateOp{20, std::nullopt}));
    EXPECT_EQ(formatNumber(p.m11, 2), "0.94");
    EXPECT_EQ(formatNumber(p.m12, 2), "-0.34");
    EXPECT_EQ(formatNumber(p.m21, 2), "0.34");
    EXPECT_EQ(formatNumber(p.m22, 2), "0.94");

    const auto id = matrixFilterParams(TransformMatrix::identity());
    EXPECT_EQ(id.m11, 1);
    EXPECT_EQ(id.m12, 0);
    EXPECT_EQ(id.m21, 0);
    EXPECT_EQ(id.m22, 1);

    const auto s = matrixFilterParams(matrixOk(ScaleOp{2, 3}));
    EXPECT_EQ(s.m11, 2);
    EXPECT_EQ(s.m12, 0);
    EXPECT_EQ(s.m21, 0);
    EXPECT_EQ(s.m22, 3);
}

TEST(MatrixFilter, FormatString) {
    EXPECT_EQ(formatMatrixFilter(MatrixFilterParams{}),
              "progid:DXImageTransform.Microsoft.Matrix(M11=1, M12=0, M21=0, M22=1, SizingMethod='auto expand')");
}

TEST(Offsets, PaperExamples) {
    Diagnostics diags;
    const auto scale = computeOffset(ScaleOp{3, 1}, ShapeBox{0, 150, 70, 50}, RootSize{800, 400},
                                     TransformStrategy::SkewShape, diags);
    ASSERT_TRUE(scale);
    EXPECT_EQ(scale->dx, 210);
    EXPECT_EQ(scale->dy, 50);

    const auto zero = computeOffset(RotateOp{0, std::nullopt}, ShapeBox{0, 0, 30, 40}, RootSize{100, 100},
                                    TransformStrategy::SkewShape, diags);
    ASSERT_TRUE(zero);
    EXPECT_EQ(zero->dx, -30);
    EXPECT_EQ(zero->dy, -40);

    const auto path = computeOffset(RotateOp{20, std::nullopt}, ShapeBox{}, RootSize{1000, 1500},
                                    TransformStrategy::SkewPath, diags);
    ASSERT_TRUE(path);
    const long double c = oracle::cosDeg(20);
    const long double s = oracle::sinDeg(20);
    EXPECT_NEAR(path->dx, static_cast<double>(c * 1000 - s * 1500 - 1000), 1e-9);
    EXPECT_NEAR(path->dy, static_cast<double>(s * 1000 + c * 1500 - 1500), 1e-9);
    EXPECT_NEAR(path->dx, -573.34, 0.005);
    EXPECT_NEAR(path->dy, 251.56, 0.005);
    EXPECT_TRUE(diags.empty());
}

TEST(Offsets, TranslateHasNoOffset) {
    Diagnostics diags;
    for (auto strategy : {TransformStrategy::SkewShape, TransformStrategy::SkewPath, TransformStrategy::MatrixFilter}) {
        const auto o = computeOffset(TranslateOp{5, 6}, ShapeBox{1, 2, 3, 4}, RootSize{10, 10}, strategy, diags);
        ASSERT_TRUE(o);
        EXPECT_EQ(o->dx, 0);
        EXPECT_EQ(o->dy, 0);
    }
}

TEST(Offsets, UnsupportedPairs) {
    Diagnostics diags;
    EXPECT_FALSE(computeOffset(MatrixOp{1, 0, 0, 1, 0, 0}, ShapeBox{}, RootSize{1, 1},
                               TransformStrategy::SkewShape, diags));
    EXPECT_FALSE(computeOffset(ScaleOp{2, 2}, ShapeBox{}, RootSize{1, 1}, TransformStrategy::RecalcPoints, diags));
    EXPECT_FALSE(computeOffset(ScaleOp{2, 2}, ShapeBox{}, RootSize{1, 1}, TransformStrategy::Distribute, diags));
    EXPECT_EQ(diags.size(), 3u);
    for (const auto& d : diags) {
        EXPECT_EQ(d.code, codes::UnsupportedTransform);
    }
}

TEST(Offsets, ComposedMatchesSingleRules) {
    Diagnostics diags;
    const ShapeBox box{12, 34, 56, 78};
    const RootSize root{640, 480};
    for (const TransformOp& op : {TransformOp{ScaleOp{2, 3}}, TransformOp{SkewXOp{25}}, TransformOp{SkewYOp{-15}}}) {
        const auto single = computeOffset(op, box, root, TransformStrategy::SkewShape, diags);
        const auto composed = computeComposedOffset(matrixOk(op), box, root, TransformStrategy::SkewShape);
        EXPECT_NEAR(single->dx, composed.dx, 1e-9) << transformName(op);
        EXPECT_NEAR(single->dy, composed.dy, 1e-9) << transformName(op);
    }
    const auto rotation = computeOffset(RotateOp{33, std::nullopt}, box, root, TransformStrategy::SkewPath, diags);
    const auto composed = computeComposedOffset(matrixOk(RotateOp{33, std::nullopt}), box, root,
                                                TransformStrategy::SkewPath);
    EXPECT_NEAR(rotation->dx, composed.dx, 1e-9);
    EXPECT_NEAR(rotation->dy, composed.dy, 1e-9);
}

TEST(Strategy, ElementKinds) {
    EXPECT_EQ(strategyFor(ElementKind::Rect), TransformStrategy::SkewShape);
    EXPECT_EQ(strategyFor(ElementKind::Circle), TransformStrategy::SkewShape);
    EXPECT_EQ(strategyFor(ElementKind::Ellipse), TransformStrategy::SkewShape);
    EXPECT_EQ(strategyFor(ElementKind::Path), TransformStrategy::SkewPath);
    EXPECT_EQ(strategyFor(ElementKind::Line), TransformStrategy::RecalcPoints);
    EXPECT_EQ(strategyFor(ElementKind::Polyline), TransformStrategy::RecalcPoints);
    EXPECT_EQ(strategyFor(ElementKind::Polygon), TransformStrategy::RecalcPoints);
    EXPECT_EQ(strategyFor(ElementKind::Text), TransformStrategy::MatrixFilter);
    EXPECT_EQ(strategyFor(ElementKind::TextPath), TransformStrategy::MatrixFilter);
    EXPECT_EQ(strategyFor(ElementKind::ForeignObject), TransformStrategy::MatrixFilter);
    EXPECT_EQ(strategyFor(ElementKind::G), TransformStrategy::Distribute);
    EXPECT_FALSE(strategyFor(ElementKind::Defs));
}

TEST(Support, Examples) {
    const TransformList mixed = {RotateOp{30, std::nullopt}, ScaleOp{2, 2}, TranslateOp{1, 1}};
    EXPECT_FALSE(checkSupport(TransformStrategy::RecalcPoints, mixed));
    const TransformList rotations = {RotateOp{10, std::nullopt}, RotateOp{20, std::nullopt}};
    const auto d = checkSupport(TransformStrategy::SkewShape, rotations);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->code, codes::UnsupportedTransform);
    for (auto strategy : {TransformStrategy::SkewShape, TransformStrategy::SkewPath, TransformStrategy::RecalcPoints,
                          TransformStrategy::MatrixFilter, TransformStrategy::Distribute}) {
        EXPECT_FALSE(checkSupport(strategy, {})) << strategyName(strategy);
        const TransformList one = {MatrixOp{1, 2, 3, 4, 5, 6}};
        EXPECT_FALSE(checkSupport(strategy, one)) << strategyName(strategy);
    }
}

} // namespace
} // namespace svg2vml
