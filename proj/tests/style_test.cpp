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
#include <svg2vml/style.h>

#include <gtest/gtest.h>

namespace svg2vml {
namespace {

SvgDocument parseOk(std::string_view text) {
    Diagnostics diags;
    auto doc = parseSvg(text, diags);
    EXPECT_TRUE(doc);
    return *doc;
}

std::string strokeMarkup(const AttributeTable& attrs) {
    Diagnostics diags;
    auto paint = mapStroke(attrs, diags);
    EXPECT_TRUE(diags.empty());
    return paint.child ? serializeNode(*paint.child, false) : std::string();
}

// One row per SVG stroke attribute.
TEST(Stroke, SixRowTable) {
    EXPECT_EQ(strokeMarkup({{"stroke", "blue"}}), "<v:stroke color=\"blue\"/>");
    EXPECT_EQ(strokeMarkup({{"stroke-width", "2"}}), "<v:stroke weight=\"2\"/>");
    EXPECT_EQ(strokeMarkup({{"stroke-linecap", "round"}}), "<v:stroke endcap=\"round\"/>");
    EXPECT_EQ(strokeMarkup({{"stroke-linejoin", "bevel"}}), "<v:stroke joinstyle=\"bevel\"/>");
    EXPECT_EQ(strokeMarkup({{"stroke-miterlimit", "4"}}), "<v:stroke miterlimit=\"4\"/>");
    EXPECT_EQ(strokeMarkup({{"stroke-opacity", "1"}}), "<v:stroke opacity=\"1\"/>");
}

TEST(Stroke, SpecExamples) {
    EXPECT_EQ(strokeMarkup({{"stroke", "blue"}, {"stroke-width", "2"}}), "<v:stroke color=\"blue\" weight=\"2\"/>");
    EXPECT_EQ(strokeMarkup({{"stroke-linejoin", "miter"}, {"stroke-miterlimit", "4"}}),
              "<v:stroke joinstyle=\"miter\" miterlimit=\"4\"/>");
}

TEST(Stroke, FixedAttributeOrderAndSingleChild) {
    EXPECT_EQ(strokeMarkup({{"stroke-opacity", "0.5"},
                            {"stroke-miterlimit", "3"},
                            {"stroke-linejoin", "round"},
                            {"stroke-linecap", "square"},
                            {"stroke-width", "10px"},
                            {"stroke", "#123456"}}),
              "<v:stroke color=\"#123456\" weight=\"10\" endcap=\"square\" joinstyle=\"round\" miterlimit=\"3\" "
              "opacity=\"0.5\"/>");
}

TEST(Stroke, ButtBecomesFlat) {
    EXPECT_EQ(strokeMarkup({{"stroke-linecap", "butt"}}), "<v:stroke endcap=\"flat\"/>");
}

TEST(Stroke, UnknownTokenPassesThroughWithWarning) {
    Diagnostics diags;
    auto spec = resolveStroke({{"stroke-linejoin", "arcs"}}, diags);
    ASSERT_TRUE(spec);
    EXPECT_EQ(spec->joinstyle, "arcs");
    EXPECT_TRUE(diags.contains(codes::UnknownToken));
    EXPECT_FALSE(diags.hasErrors());
}

TEST(Stroke, NoneDisablesStroke) {
    Diagnostics diags;
    auto paint = mapStroke({{"stroke", "none"}, {"stroke-width", "3"}}, diags);
    EXPECT_FALSE(paint.child);
    EXPECT_EQ(paint.hostAttributes, (AttributeTable{{"stroked", "f"}}));
}

TEST(Stroke, AbsentAttributesYieldNothing) {
    Diagnostics diags;
    auto paint = mapStroke({{"fill", "red"}}, diags);
    EXPECT_FALSE(paint.child);
    EXPECT_TRUE(paint.hostAttributes.empty());
    EXPECT_FALSE(isStrokeAttribute("fill"));
    EXPECT_TRUE(isStrokeAttribute("stroke-miterlimit"));
}

TEST(Stroke, UnitsAndNegativeWidth) {
    Diagnostics diags;
    resolveStroke({{"stroke-width", "2em"}}, diags);
    EXPECT_TRUE(diags.contains(codes::UnsupportedUnit));
    Diagnostics negative;
    auto spec = resolveStroke({{"stroke-width", "-1"}}, negative);
    EXPECT_TRUE(negative.hasErrors());
    EXPECT_FALSE(spec->weight);
}

TEST(Fill, SolidAndNone) {
    const auto doc = parseOk("<svg/>");
    Diagnostics diags;
    auto red = mapFill({{"fill", "red"}}, doc, diags);
    ASSERT_TRUE(red.child);
    EXPECT_EQ(serializeNode(*red.child, false), "<v:fill color=\"red\"/>");
    auto none = mapFill({{"fill", "none"}}, doc, diags);
    EXPECT_FALSE(none.child);
    EXPECT_EQ(none.hostAttributes, (AttributeTable{{"filled", "f"}}));
    auto absent = mapFill({}, doc, diags);
    EXPECT_FALSE(absent.child);
    EXPECT_TRUE(absent.hostAttributes.empty());
    EXPECT_TRUE(diags.empty());
}

TEST(Fill, HorizontalGradient) {
    const auto doc = parseOk(R"(<svg><linearGradient id="grad1" x1="0%" y1="0%" x2="100%" y2="0%">
        <stop offset="0%" stop-color="red"/><stop offset="100%" stop-color="blue"/></linearGradient></svg>)");
    Diagnostics diags;
    auto paint = mapFill({{"fill", "url(#grad1)"}}, doc, diags);
    ASSERT_TRUE(paint.child);
    EXPECT_EQ(serializeNode(*paint.child, false),
              "<v:fill type=\"gradient\" color=\"red\" color2=\"blue\" angle=\"90\"/>");
    EXPECT_TRUE(diags.empty());
}

TEST(Fill, DanglingReference) {
    const auto doc = parseOk("<svg/>");
    Diagnostics diags;
    auto paint = mapFill({{"fill", "url(#nope)"}}, doc, diags);
    EXPECT_FALSE(paint.child);
    EXPECT_TRUE(diags.contains(codes::DanglingRef));

    Diagnostics withFallback;
    auto fallback = mapFill({{"fill", "url(#nope) green"}}, doc, withFallback);
    ASSERT_TRUE(fallback.child);
    EXPECT_EQ(*fallback.child->attributes.find("color"), "green");
}

TEST(Fill, NonGradientTarget) {
    const auto doc = parseOk("<svg><rect id='r'/></svg>");
    Diagnostics diags;
    mapFill({{"fill", "url(#r)"}}, doc, diags);
    EXPECT_TRUE(diags.contains(codes::UnsupportedGradient));
}

TEST(Fill, FillOpacityWarns) {
    const auto doc = parseOk("<svg/>");
    Diagnostics diags;
    mapFill({{"fill", "red"}, {"fill-opacity", "0.5"}}, doc, diags);
    EXPECT_TRUE(diags.contains(codes::UnsupportedAttribute));
    EXPECT_FALSE(diags.hasErrors());
}

std::optional<GradientSpec> gradientOf(std::string_view markup, Diagnostics& diags) {
    const auto doc = parseOk(std::string("<svg>") + std::string(markup) + "</svg>");
    return resolveGradient(doc.root().children.at(0), diags);
}

TEST(Gradient, Classification) {
    Diagnostics diags;
    auto horizontal = gradientOf(R"(<linearGradient y1="0.3" y2="0.3"><stop offset="0%" stop-color="red"/>
        <stop offset="100%" stop-color="blue"/></linearGradient>)", diags);
    ASSERT_TRUE(horizontal);
    EXPECT_EQ(horizontal->direction, GradientDirection::Horizontal);
    EXPECT_EQ(horizontal->colorStart, "red");
    EXPECT_EQ(horizontal->colorEnd, "blue");

    auto vertical = gradientOf(R"(<linearGradient x1="0" x2="0" y1="0" y2="1"><stop offset="0" stop-color="red"/>
        <stop offset="1" stop-color="blue"/></linearGradient>)", diags);
    ASSERT_TRUE(vertical);
    EXPECT_EQ(vertical->direction, GradientDirection::Vertical);

    auto uniform = gradientOf(R"(<linearGradient><stop offset="0%" stop-color="black"/>
        <stop offset="100%" stop-color="black"/></linearGradient>)", diags);
    ASSERT_TRUE(uniform);
    EXPECT_EQ(uniform->colorStart, "black");
    EXPECT_EQ(uniform->colorEnd, "black");
    EXPECT_TRUE(diags.empty());
}

TEST(Gradient, ReversedVectorSwapsColors) {
    Diagnostics diags;
    auto g = gradientOf(R"(<linearGradient x1="100%" x2="0%"><stop offset="0%" stop-color="red"/>
        <stop offset="100%" stop-color="blue"/></linearGradient>)", diags);
    ASSERT_TRUE(g);
    EXPECT_EQ(g->colorStart, "blue");
    EXPECT_EQ(g->colorEnd, "red");
}

TEST(Gradient, Rejections) {
    for (const char* markup : {
             R"(<linearGradient><stop offset="0%"/><stop offset="50%"/><stop offset="100%"/></linearGradient>)",
             R"(<linearGradient x1="0" y1="0" x2="1" y2="1"><stop offset="0"/><stop offset="1"/></linearGradient>)",
             R"(<linearGradient><stop offset="10%"/><stop offset="100%"/></linearGradient>)",
             R"(<linearGradient><stop offset="0%"/></linearGradient>)",
         }) {
        Diagnostics diags;
        EXPECT_FALSE(gradientOf(markup, diags)) << markup;
        EXPECT_TRUE(diags.contains(codes::UnsupportedGradient)) << markup;
    }
}

TEST(Opacity, Scaling) {
    Diagnostics diags;
    EXPECT_EQ(mapOpacity(0.5, diags), 50);
    EXPECT_EQ(mapOpacity(0, diags), 0);
    EXPECT_EQ(mapOpacity(1, diags), 100);
    EXPECT_TRUE(diags.empty());
    EXPECT_EQ(mapOpacity(1.5, diags), 100);
    EXPECT_EQ(mapOpacity(-0.2, diags), 0);
    EXPECT_TRUE(diags.contains(codes::OpacityRange));
}

TEST(Opacity, MonotoneAndLinear) {
    Diagnostics diags;
    double previous = -1;
    for (int i = 0; i <= 100; ++i) {
        const double v = mapOpacity(i / 100.0, diags);
        EXPECT_GT(v, previous);
        EXPECT_NEAR(v, i, 1e-9);
        previous = v;
    }
}

} // namespace
} // namespace svg2vml
