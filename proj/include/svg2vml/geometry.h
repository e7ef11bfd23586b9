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

namespace svg2vml {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

struct ViewBox {
    double minX = 0.0;
    double minY = 0.0;
    double width = 0.0;
    double height = 0.0;

    friend bool operator==(const ViewBox&, const ViewBox&) = default;
};

/// Element geometry consumed by the transform offset rules: x/y are the
/// left/top of the untransformed shape.
struct ShapeBox {
    double x = 0.0;
    double y = 0.0;
    double width = 0.0;
    double height = 0.0;
};

/// Width and height of the outermost svg element.
struct RootSize {
    double width = 0.0;
    double height = 0.0;
};

} // namespace svg2vml
