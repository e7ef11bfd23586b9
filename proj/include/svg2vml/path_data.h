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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace svg2vml {

enum class PathCommandKind { MoveTo, LineTo, HorizontalTo, VerticalTo, CubicTo, ClosePath };

/// Number of coordinates carried by one command of `kind`.
std::size_t coordinateCount(PathCommandKind kind) noexcept;

/// One segment of path data.
///
/// `implicit` marks a coordinate group that followed an earlier group
/// without repeating the command letter ("M 0 0 10 10" carries an implicit
/// LineTo). ClosePath is never relative.
struct PathCommand {
    PathCommandKind kind = PathCommandKind::MoveTo;
    bool relative = false;
    std::vector<double> coords;
    bool implicit = false;

    static PathCommand moveTo(double x, double y, bool relative = false);
    static PathCommand lineTo(double x, double y, bool relative = false);
    static PathCommand horizontalTo(double x, bool relative = false);
    static PathCommand verticalTo(double y, bool relative = false);
    static PathCommand cubicTo(double x1, double y1, double x2, double y2, double x, double y, bool relative = false);
    static PathCommand closePath();

    /// Equality ignores `implicit`.
    friend bool operator==(const PathCommand& a, const PathCommand& b) {
        return a.kind == b.kind && a.relative == b.relative && a.coords == b.coords;
    }
};

struct PathCursor {
    Point current;
    Point subpathStart;

    /// Moves the cursor past `command`, which may be relative.
    void advance(const PathCommand& command) noexcept;
};

/// Parses a `d` attribute. Smooth and quadratic curves are rejected with
/// UNSUPPORTED_COMMAND and arcs with FUTURE_WORK_ARC.
std::optional<std::vector<PathCommand>> parsePathData(std::string_view d, Diagnostics& diags,
                                                      std::string location = {});

/// Rewrites every command in absolute form; H and V become LineTo.
std::vector<PathCommand> toAbsolute(const std::vector<PathCommand>& commands);

/// Maps every coordinate pair of absolute MoveTo/LineTo/CubicTo commands.
std::vector<PathCommand> mapPathPoints(const std::vector<PathCommand>& absolute,
                                       const std::function<Point(Point)>& map);

/// VML path string: "m x,y", "l x,y", "c x1,y1,x2,y2,x,y", "x" for a
/// close, and a single trailing "e".
std::string emitVmlPath(const std::vector<PathCommand>& commands, int precision = kDefaultPrecision);

} // namespace svg2vml
