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

#include <svg2vml/path_data.h>

#include <cctype>

namespace svg2vml {

namespace {

struct CommandLetter {
    PathCommandKind kind;
    bool relative;
};

std::optional<CommandLetter> supportedLetter(char c) noexcept {
    switch (c) {
    case 'M': return CommandLetter{PathCommandKind::MoveTo, false};
    case 'm': return CommandLetter{PathCommandKind::MoveTo, true};
    case 'L': return CommandLetter{PathCommandKind::LineTo, false};
    case 'l': return CommandLetter{PathCommandKind::LineTo, true};
    case 'H': return CommandLetter{PathCommandKind::HorizontalTo, false};
    case 'h': return CommandLetter{PathCommandKind::HorizontalTo, true};
    case 'V': return CommandLetter{PathCommandKind::VerticalTo, false};
    case 'v': return CommandLetter{PathCommandKind::VerticalTo, true};
    case 'C': return CommandLetter{PathCommandKind::CubicTo, false};
    case 'c': return CommandLetter{PathCommandKind::CubicTo, true};
    case 'Z':
    case 'z': return CommandLetter{PathCommandKind::ClosePath, false};
    default: return std::nullopt;
    }
}

bool startsNumber(char c) noexcept {
    return (c >= '0' && c <= '9') || c == '-' || c == '+' || c == '.';
}

} // namespace

std::size_t coordinateCount(PathCommandKind kind) noexcept {
    switch (kind) {
    case PathCommandKind::MoveTo:
    case PathCommandKind::LineTo: return 2;
    case PathCommandKind::HorizontalTo:
    case PathCommandKind::VerticalTo: return 1;
    case PathCommandKind::CubicTo: return 6;
    case PathCommandKind::ClosePath: return 0;
    }
    return 0;
}

PathCommand PathCommand::moveTo(double x, double y, bool relative) {
    return {PathCommandKind::MoveTo, relative, {x, y}, false};
}

PathCommand PathCommand::lineTo(double x, double y, bool relative) {
    return {PathCommandKind::LineTo, relative, {x, y}, false};
}

PathCommand PathCommand::horizontalTo(double x, bool relative) {
    return {PathCommandKind::HorizontalTo, relative, {x}, false};
}

PathCommand PathCommand::verticalTo(double y, bool relative) {
    return {PathCommandKind::VerticalTo, relative, {y}, false};
}

PathCommand PathCommand::cubicTo(double x1, double y1, double x2, double y2, double x, double y, bool relative) {
    return {PathCommandKind::CubicTo, relative, {x1, y1, x2, y2, x, y}, false};
}

PathCommand PathCommand::closePath() {
    return {PathCommandKind::ClosePath, false, {}, false};
}

void PathCursor::advance(const PathCommand& command) noexcept {
    const double ox = command.relative ? current.x : 0.0;
    const double oy = command.relative ? current.y : 0.0;
    const auto& c = command.coords;
    switch (command.kind) {
    case PathCommandKind::MoveTo:
        current = {ox + c[0], oy + c[1]};
        subpathStart = current;
        break;
    case PathCommandKind::LineTo:
        current = {ox + c[0], oy + c[1]};
        break;
    case PathCommandKind::HorizontalTo:
        current.x = ox + c[0];
        break;
    case PathCommandKind::VerticalTo:
        current.y = oy + c[0];
        break;
    case PathCommandKind::CubicTo:
        current = {ox + c[4], oy + c[5]};
        break;
    case PathCommandKind::ClosePath:
        current = subpathStart;
        break;
    }
}

std::optional<std::vector<PathCommand>> parsePathData(std::string_view d, Diagnostics& diags, std::string location) {
    std::vector<PathCommand> out;
    std::size_t pos = 0;
    skipSpaces(d, pos);
    while (pos < d.size()) {
        const char letter = d[pos];
        const auto cmd = supportedLetter(letter);
        if (!cmd) {
            switch (letter) {
            case 'S': case 's': case 'Q': case 'q': case 'T': case 't':
                diags.error(codes::UnsupportedCommand,
                            std::string("path command '") + letter + "' is not supported", location);
                break;
            case 'A': case 'a':
                diags.error(codes::FutureWorkArc, std::string("arc command '") + letter + "' is not supported",
                            location);
                break;
            default:
                if (startsNumber(letter)) {
                    diags.error(codes::InvalidPath, "path data has coordinates without a command", location);
                }
                else {
                    diags.error(codes::InvalidPath, std::string("unknown path command '") + letter + "'", location);
                }
            }
            return std::nullopt;
        }
        if (out.empty() && cmd->kind != PathCommandKind::MoveTo) {
            diags.error(codes::InvalidPath, "path data must begin with a moveto", location);
            return std::nullopt;
        }
        ++pos;
        skipSpaces(d, pos);
        if (cmd->kind == PathCommandKind::ClosePath) {
            out.push_back(PathCommand::closePath());
            continue;
        }
        const std::size_t arity = coordinateCount(cmd->kind);
        bool first = true;
        do {
            PathCommand c;
            c.kind = cmd->kind;
            c.relative = cmd->relative;
            c.implicit = !first;
            if (!first && cmd->kind == PathCommandKind::MoveTo) {
                c.kind = PathCommandKind::LineTo;
            }
            for (std::size_t i = 0; i < arity; ++i) {
                if (i > 0) {
                    skipCommaSpaces(d, pos);
                }
                auto value = scanNumber(d, pos);
                if (!value) {
                    diags.error(codes::InvalidPath,
                                std::string("command '") + letter + "' expects " + std::to_string(arity) +
                                    " coordinates",
                                location);
                    return std::nullopt;
                }
                c.coords.push_back(*value);
            }
            out.push_back(std::move(c));
            first = false;
            skipCommaSpaces(d, pos);
        } while (pos < d.size() && startsNumber(d[pos]));
    }
    return out;
}

std::vector<PathCommand> toAbsolute(const std::vector<PathCommand>& commands) {
    std::vector<PathCommand> out;
    out.reserve(commands.size());
    PathCursor cursor;
    for (const auto& c : commands) {
        const Point before = cursor.current;
        cursor.advance(c);
        PathCommand abs;
        abs.implicit = c.implicit;
        switch (c.kind) {
        case PathCommandKind::MoveTo:
        case PathCommandKind::LineTo:
        case PathCommandKind::HorizontalTo:
        case PathCommandKind::VerticalTo:
            abs.kind = c.kind == PathCommandKind::MoveTo ? PathCommandKind::MoveTo : PathCommandKind::LineTo;
            abs.coords = {cursor.current.x, cursor.current.y};
            break;
        case PathCommandKind::CubicTo: {
            const double ox = c.relative ? before.x : 0.0;
            const double oy = c.relative ? before.y : 0.0;
            abs.kind = PathCommandKind::CubicTo;
            abs.coords = {ox + c.coords[0], oy + c.coords[1], ox + c.coords[2],
                          oy + c.coords[3], ox + c.coords[4], oy + c.coords[5]};
            break;
        }
        case PathCommandKind::ClosePath:
            abs.kind = PathCommandKind::ClosePath;
            break;
        }
        out.push_back(std::move(abs));
    }
    return out;
}

std::vector<PathCommand> mapPathPoints(const std::vector<PathCommand>& absolute,
                                       const std::function<Point(Point)>& map) {
    std::vector<PathCommand> out = toAbsolute(absolute);
    for (auto& c : out) {
        for (std::size_t i = 0; i + 1 < c.coords.size(); i += 2) {
            const Point p = map({c.coords[i], c.coords[i + 1]});
            c.coords[i] = p.x;
            c.coords[i + 1] = p.y;
        }
    }
    return out;
}

std::string emitVmlPath(const std::vector<PathCommand>& commands, int precision) {
    const std::vector<PathCommand> absolute = toAbsolute(commands);
    std::string out;
    auto append = [&](std::string_view token) {
        if (!out.empty()) {
            out += ' ';
        }
        out += token;
    };
    for (const auto& c : absolute) {
        if (c.kind == PathCommandKind::ClosePath) {
            append("x");
            continue;
        }
        append(c.kind == PathCommandKind::MoveTo ? "m" : c.kind == PathCommandKind::LineTo ? "l" : "c");
        std::string coords;
        for (std::size_t i = 0; i < c.coords.size(); ++i) {
            if (i > 0) {
                coords += ',';
            }
            coords += formatNumber(c.coords[i], precision);
        }
        out += ' ';
        out += coords;
    }
    append("e");
    return out;
}

} // namespace svg2vml
