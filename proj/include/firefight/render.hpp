#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "firefight/error.hpp"
#include "firefight/simulate.hpp"

namespace firefight {

enum class RenderFormat { None, Ascii, Svg };

inline std::optional<RenderFormat> parse_render_format(std::string_view s) {
    if (s == "none") {
        return RenderFormat::None;
    }
    if (s == "ascii") {
        return RenderFormat::Ascii;
    }
    if (s == "svg") {
        return RenderFormat::Svg;
    }
    return std::nullopt;
}

/// Smallest box covering every cell in the frames, padded by `margin`.
inline Box frame_bounds(const std::vector<Snapshot>& frames, int margin = 1,
                        std::optional<int> highway_row = std::nullopt) {
    Box box{{0, 0}, {0, 0}};
    bool first = true;
    auto cover = [&](Cell c) {
        if (first) {
            box = {c, c};
            first = false;
            return;
        }
        box.lo = {std::min(box.lo.x, c.x), std::min(box.lo.y, c.y)};
        box.hi = {std::max(box.hi.x, c.x), std::max(box.hi.y, c.y)};
    };
    for (const auto& f : frames) {
        for (const auto& [c, t] : f.burning) {
            cover(c);
        }
        for (const auto& [c, t] : f.protected_cells) {
            cover(c);
        }
    }
    if (highway_row) {
        cover({box.lo.x, *highway_row});
    }
    box.lo = {box.lo.x - margin, box.lo.y - margin};
    box.hi = {box.hi.x + margin, box.hi.y + margin};
    if (highway_row) {
        box.lo.y = std::max(box.lo.y, *highway_row);
    }
    return box;
}

namespace detail {

inline std::unordered_map<Cell, int, CellHash> index_cells(const std::vector<std::pair<Cell, int>>& cells) {
    std::unordered_map<Cell, int, CellHash> m;
    m.reserve(cells.size());
    for (const auto& [c, t] : cells) {
        m.emplace(c, t);
    }
    return m;
}

}  // namespace detail

/// `#` burning, `o` protected, `.` free, `=` highway. Top row is the largest y.
inline std::string render_ascii(const Snapshot& frame, const Box& box, std::optional<int> highway_row = std::nullopt) {
    auto burning = detail::index_cells(frame.burning);
    auto prot = detail::index_cells(frame.protected_cells);
    std::string out;
    out.reserve(static_cast<std::size_t>((box.hi.x - box.lo.x + 2) * (box.hi.y - box.lo.y + 1)));
    for (int y = box.hi.y; y >= box.lo.y; --y) {
        for (int x = box.lo.x; x <= box.hi.x; ++x) {
            Cell c{x, y};
            if (burning.count(c)) {
                out += '#';
            } else if (prot.count(c)) {
                out += 'o';
            } else if (highway_row && y == *highway_row) {
                out += '=';
            } else {
                out += '.';
            }
        }
        out += '\n';
    }
    return out;
}

/// Fire cells shaded from yellow (early) to dark red (late); protected cells
/// black with their protection step.
inline std::string render_svg(const Snapshot& frame, const Box& box, std::optional<int> highway_row = std::nullopt,
                              int cell_px = 12) {
    const int w = box.hi.x - box.lo.x + 1;
    const int h = box.hi.y - box.lo.y + 1;
    int latest = 1;
    for (const auto& [c, t] : frame.burning) {
        latest = std::max(latest, t);
    }
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * cell_px << "\" height=\"" << h * cell_px
       << "\" viewBox=\"0 0 " << w * cell_px << ' ' << h * cell_px << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    auto px = [&](Cell c) { return std::pair{(c.x - box.lo.x) * cell_px, (box.hi.y - c.y) * cell_px}; };
    if (highway_row && *highway_row >= box.lo.y && *highway_row <= box.hi.y) {
        auto [x, y] = px({box.lo.x, *highway_row});
        os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w * cell_px << "\" height=\"" << cell_px
           << "\" fill=\"#9e9e9e\"/>\n";
    }
    char colour[8];
    for (const auto& [c, t] : frame.burning) {
        double f = static_cast<double>(t) / static_cast<double>(latest);
        int r = static_cast<int>(255 - 115 * f);
        int g = static_cast<int>(220 * (1.0 - f));
        std::snprintf(colour, sizeof colour, "#%02x%02x%02x", r, g, 0);
        auto [x, y] = px(c);
        os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell_px << "\" height=\"" << cell_px
           << "\" fill=\"" << colour << "\"/>\n";
    }
    for (const auto& [c, t] : frame.protected_cells) {
        auto [x, y] = px(c);
        os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell_px << "\" height=\"" << cell_px
           << "\" fill=\"#000000\"/>\n";
        os << "<text x=\"" << x + cell_px / 2 << "\" y=\"" << y + cell_px * 3 / 4
           << "\" font-size=\"" << cell_px * 2 / 3 << "\" fill=\"#ffffff\" text-anchor=\"middle\">" << t
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

inline std::string frame_filename(int step, RenderFormat format) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%04d.%s", step, format == RenderFormat::Svg ? "svg" : "txt");
    return name;
}

/// Writes every frame into dir using one shared bounding box. Returns the paths written.
inline std::vector<std::filesystem::path> write_frames(const std::vector<Snapshot>& frames,
                                                       const std::filesystem::path& dir, RenderFormat format,
                                                       std::optional<int> highway_row = std::nullopt) {
    std::vector<std::filesystem::path> written;
    if (format == RenderFormat::None || frames.empty()) {
        return written;
    }
    std::filesystem::create_directories(dir);
    const Box box = frame_bounds(frames, 1, highway_row);
    for (const auto& f : frames) {
        auto path = dir / frame_filename(f.step, format);
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw IoError("cannot write " + path.string());
        }
        out << (format == RenderFormat::Svg ? render_svg(f, box, highway_row) : render_ascii(f, box, highway_row));
        if (!out) {
            throw IoError("cannot write " + path.string());
        }
        written.push_back(path);
    }
    return written;
}

}  // namespace firefight
