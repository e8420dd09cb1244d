#include "puzzlespread/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "puzzlespread/errors.hpp"
#include "puzzlespread/geometry.hpp"

namespace puzzlespread::svg {

namespace {

constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 20.0;
constexpr double kMarginBottom = 55.0;

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

// Largest step from {1,2,5}*10^k giving at least 4 intervals over `range`.
double nice_tick_step(double range) {
    const double raw = range / 4.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (const double m : {5.0, 2.0, 1.0}) {
        if (m * mag <= raw) return m * mag;
    }
    return mag;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Trim trailing zeros so tick labels read "500" not "500.000000".
std::string num_label(double v) {
    std::string s = fmt("%.6f", v);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

}  // namespace

PlotMapping plot_mapping(const PlotSpec& spec) {
    if (spec.width_px <= 0 || spec.height_px <= 0) {
        throw std::domain_error("plot: canvas dimensions must be positive");
    }
    if (spec.points.empty()) {
        throw std::domain_error("plot: need at least one point");
    }
    double x_max = 0.0;
    double y_max = 0.0;
    for (const ScatterPoint& p : spec.points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || p.x < 0.0 || p.y < 0.0) {
            throw std::domain_error("plot: points must be finite and non-negative");
        }
        x_max = std::max(x_max, p.x);
        y_max = std::max(y_max, p.y);
    }
    if (x_max == 0.0) x_max = 1.0;
    y_max = std::max(y_max, spec.reference_slope * x_max);
    if (y_max == 0.0) y_max = 1.0;

    PlotMapping m;
    m.x_max = x_max * 1.05;
    m.y_max = y_max * 1.05;
    m.px_left = kMarginLeft;
    m.px_right = static_cast<double>(spec.width_px) - kMarginRight;
    m.py_bottom = static_cast<double>(spec.height_px) - kMarginBottom;
    m.py_top = kMarginTop;
    return m;
}

std::string render_scatter(const PlotSpec& spec) {
    const PlotMapping m = plot_mapping(spec);

    std::string out = fmt(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
        "viewBox=\"0 0 %d %d\">\n",
        spec.width_px, spec.height_px, spec.width_px, spec.height_px);
    out += fmt("<rect width=\"%d\" height=\"%d\" fill=\"white\"/>\n", spec.width_px,
               spec.height_px);

    // axes
    out += fmt(
        "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n"
        "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
        m.px_left, m.py_bottom, m.px_right, m.py_bottom, m.px_left, m.py_bottom, m.px_left,
        m.py_top);

    // ticks and grid
    const double xstep = nice_tick_step(m.x_max);
    for (double t = 0.0; t <= m.x_max * (1.0 + 1e-12); t += xstep) {
        const double px = m.to_px_x(t);
        out += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                   px, m.py_bottom, px, m.py_bottom + 5.0);
        out += fmt(
            "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"12\" "
            "text-anchor=\"middle\">%s</text>\n",
            px, m.py_bottom + 20.0, num_label(t).c_str());
    }
    const double ystep = nice_tick_step(m.y_max);
    for (double t = 0.0; t <= m.y_max * (1.0 + 1e-12); t += ystep) {
        const double py = m.to_px_y(t);
        out += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                   m.px_left - 5.0, py, m.px_left, py);
        out += fmt(
            "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"12\" "
            "text-anchor=\"end\">%s</text>\n",
            m.px_left - 8.0, py + 4.0, num_label(t).c_str());
    }

    // axis labels
    out += fmt(
        "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"14\" "
        "text-anchor=\"middle\">%s</text>\n",
        (m.px_left + m.px_right) / 2.0, static_cast<double>(spec.height_px) - 12.0,
        xml_escape(spec.x_label).c_str());
    out += fmt(
        "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"14\" "
        "text-anchor=\"middle\" transform=\"rotate(-90 %.2f %.2f)\">%s</text>\n",
        18.0, (m.py_top + m.py_bottom) / 2.0, 18.0, (m.py_top + m.py_bottom) / 2.0,
        xml_escape(spec.y_label).c_str());

    // dashed reference line through the origin
    out += fmt(
        "<line class=\"ref\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\" "
        "stroke-dasharray=\"6 4\"/>\n",
        m.to_px_x(0.0), m.to_px_y(0.0), m.to_px_x(m.x_max),
        m.to_px_y(spec.reference_slope * m.x_max));

    for (const ScatterPoint& p : spec.points) {
        out += fmt("<circle class=\"pt\" cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"#1f77b4\">",
                   m.to_px_x(p.x), m.to_px_y(p.y));
        out += "<title>" + xml_escape(p.label) + "</title></circle>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string render_layout(const pack::Layout& layout) {
    if (layout.pieces.empty()) {
        throw std::domain_error("render_layout: empty layout");
    }
    std::vector<geom::Vec2> corners;
    corners.reserve(layout.pieces.size() * 4);
    for (const geom::OrientedSquare& s : layout.pieces) {
        for (const geom::Vec2& c : s.corners()) corners.push_back(c);
    }
    double min_x = corners[0].x, max_x = corners[0].x;
    double min_y = corners[0].y, max_y = corners[0].y;
    for (const geom::Vec2& c : corners) {
        min_x = std::min(min_x, c.x);
        max_x = std::max(max_x, c.x);
        min_y = std::min(min_y, c.y);
        max_y = std::max(max_y, c.y);
    }
    const double margin = layout.piece_edge;
    const double w = (max_x - min_x) + 2.0 * margin;
    const double h = (max_y - min_y) + 2.0 * margin;

    std::string out = fmt(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"%.0f\" "
        "viewBox=\"%.3f %.3f %.3f %.3f\">\n",
        std::max(1.0, 800.0 * h / w), min_x - margin, min_y - margin, w, h);
    out += fmt("<desc>%s layout, %zu pieces, edge %.6g cm, seed %llu</desc>\n",
               std::string(pack::strategy_name(layout.strategy)).c_str(), layout.pieces.size(),
               layout.piece_edge, static_cast<unsigned long long>(layout.seed));

    const double stroke = layout.piece_edge * 0.04;
    for (const geom::OrientedSquare& s : layout.pieces) {
        const double half = s.edge / 2.0;
        out += fmt(
            "<rect x=\"%.4f\" y=\"%.4f\" width=\"%.4f\" height=\"%.4f\" "
            "transform=\"rotate(%.4f %.4f %.4f)\" fill=\"#9ecae1\" stroke=\"#31708f\" "
            "stroke-width=\"%.4f\"/>\n",
            s.center.x - half, s.center.y - half, s.edge, s.edge,
            s.rotation * 180.0 / std::numbers::pi, s.center.x, s.center.y, stroke);
    }

    if (corners.size() >= 3) {
        const geom::Polygon hull = geom::convex_hull(corners);
        std::string pts;
        for (const geom::Vec2& v : hull.vertices) {
            pts += fmt("%.4f,%.4f ", v.x, v.y);
        }
        if (!pts.empty()) pts.pop_back();
        out += fmt(
            "<polygon points=\"%s\" fill=\"none\" stroke=\"#333333\" stroke-width=\"%.4f\" "
            "stroke-dasharray=\"%.4f %.4f\"/>\n",
            pts.c_str(), stroke, layout.piece_edge * 0.4, layout.piece_edge * 0.25);
    }
    out += "</svg>\n";
    return out;
}

void write_file(const std::string& content, const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open for writing: " + path.string());
    file << content;
    if (!file.good()) throw IoError("write failed: " + path.string());
}

}  // namespace puzzlespread::svg
