#pragma once

#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include "puzzlespread/packing.hpp"

namespace puzzlespread::svg {

/// One scatter point in data coordinates (cm^2 on both axes).
struct ScatterPoint {
    double x = 0.0;
    double y = 0.0;
    std::string label;
};

struct PlotSpec {
    int width_px = 800;
    int height_px = 600;
    std::vector<ScatterPoint> points;
    double reference_slope = std::numbers::sqrt3;
    std::string x_label = "Assembled area (cm²)";
    std::string y_label = "Unassembled area (cm²)";
};

/// Affine data->pixel mapping used by render_scatter; exposed so callers and
/// tests can locate data coordinates on the rendered canvas.
struct PlotMapping {
    double x_max = 0.0;  // data range is [0, x_max] x [0, y_max]
    double y_max = 0.0;
    double px_left = 0.0;
    double px_right = 0.0;
    double py_bottom = 0.0;
    double py_top = 0.0;

    double to_px_x(double x) const { return px_left + x / x_max * (px_right - px_left); }
    double to_px_y(double y) const { return py_bottom - y / y_max * (py_bottom - py_top); }
};

PlotMapping plot_mapping(const PlotSpec& spec);

/// Scatter of points with a dashed reference line through the origin.
/// Deterministic bytes for a fixed spec.
std::string render_scatter(const PlotSpec& spec);

/// A layout as rotated squares plus its dashed convex hull.
std::string render_layout(const pack::Layout& layout);

void write_file(const std::string& content, const std::filesystem::path& path);

}  // namespace puzzlespread::svg
