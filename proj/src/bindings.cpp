#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "puzzlespread/empirical.hpp"
#include "puzzlespread/errors.hpp"
#include "puzzlespread/geometry.hpp"
#include "puzzlespread/model.hpp"
#include "puzzlespread/packing.hpp"
#include "puzzlespread/svg.hpp"
#include "puzzlespread/version.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

using namespace puzzlespread;

namespace {

std::vector<geom::Vec2> to_points(const std::vector<std::pair<double, double>>& pts) {
    std::vector<geom::Vec2> out;
    out.reserve(pts.size());
    for (const auto& [x, y] : pts) out.push_back({x, y});
    return out;
}

void bind_geometry(py::module_& m) {
    py::class_<geom::Vec2>(m, "Point2")
        .def(py::init<double, double>(), "x"_a = 0.0, "y"_a = 0.0)
        .def_readwrite("x", &geom::Vec2::x)
        .def_readwrite("y", &geom::Vec2::y)
        .def("__repr__", [](const geom::Vec2& v) {
            return "Point2(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ")";
        });

    py::class_<geom::OrientedSquare>(m, "OrientedSquare")
        .def(py::init(&geom::OrientedSquare::make), "center"_a, "edge"_a, "rotation"_a = 0.0)
        .def_readonly("center", &geom::OrientedSquare::center)
        .def_readonly("edge", &geom::OrientedSquare::edge)
        .def_readonly("rotation", &geom::OrientedSquare::rotation)
        .def("corners",
             [](const geom::OrientedSquare& s) {
                 const auto c = s.corners();
                 return std::vector<geom::Vec2>(c.begin(), c.end());
             })
        .def("diagonal", &geom::OrientedSquare::diagonal);

    py::class_<geom::Polygon>(m, "Polygon")
        .def_readonly("vertices", &geom::Polygon::vertices);

    py::class_<geom::SpreadExtents>(m, "SpreadExtents")
        .def_readonly("major", &geom::SpreadExtents::major)
        .def_readonly("minor", &geom::SpreadExtents::minor)
        .def_readonly("major_axis", &geom::SpreadExtents::major_axis);

    m.def("squares_overlap", &geom::squares_overlap, "a"_a, "b"_a);
    m.def("squares_overlap_margin", &geom::squares_overlap_margin, "a"_a, "b"_a);
    m.def(
        "convex_hull",
        [](const std::vector<std::pair<double, double>>& pts) {
            return geom::convex_hull(to_points(pts));
        },
        "points"_a);
    m.def("polygon_area", &geom::polygon_area, "polygon"_a);
    m.def(
        "principal_extents",
        [](const std::vector<std::pair<double, double>>& pts, double pad) {
            return geom::principal_extents(to_points(pts), pad);
        },
        "points"_a, "pad"_a = 0.0);
    m.def("ellipse_area", &geom::ellipse_area, "x"_a, "y"_a);
    m.def("rectangle_area", &geom::rectangle_area, "x"_a, "y"_a);
}

void bind_model(py::module_& m) {
    m.attr("SQRT3") = model::kSqrt3;

    py::class_<model::PuzzleSpec>(m, "PuzzleSpec")
        .def(py::init(&model::PuzzleSpec::make), "pieces"_a, "area"_a = py::none(),
             "width"_a = py::none(), "height"_a = py::none())
        .def_readonly("pieces", &model::PuzzleSpec::pieces)
        .def_readonly("assembled_width", &model::PuzzleSpec::assembled_width)
        .def_readonly("assembled_height", &model::PuzzleSpec::assembled_height)
        .def_readonly("assembled_area", &model::PuzzleSpec::assembled_area);

    py::class_<model::ModelBreakdown>(m, "ModelBreakdown")
        .def_readonly("piece_area", &model::ModelBreakdown::piece_area)
        .def_readonly("piece_edge", &model::ModelBreakdown::piece_edge)
        .def_readonly("circle_diameter", &model::ModelBreakdown::circle_diameter)
        .def_readonly("hexagon_area", &model::ModelBreakdown::hexagon_area)
        .def_readonly("per_piece_spread_area", &model::ModelBreakdown::per_piece_spread_area)
        .def_readonly("unassembled_area", &model::ModelBreakdown::unassembled_area);

    py::class_<model::TableFit>(m, "TableFit")
        .def_readonly("fits", &model::TableFit::fits)
        .def_readonly("margin", &model::TableFit::margin);

    m.def("piece_area", &model::piece_area, "assembled_area"_a, "pieces"_a);
    m.def("circumscribed_diameter", &model::circumscribed_diameter, "assembled_area"_a,
          "pieces"_a);
    m.def("hexagon_area", &model::hexagon_area, "diameter"_a);
    m.def("per_piece_spread_area", &model::per_piece_spread_area, "diameter"_a);
    m.def("unassembled_area", &model::unassembled_area, "assembled_area"_a,
          "sqrt(3) * assembled_area; piece count cancels and is not a parameter");
    m.def("model_breakdown", &model::model_breakdown, "spec"_a);
    m.def("table_fits", &model::table_fits, "spec"_a, "table_width"_a, "table_height"_a);
}

void bind_packing(py::module_& m) {
    py::enum_<pack::Strategy>(m, "Strategy")
        .value("HEX", pack::Strategy::kHex)
        .value("GREEDY_RADIAL", pack::Strategy::kGreedyRadial)
        .value("GRID", pack::Strategy::kGrid);

    py::class_<pack::SimParams>(m, "SimParams")
        .def(py::init<>())
        .def_readwrite("strategy", &pack::SimParams::strategy)
        .def_readwrite("seed", &pack::SimParams::seed)
        .def_readwrite("candidate_angles", &pack::SimParams::candidate_angles)
        .def_readwrite("radial_step", &pack::SimParams::radial_step)
        .def_readwrite("jitter", &pack::SimParams::jitter);

    py::class_<pack::Layout>(m, "Layout")
        .def_readonly("pieces", &pack::Layout::pieces)
        .def_readonly("piece_edge", &pack::Layout::piece_edge)
        .def_readonly("strategy", &pack::Layout::strategy)
        .def_readonly("seed", &pack::Layout::seed);

    py::class_<pack::SimResult>(m, "SimResult")
        .def_readonly("hull_area", &pack::SimResult::hull_area)
        .def_readonly("extents", &pack::SimResult::extents)
        .def_readonly("ellipse_area", &pack::SimResult::ellipse_area)
        .def_readonly("spread_ratio_hull", &pack::SimResult::spread_ratio_hull)
        .def_readonly("spread_ratio_ellipse", &pack::SimResult::spread_ratio_ellipse)
        .def_readonly("pieces", &pack::SimResult::pieces)
        .def_readonly("seed", &pack::SimResult::seed);

    py::class_<pack::Stats>(m, "Stats")
        .def_readonly("mean", &pack::Stats::mean)
        .def_readonly("stddev", &pack::Stats::stddev)
        .def_readonly("min", &pack::Stats::min)
        .def_readonly("max", &pack::Stats::max);

    py::class_<pack::RatioStats>(m, "RatioStats")
        .def_readonly("hull", &pack::RatioStats::hull)
        .def_readonly("ellipse", &pack::RatioStats::ellipse);

    m.def("hex_layout", &pack::hex_layout, "pieces"_a, "diameter"_a, "jitter"_a = 0.0,
          "seed"_a = 0);
    m.def("pack_random", &pack::pack_random, "pieces"_a, "edge"_a, "params"_a = pack::SimParams{});
    m.def("pack_grid", &pack::pack_grid, "pieces"_a, "edge"_a, "gap"_a = 0.0);
    m.def("measure_layout", &pack::measure_layout, "layout"_a, "assembled_area"_a);
    m.def(
        "ratio_statistics",
        [](const std::vector<pack::SimResult>& results) {
            return pack::ratio_statistics(results);
        },
        "results"_a);
    m.def("layout_to_csv", &pack::layout_to_csv, "layout"_a);
    m.def("write_layout_csv", &pack::write_layout_csv, "layout"_a, "path"_a);
}

void bind_empirical(py::module_& m) {
    py::enum_<empirical::SpreadShape>(m, "SpreadShape")
        .value("ELLIPSE", empirical::SpreadShape::kEllipse)
        .value("RECTANGLE", empirical::SpreadShape::kRectangle);

    py::class_<empirical::MeasurementRecord>(m, "MeasurementRecord")
        .def(py::init<>())
        .def_readwrite("pieces", &empirical::MeasurementRecord::pieces)
        .def_readwrite("x_a", &empirical::MeasurementRecord::x_a)
        .def_readwrite("y_a", &empirical::MeasurementRecord::y_a)
        .def_readwrite("x_s", &empirical::MeasurementRecord::x_s)
        .def_readwrite("y_s", &empirical::MeasurementRecord::y_s)
        .def_readwrite("spread_shape", &empirical::MeasurementRecord::spread_shape)
        .def_readwrite("sigma_a", &empirical::MeasurementRecord::sigma_a)
        .def_readwrite("sigma_s", &empirical::MeasurementRecord::sigma_s);

    py::class_<empirical::Estimate>(m, "Estimate")
        .def_readonly("value", &empirical::Estimate::value)
        .def_readonly("sigma", &empirical::Estimate::sigma);

    py::class_<empirical::SlopeFit>(m, "SlopeFit")
        .def_readonly("value", &empirical::SlopeFit::value)
        .def_readonly("std_error", &empirical::SlopeFit::std_error);

    py::class_<empirical::ReportRow>(m, "ReportRow")
        .def_readonly("record", &empirical::ReportRow::record)
        .def_readonly("assembled", &empirical::ReportRow::assembled)
        .def_readonly("unassembled", &empirical::ReportRow::unassembled)
        .def_readonly("ratio", &empirical::ReportRow::ratio)
        .def_readonly("predicted", &empirical::ReportRow::predicted)
        .def_readonly("residual", &empirical::ReportRow::residual);

    py::class_<empirical::ValidationReport>(m, "ValidationReport")
        .def_readonly("rows", &empirical::ValidationReport::rows)
        .def_readonly("slope", &empirical::ValidationReport::slope)
        .def_readonly("sqrt3", &empirical::ValidationReport::sqrt3);

    m.def("builtin_dataset", &empirical::builtin_dataset);
    m.def("assembled_area", &empirical::assembled_area, "record"_a);
    m.def("unassembled_area_measured", &empirical::unassembled_area_measured, "record"_a);
    m.def("ratio", &empirical::ratio, "record"_a);
    m.def(
        "fit_slope_origin",
        [](const std::vector<std::pair<double, double>>& pts) {
            return empirical::fit_slope_origin(pts);
        },
        "points"_a);
    m.def(
        "validate",
        [](const std::vector<empirical::MeasurementRecord>& records) {
            return empirical::validate(records);
        },
        "records"_a);
    m.def(
        "load_records_csv",
        [](const std::filesystem::path& path) { return empirical::load_records_csv(path); },
        "path"_a);
    m.def("render_text", &empirical::render_text, "report"_a);
    m.def("render_json", &empirical::render_json, "report"_a);
}

void bind_svg(py::module_& m) {
    py::class_<svg::ScatterPoint>(m, "ScatterPoint")
        .def(py::init<>())
        .def(py::init([](double x, double y, std::string label) {
                 return svg::ScatterPoint{x, y, std::move(label)};
             }),
             "x"_a, "y"_a, "label"_a = "")
        .def_readwrite("x", &svg::ScatterPoint::x)
        .def_readwrite("y", &svg::ScatterPoint::y)
        .def_readwrite("label", &svg::ScatterPoint::label);

    py::class_<svg::PlotSpec>(m, "PlotSpec")
        .def(py::init<>())
        .def_readwrite("width_px", &svg::PlotSpec::width_px)
        .def_readwrite("height_px", &svg::PlotSpec::height_px)
        .def_readwrite("points", &svg::PlotSpec::points)
        .def_readwrite("reference_slope", &svg::PlotSpec::reference_slope)
        .def_readwrite("x_label", &svg::PlotSpec::x_label)
        .def_readwrite("y_label", &svg::PlotSpec::y_label);

    m.def("render_scatter", &svg::render_scatter, "spec"_a);
    m.def("render_layout", &svg::render_layout, "layout"_a);
    m.def("write_file", &svg::write_file, "content"_a, "path"_a);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spread-area model for unassembled jigsaw puzzles (sqrt(3) law)";
    m.attr("__version__") = PUZZLESPREAD_VERSION;

    py::register_exception<IoError>(m, "IoError", PyExc_OSError);
    py::register_exception<CsvParseError>(m, "CsvParseError", PyExc_ValueError);

    auto geometry = m.def_submodule("geometry", "Oriented squares, hulls, extents");
    auto model = m.def_submodule("model", "Closed-form sqrt(3) spread model");
    auto packing = m.def_submodule("packing", "Layout generators and spread measurement");
    auto empirical_mod = m.def_submodule("empirical", "Measured-dataset validation");
    auto svg_mod = m.def_submodule("svg", "Deterministic SVG rendering");

    bind_geometry(geometry);
    bind_model(model);
    bind_packing(packing);
    bind_empirical(empirical_mod);
    bind_svg(svg_mod);
}
