#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

#include "puzzlespread/empirical.hpp"
#include "puzzlespread/errors.hpp"
#include "puzzlespread/packing.hpp"
#include "puzzlespread/svg.hpp"

using namespace puzzlespread;

namespace {

int count_occurrences(const std::string& haystack, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

svg::PlotSpec builtin_plot_spec() {
    svg::PlotSpec spec;
    for (const auto& rec : empirical::builtin_dataset()) {
        spec.points.push_back({empirical::assembled_area(rec).value,
                               empirical::unassembled_area_measured(rec).value, ""});
    }
    return spec;
}

}  // namespace

TEST_CASE("plot mapping keeps data inside the canvas") {
    svg::PlotSpec spec;
    spec.points = {{1000.0, 1732.05, "on the line"}};
    const svg::PlotMapping m = svg::plot_mapping(spec);
    // Headroom beyond the data so points do not sit on the frame.
    CHECK(m.x_max == doctest::Approx(1050.0));
    CHECK(m.y_max >= 1732.05);
    CHECK(m.to_px_x(0.0) == doctest::Approx(m.px_left));
    CHECK(m.to_px_x(m.x_max) == doctest::Approx(m.px_right));
    CHECK(m.to_px_y(0.0) == doctest::Approx(m.py_bottom));
    CHECK(m.to_px_y(m.y_max) == doctest::Approx(m.py_top));
    CHECK(m.px_left < m.px_right);
    CHECK(m.py_top < m.py_bottom);  // pixel y grows downward
}

TEST_CASE("a point on the prediction lands on the reference line") {
    svg::PlotSpec spec;
    spec.points = {{1000.0, std::numbers::sqrt3 * 1000.0, ""}};
    const svg::PlotMapping m = svg::plot_mapping(spec);
    // Line pixel at x = 1000: interpolate the dashed segment drawn from the
    // origin to (x_max, slope*x_max).
    const double px = m.to_px_x(1000.0);
    const double line_py = m.to_px_y(spec.reference_slope * 1000.0);
    const double point_py = m.to_px_y(spec.points[0].y);
    CHECK(std::abs(line_py - point_py) < 1.0);
    CHECK(px > m.px_left);
    CHECK(px < m.px_right);
}

TEST_CASE("scatter SVG structure and determinism") {
    svg::PlotSpec spec = builtin_plot_spec();
    const std::string out = svg::render_scatter(spec);
    CHECK(out == svg::render_scatter(spec));  // byte-identical

    CHECK(out.find("<svg") == 0);
    CHECK(out.find("width=\"800\" height=\"600\"") != std::string::npos);
    CHECK(count_occurrences(out, "<circle class=\"pt\"") == 9);
    CHECK(out.find("stroke-dasharray") != std::string::npos);
    CHECK(out.find("Assembled area (cm²)") != std::string::npos);
    CHECK(out.find("Unassembled area (cm²)") != std::string::npos);
    CHECK(out.rfind("</svg>\n") == out.size() - 7);

    spec.width_px = 400;
    spec.height_px = 300;
    CHECK(svg::render_scatter(spec).find("width=\"400\" height=\"300\"") !=
          std::string::npos);
}

TEST_CASE("scatter rejects degenerate input") {
    svg::PlotSpec empty;
    CHECK_THROWS_AS(svg::render_scatter(empty), std::domain_error);

    svg::PlotSpec negative;
    negative.points = {{-1.0, 1.0, ""}};
    CHECK_THROWS_AS(svg::render_scatter(negative), std::domain_error);

    svg::PlotSpec bad_canvas;
    bad_canvas.points = {{1.0, 1.0, ""}};
    bad_canvas.width_px = 0;
    CHECK_THROWS_AS(svg::render_scatter(bad_canvas), std::domain_error);
}

TEST_CASE("labels are XML-escaped") {
    svg::PlotSpec spec;
    spec.points = {{1.0, 1.0, "a<b & \"c\""}};
    const std::string out = svg::render_scatter(spec);
    CHECK(out.find("a&lt;b &amp; &quot;c&quot;") != std::string::npos);
    CHECK(out.find("a<b") == std::string::npos);
}

TEST_CASE("layout SVG renders every piece plus the hull") {
    const pack::Layout layout = pack::hex_layout(19, 1.0, 0.0, 2);
    const std::string out = svg::render_layout(layout);
    CHECK(out == svg::render_layout(layout));
    CHECK(count_occurrences(out, "<rect") == 19);
    CHECK(count_occurrences(out, "<polygon") == 1);
    CHECK(out.find("viewBox=") != std::string::npos);

    pack::Layout empty;
    CHECK_THROWS_AS(svg::render_layout(empty), std::domain_error);
}

TEST_CASE("write_file writes bytes and reports I/O failures") {
    const auto path = std::filesystem::temp_directory_path() / "puzzlespread_svg_test.svg";
    svg::write_file("<svg/>\n", path);
    std::ifstream in(path, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "<svg/>\n");
    std::filesystem::remove(path);

    CHECK_THROWS_AS(svg::write_file("x", "/nonexistent-dir-7731/out.svg"), IoError);
}
