#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace puzzlespread::empirical {

enum class SpreadShape { kEllipse, kRectangle };

std::string_view spread_shape_name(SpreadShape s);

/// One measured puzzle: assembled dims, spread dims, how the spread blob was
/// shaped, and the per-dimension measurement uncertainties (cm, 1 sigma).
struct MeasurementRecord {
    std::int64_t pieces = 0;
    double x_a = 0.0;
    double y_a = 0.0;
    double x_s = 0.0;
    double y_s = 0.0;
    SpreadShape spread_shape = SpreadShape::kEllipse;
    double sigma_a = 0.2;
    double sigma_s = 0.5;
};

/// A value with its first-order propagated 1-sigma uncertainty.
struct Estimate {
    double value = 0.0;
    double sigma = 0.0;
};

/// The nine measured puzzles, dims verbatim from the source dataset; the two
/// 1000-piece puzzles were laid out as rectangles, the rest as ovals.
std::vector<MeasurementRecord> builtin_dataset();

/// x_a * y_a with independent Gaussian errors on each dimension.
Estimate assembled_area(const MeasurementRecord& rec);

/// (pi/4) * x_s * y_s for ellipse layouts, x_s * y_s for rectangles.
Estimate unassembled_area_measured(const MeasurementRecord& rec);

/// Measured spread ratio A_s / A_a; relative sigmas combine in quadrature.
Estimate ratio(const MeasurementRecord& rec);

struct SlopeFit {
    double value = 0.0;
    double std_error = 0.0;
};

/// Ordinary least squares through the origin: slope = sum(xy)/sum(x^2),
/// standard error sqrt(sum(residual^2)/(n-1)) / sqrt(sum(x^2)).
/// Throws std::domain_error for fewer than 2 points.
SlopeFit fit_slope_origin(std::span<const std::pair<double, double>> points);

struct ReportRow {
    MeasurementRecord record;
    Estimate assembled;
    Estimate unassembled;
    Estimate ratio;
    double predicted = 0.0;  // sqrt3 * assembled
    double residual = 0.0;   // measured - predicted
};

struct ValidationReport {
    std::vector<ReportRow> rows;
    SlopeFit slope;  // diagnostic; the reference prediction is parameter-free
    double sqrt3 = std::numbers::sqrt3;
};

ValidationReport validate(std::span<const MeasurementRecord> records);

/// CSV schema: header `n,x_a_cm,y_a_cm,x_s_cm,y_s_cm,spread_shape`, with
/// spread_shape in {ellipse, rectangle}. Throws CsvParseError with line info.
std::vector<MeasurementRecord> load_records_csv(std::istream& in);
std::vector<MeasurementRecord> load_records_csv(const std::filesystem::path& path);

/// Aligned plain-text table: areas to 0.1 cm^2, ratios to 4 decimals.
std::string render_text(const ValidationReport& report);

/// JSON object {rows: [...], slope: {value, stderr}, sqrt3: ...}, full
/// precision, 2-space indent, trailing newline.
std::string render_json(const ValidationReport& report);

}  // namespace puzzlespread::empirical
