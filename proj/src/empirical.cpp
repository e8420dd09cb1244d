#include "puzzlespread/empirical.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "puzzlespread/errors.hpp"

namespace puzzlespread::empirical {

namespace {

void require_valid(const MeasurementRecord& rec) {
    if (rec.pieces < 1) throw std::domain_error("record: pieces must be >= 1");
    if (!(rec.x_a > 0.0) || !(rec.y_a > 0.0) || !(rec.x_s > 0.0) || !(rec.y_s > 0.0)) {
        throw std::domain_error("record: all dimensions must be positive");
    }
    if (rec.sigma_a < 0.0 || rec.sigma_s < 0.0) {
        throw std::domain_error("record: sigma values must be >= 0");
    }
}

// First-order sigma of a product x*y with independent per-dimension sigma s.
double product_sigma(double value, double x, double y, double s) {
    return value * std::hypot(s / x, s / y);
}

}  // namespace

std::string_view spread_shape_name(SpreadShape s) {
    return s == SpreadShape::kEllipse ? "ellipse" : "rectangle";
}

std::vector<MeasurementRecord> builtin_dataset() {
    constexpr SpreadShape E = SpreadShape::kEllipse;
    constexpr SpreadShape R = SpreadShape::kRectangle;
    return {
        {1008, 50.2, 69.0, 83.0, 85.0, E},
        {252, 26.6, 34.4, 45.0, 46.5, E},
        {9, 15.6, 21.4, 25.9, 23.3, E},
        {500, 50.8, 50.9, 78.4, 74.8, E},
        {1026, 67.8, 48.9, 88.0, 86.8, E},
        {27, 296.8, 14.6, 107.2, 92.0, E},
        {2000, 99.1, 68.6, 123.1, 131.0, E},
        {1000, 50.8, 68.5, 112.0, 69.0, R},
        {1000, 99.3, 33.0, 132.4, 57.5, R},
    };
}

Estimate assembled_area(const MeasurementRecord& rec) {
    require_valid(rec);
    const double value = rec.x_a * rec.y_a;
    return {value, product_sigma(value, rec.x_a, rec.y_a, rec.sigma_a)};
}

Estimate unassembled_area_measured(const MeasurementRecord& rec) {
    require_valid(rec);
    const double factor =
        rec.spread_shape == SpreadShape::kEllipse ? std::numbers::pi / 4.0 : 1.0;
    const double value = factor * rec.x_s * rec.y_s;
    // The constant factor scales value and sigma alike.
    return {value, product_sigma(value, rec.x_s, rec.y_s, rec.sigma_s)};
}

Estimate ratio(const MeasurementRecord& rec) {
    const Estimate a = assembled_area(rec);
    const Estimate s = unassembled_area_measured(rec);
    const double value = s.value / a.value;
    return {value, value * std::hypot(a.sigma / a.value, s.sigma / s.value)};
}

SlopeFit fit_slope_origin(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) {
        throw std::domain_error("fit_slope_origin: need at least 2 points");
    }
    double sxy = 0.0;
    double sxx = 0.0;
    for (const auto& [x, y] : points) {
        sxy += x * y;
        sxx += x * x;
    }
    if (!(sxx > 0.0)) {
        throw std::domain_error("fit_slope_origin: degenerate x values");
    }
    const double slope = sxy / sxx;
    double ss = 0.0;
    for (const auto& [x, y] : points) {
        const double r = y - slope * x;
        ss += r * r;
    }
    const double n = static_cast<double>(points.size());
    return {slope, std::sqrt(ss / (n - 1.0) / sxx)};
}

ValidationReport validate(std::span<const MeasurementRecord> records) {
    if (records.empty()) {
        throw std::domain_error("validate: empty record list");
    }
    ValidationReport report;
    report.rows.reserve(records.size());
    std::vector<std::pair<double, double>> points;
    points.reserve(records.size());
    for (const MeasurementRecord& rec : records) {
        ReportRow row;
        row.record = rec;
        row.assembled = assembled_area(rec);
        row.unassembled = unassembled_area_measured(rec);
        row.ratio = ratio(rec);
        row.predicted = report.sqrt3 * row.assembled.value;
        row.residual = row.unassembled.value - row.predicted;
        points.emplace_back(row.assembled.value, row.unassembled.value);
        report.rows.push_back(row);
    }
    report.slope = points.size() >= 2 ? fit_slope_origin(points)
                                      : SlopeFit{points[0].second / points[0].first, 0.0};
    return report;
}

namespace {

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (const char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_positive(const std::string& s, int line, const char* what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw CsvParseError(line, std::string("cannot parse ") + what + " from '" + s + "'");
    }
    if (pos != s.size()) {
        throw CsvParseError(line, std::string("trailing characters in ") + what + " '" + s + "'");
    }
    if (!(v > 0.0)) {
        throw CsvParseError(line, std::string(what) + " must be positive");
    }
    return v;
}

}  // namespace

std::vector<MeasurementRecord> load_records_csv(std::istream& in) {
    static const std::string kHeader = "n,x_a_cm,y_a_cm,x_s_cm,y_s_cm,spread_shape";
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != kHeader) {
        throw CsvParseError(1, "expected header '" + kHeader + "'");
    }
    std::vector<MeasurementRecord> records;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) continue;
        const std::vector<std::string> f = split_fields(line);
        if (f.size() != 6) {
            throw CsvParseError(lineno, "expected 6 fields, got " + std::to_string(f.size()));
        }
        MeasurementRecord rec;
        const double n = parse_positive(f[0], lineno, "piece count");
        if (n != std::floor(n)) {
            throw CsvParseError(lineno, "piece count must be an integer");
        }
        rec.pieces = static_cast<std::int64_t>(n);
        rec.x_a = parse_positive(f[1], lineno, "x_a_cm");
        rec.y_a = parse_positive(f[2], lineno, "y_a_cm");
        rec.x_s = parse_positive(f[3], lineno, "x_s_cm");
        rec.y_s = parse_positive(f[4], lineno, "y_s_cm");
        if (f[5] == "ellipse") {
            rec.spread_shape = SpreadShape::kEllipse;
        } else if (f[5] == "rectangle") {
            rec.spread_shape = SpreadShape::kRectangle;
        } else {
            throw CsvParseError(lineno, "spread_shape must be 'ellipse' or 'rectangle', got '" +
                                            f[5] + "'");
        }
        records.push_back(rec);
    }
    return records;
}

std::vector<MeasurementRecord> load_records_csv(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open: " + path.string());
    return load_records_csv(file);
}

std::string render_text(const ValidationReport& report) {
    std::string out;
    char buf[256];
    // Header widths account for multibyte UTF-8 so columns align on display.
    std::snprintf(buf, sizeof(buf), "%6s  %-10s %19s %19s %19s %13s %10s\n", "N", "shape",
                  "A_a (cm²)", "A_s (cm²)", "ratio", "√3·A_a", "residual");
    out += buf;
    for (const ReportRow& row : report.rows) {
        const std::string_view shape = spread_shape_name(row.record.spread_shape);
        std::snprintf(buf, sizeof(buf),
                      "%6lld  %-10.*s %9.1f ± %6.1f %9.1f ± %6.1f %8.4f ± %8.4f %10.1f %10.1f\n",
                      static_cast<long long>(row.record.pieces), static_cast<int>(shape.size()),
                      shape.data(), row.assembled.value, row.assembled.sigma,
                      row.unassembled.value, row.unassembled.sigma, row.ratio.value,
                      row.ratio.sigma, row.predicted, row.residual);
        out += buf;
    }
    std::snprintf(buf, sizeof(buf),
                  "\nthrough-origin slope (diagnostic): %.4f ± %.4f\n"
                  "√3 reference (no fit):             %.4f\n",
                  report.slope.value, report.slope.std_error, report.sqrt3);
    out += buf;
    return out;
}

std::string render_json(const ValidationReport& report) {
    nlohmann::ordered_json j;
    j["rows"] = nlohmann::ordered_json::array();
    for (const ReportRow& row : report.rows) {
        j["rows"].push_back({
            {"pieces", row.record.pieces},
            {"spread_shape", spread_shape_name(row.record.spread_shape)},
            {"assembled", {{"value", row.assembled.value}, {"sigma", row.assembled.sigma}}},
            {"unassembled", {{"value", row.unassembled.value}, {"sigma", row.unassembled.sigma}}},
            {"ratio", {{"value", row.ratio.value}, {"sigma", row.ratio.sigma}}},
            {"predicted", row.predicted},
            {"residual", row.residual},
        });
    }
    j["slope"] = {{"value", report.slope.value}, {"stderr", report.slope.std_error}};
    j["sqrt3"] = report.sqrt3;
    return j.dump(2) + "\n";
}

}  // namespace puzzlespread::empirical
