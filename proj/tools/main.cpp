// puzzlespread — command-line front end.
//
// Subcommands: predict (closed-form model), simulate (layout generators),
// validate (measured dataset report), plot (SVG scatter).
//
// Exit codes are a scripting contract: 0 success / table fits, 2 table does
// not fit, 64 usage error, 65 data error, 66 I/O error.

#include <unistd.h>

#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "puzzlespread/empirical.hpp"
#include "puzzlespread/errors.hpp"
#include "puzzlespread/model.hpp"
#include "puzzlespread/packing.hpp"
#include "puzzlespread/svg.hpp"
#include "puzzlespread/version.hpp"

namespace {

namespace empirical = puzzlespread::empirical;
namespace geom = puzzlespread::geom;
namespace model = puzzlespread::model;
namespace pack = puzzlespread::pack;
namespace svg = puzzlespread::svg;
using puzzlespread::CsvParseError;
using puzzlespread::IoError;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNoFit = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitIo = 66;

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

bool color_enabled() {
    return isatty(STDOUT_FILENO) != 0 && std::getenv("NO_COLOR") == nullptr;
}

void print_banner(bool json, bool no_banner) {
    if (json || no_banner) return;
    if (color_enabled()) {
        std::fputs("\x1b[1mpuzzlespread " PUZZLESPREAD_VERSION "\x1b[0m\n", stdout);
    } else {
        std::fputs("puzzlespread " PUZZLESPREAD_VERSION "\n", stdout);
    }
}

/// Two positive decimals joined by 'x', e.g. "90x70" (cm).
std::optional<std::pair<double, double>> parse_table_dims(const std::string& s) {
    const auto sep = s.find('x');
    if (sep == std::string::npos || sep == 0 || sep + 1 >= s.size()) return std::nullopt;
    const std::string left = s.substr(0, sep);
    const std::string right = s.substr(sep + 1);
    char* end = nullptr;
    const double w = std::strtod(left.c_str(), &end);
    if (end != left.c_str() + left.size()) return std::nullopt;
    const double h = std::strtod(right.c_str(), &end);
    if (end != right.c_str() + right.size()) return std::nullopt;
    return std::make_pair(w, h);
}

std::vector<empirical::MeasurementRecord> records_from(const std::string& data_path) {
    if (data_path.empty()) return empirical::builtin_dataset();
    return empirical::load_records_csv(std::filesystem::path(data_path));
}

// ---------------------------------------------------------------------------
// predict

struct PredictOpts {
    std::int64_t pieces = 1;
    double area = 0.0;
    double width = 0.0;
    double height = 0.0;
    bool has_area = false;
    bool has_width = false;
    bool has_height = false;
    std::string table;
};

int cmd_predict(const PredictOpts& opt, bool json) {
    if ((opt.has_width != opt.has_height) || !(opt.has_area || opt.has_width)) {
        throw CLI::ValidationError("predict",
                                   "provide --area, or --width and --height together");
    }
    std::optional<double> area, width, height;
    if (opt.has_area) area = opt.area;
    if (opt.has_width) width = opt.width;
    if (opt.has_height) height = opt.height;

    std::optional<std::pair<double, double>> table_dims;
    if (!opt.table.empty()) {
        table_dims = parse_table_dims(opt.table);
        if (!table_dims) {
            throw CLI::ValidationError("--table", "expected WxH, e.g. 90x70");
        }
    }

    const model::PuzzleSpec spec = model::PuzzleSpec::make(opt.pieces, area, width, height);
    const model::ModelBreakdown breakdown = model::model_breakdown(spec);
    std::optional<model::TableFit> fit;
    if (table_dims) {
        fit = model::table_fits(spec, table_dims->first, table_dims->second);
    }

    if (json) {
        ordered_json j;
        j["pieces"] = spec.pieces;
        if (spec.assembled_width) j["assembled_width_cm"] = *spec.assembled_width;
        if (spec.assembled_height) j["assembled_height_cm"] = *spec.assembled_height;
        j["assembled_area_cm2"] = spec.assembled_area;
        j["breakdown"] = {{"piece_area_cm2", breakdown.piece_area},
                          {"piece_edge_cm", breakdown.piece_edge},
                          {"circle_diameter_cm", breakdown.circle_diameter},
                          {"hexagon_area_cm2", breakdown.hexagon_area},
                          {"per_piece_spread_area_cm2", breakdown.per_piece_spread_area},
                          {"unassembled_area_cm2", breakdown.unassembled_area}};
        j["sqrt3"] = model::kSqrt3;
        if (fit) {
            j["table"] = {{"width_cm", table_dims->first},
                          {"height_cm", table_dims->second},
                          {"area_cm2", table_dims->first * table_dims->second},
                          {"fits", fit->fits},
                          {"margin_cm2", fit->margin}};
        }
        std::fputs((j.dump(2) + "\n").c_str(), stdout);
    } else {
        if (spec.assembled_width) {
            std::fputs(fmt("%lld %s, assembled %.1f x %.1f cm = %.1f cm²\n",
                           static_cast<long long>(spec.pieces),
                           spec.pieces == 1 ? "piece" : "pieces", *spec.assembled_width,
                           *spec.assembled_height, spec.assembled_area)
                           .c_str(),
                       stdout);
        } else {
            std::fputs(fmt("%lld %s, assembled %.1f cm²\n",
                           static_cast<long long>(spec.pieces),
                           spec.pieces == 1 ? "piece" : "pieces", spec.assembled_area)
                           .c_str(),
                       stdout);
        }
        std::fputs(fmt("  piece area              %.1f cm²\n", breakdown.piece_area).c_str(),
                   stdout);
        std::fputs(fmt("  piece edge              %.1f cm\n", breakdown.piece_edge).c_str(),
                   stdout);
        std::fputs(
            fmt("  circumscribed diameter  %.1f cm\n", breakdown.circle_diameter).c_str(),
            stdout);
        std::fputs(fmt("  hexagon cell area       %.1f cm²\n", breakdown.hexagon_area).c_str(),
                   stdout);
        std::fputs(
            fmt("  per-piece spread        %.1f cm²\n", breakdown.per_piece_spread_area).c_str(),
            stdout);
        std::fputs(fmt("  unassembled area        %.1f cm²  (= √3 x assembled, √3 ≈ %.7f)\n",
                       breakdown.unassembled_area, model::kSqrt3)
                       .c_str(),
                   stdout);
        if (fit) {
            std::fputs(fmt("table %.1f x %.1f cm = %.1f cm²: %s %.1f cm²\n", table_dims->first,
                           table_dims->second, table_dims->first * table_dims->second,
                           fit->fits ? "fits, margin" : "does not fit, short by",
                           std::abs(fit->margin))
                           .c_str(),
                       stdout);
        }
    }
    return (fit && !fit->fits) ? kExitNoFit : kExitOk;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateOpts {
    std::int64_t pieces = 0;
    double area = 0.0;
    std::string strategy = "greedy-radial";
    std::uint64_t seed = 0;
    int runs = 1;
    double jitter = 0.0;
    double gap = 0.0;
    int angles = 64;
    double radial_step = 0.05;
    std::string svg_path;
    std::string csv_path;
    std::string layout_csv_path;
};

std::string results_csv(std::span<const pack::SimResult> results) {
    std::string out = "seed,pieces,hull_area_cm2,ellipse_area_cm2,hull_ratio,ellipse_ratio\n";
    for (const pack::SimResult& r : results) {
        out += fmt("%llu,%lld,%.17g,%.17g,%.17g,%.17g\n",
                   static_cast<unsigned long long>(r.seed), static_cast<long long>(r.pieces),
                   r.hull_area, r.ellipse_area, r.spread_ratio_hull, r.spread_ratio_ellipse);
    }
    return out;
}

int cmd_simulate(const SimulateOpts& opt, bool json) {
    if (opt.runs < 1) throw std::domain_error("--runs must be >= 1");
    const auto strategy = pack::strategy_from_name(opt.strategy);
    if (!strategy) {
        throw CLI::ValidationError("--strategy", "expected hex, greedy-radial or grid");
    }
    const double edge = std::sqrt(model::piece_area(opt.area, opt.pieces));
    const double diameter = model::circumscribed_diameter(opt.area, opt.pieces);

    std::vector<pack::SimResult> results;
    results.reserve(static_cast<std::size_t>(opt.runs));
    pack::Layout last;
    for (int run = 0; run < opt.runs; ++run) {
        const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(run);
        pack::Layout layout;
        switch (*strategy) {
            case pack::Strategy::kHex:
                layout = pack::hex_layout(opt.pieces, diameter, opt.jitter, seed);
                break;
            case pack::Strategy::kGreedyRadial: {
                pack::SimParams params;
                params.strategy = pack::Strategy::kGreedyRadial;
                params.seed = seed;
                params.candidate_angles = opt.angles;
                params.radial_step = opt.radial_step;
                layout = pack::pack_random(opt.pieces, edge, params);
                break;
            }
            case pack::Strategy::kGrid:
                layout = pack::pack_grid(opt.pieces, edge, opt.gap);
                break;
        }
        results.push_back(pack::measure_layout(layout, opt.area));
        if (run + 1 == opt.runs) last = std::move(layout);
    }
    const pack::RatioStats stats = pack::ratio_statistics(results);

    if (!opt.svg_path.empty()) svg::write_file(svg::render_layout(last), opt.svg_path);
    if (!opt.csv_path.empty()) svg::write_file(results_csv(results), opt.csv_path);
    if (!opt.layout_csv_path.empty()) pack::write_layout_csv(last, opt.layout_csv_path);

    if (json) {
        ordered_json j;
        j["strategy"] = std::string(pack::strategy_name(*strategy));
        j["pieces"] = opt.pieces;
        j["piece_edge_cm"] = edge;
        j["assembled_area_cm2"] = opt.area;
        j["seed"] = opt.seed;
        j["runs"] = opt.runs;
        ordered_json runs = ordered_json::array();
        for (const pack::SimResult& r : results) {
            runs.push_back({{"seed", r.seed},
                            {"hull_area_cm2", r.hull_area},
                            {"ellipse_area_cm2", r.ellipse_area},
                            {"major_cm", r.extents.major},
                            {"minor_cm", r.extents.minor},
                            {"hull_ratio", r.spread_ratio_hull},
                            {"ellipse_ratio", r.spread_ratio_ellipse}});
        }
        j["results"] = std::move(runs);
        const auto stats_json = [](const pack::Stats& s) {
            return ordered_json{
                {"mean", s.mean}, {"stddev", s.stddev}, {"min", s.min}, {"max", s.max}};
        };
        j["hull_ratio"] = stats_json(stats.hull);
        j["ellipse_ratio"] = stats_json(stats.ellipse);
        std::fputs((j.dump(2) + "\n").c_str(), stdout);
    } else {
        std::fputs(fmt("%s: %lld pieces, edge %.1f cm, assembled %.1f cm²\n",
                       std::string(pack::strategy_name(*strategy)).c_str(),
                       static_cast<long long>(opt.pieces), edge, opt.area)
                       .c_str(),
                   stdout);
        if (opt.runs == 1) {
            std::fputs(fmt("seed %llu (1 run)\n", static_cast<unsigned long long>(opt.seed))
                           .c_str(),
                       stdout);
        } else {
            std::fputs(fmt("seeds %llu..%llu (%d runs)\n",
                           static_cast<unsigned long long>(opt.seed),
                           static_cast<unsigned long long>(opt.seed) + opt.runs - 1, opt.runs)
                           .c_str(),
                       stdout);
        }
        const auto stats_line = [](const char* name, const pack::Stats& s) {
            return fmt("  %-14s mean %.4f  std %.4f  min %.4f  max %.4f\n", name, s.mean,
                       s.stddev, s.min, s.max);
        };
        std::fputs(stats_line("hull ratio", stats.hull).c_str(), stdout);
        std::fputs(stats_line("ellipse ratio", stats.ellipse).c_str(), stdout);
        if (!opt.svg_path.empty()) {
            std::fputs(fmt("wrote layout SVG: %s\n", opt.svg_path.c_str()).c_str(), stdout);
        }
        if (!opt.csv_path.empty()) {
            std::fputs(fmt("wrote results CSV: %s\n", opt.csv_path.c_str()).c_str(), stdout);
        }
        if (!opt.layout_csv_path.empty()) {
            std::fputs(fmt("wrote layout CSV: %s\n", opt.layout_csv_path.c_str()).c_str(),
                       stdout);
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// validate

int cmd_validate(const std::string& data_path, bool json) {
    const std::vector<empirical::MeasurementRecord> records = records_from(data_path);
    const empirical::ValidationReport report = empirical::validate(records);
    const std::string out = json ? empirical::render_json(report)
                                 : empirical::render_text(report);
    std::fputs(out.c_str(), stdout);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// plot

struct PlotOpts {
    std::string data_path;
    std::string out_path;
    int width_px = 800;
    int height_px = 600;
};

int cmd_plot(const PlotOpts& opt, bool json) {
    const std::vector<empirical::MeasurementRecord> records = records_from(opt.data_path);
    if (records.empty()) throw std::domain_error("plot: dataset has no records");

    svg::PlotSpec spec;
    spec.width_px = opt.width_px;
    spec.height_px = opt.height_px;
    for (const empirical::MeasurementRecord& rec : records) {
        spec.points.push_back(
            {empirical::assembled_area(rec).value, empirical::unassembled_area_measured(rec).value,
             fmt("N=%lld, %s", static_cast<long long>(rec.pieces),
                 std::string(empirical::spread_shape_name(rec.spread_shape)).c_str())});
    }
    svg::write_file(svg::render_scatter(spec), opt.out_path);

    if (json) {
        ordered_json j;
        j["out"] = opt.out_path;
        j["points"] = spec.points.size();
        j["width_px"] = spec.width_px;
        j["height_px"] = spec.height_px;
        j["reference_slope"] = spec.reference_slope;
        std::fputs((j.dump(2) + "\n").c_str(), stdout);
    } else {
        std::fputs(
            fmt("wrote %s (%zu points)\n", opt.out_path.c_str(), spec.points.size()).c_str(),
            stdout);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spread-area toolkit: how much table does an unassembled puzzle need?"};
    app.name("puzzlespread");
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", PUZZLESPREAD_VERSION);

    bool json = false;
    bool no_banner = false;
    app.add_flag("--json", json, "machine-readable JSON output");
    app.add_flag("--no-banner", no_banner, "suppress the version banner");

    int exit_code = kExitOk;

    PredictOpts predict_opts;
    CLI::App* predict = app.add_subcommand(
        "predict", "Closed-form spread prediction from piece count and assembled size");
    predict->add_option("--pieces", predict_opts.pieces, "piece count (default 1)");
    predict->add_option("--area", predict_opts.area, "assembled area, cm²");
    predict->add_option("--width", predict_opts.width, "assembled width, cm");
    predict->add_option("--height", predict_opts.height, "assembled height, cm");
    predict->add_option("--table", predict_opts.table,
                        "table size WxH in cm, e.g. 90x70; exit 2 if the spread does not fit");
    predict->callback([&] {
        predict_opts.has_area = predict->count("--area") > 0;
        predict_opts.has_width = predict->count("--width") > 0;
        predict_opts.has_height = predict->count("--height") > 0;
        print_banner(json, no_banner);
        exit_code = cmd_predict(predict_opts, json);
    });

    SimulateOpts sim_opts;
    CLI::App* simulate =
        app.add_subcommand("simulate", "Generate spread layouts and measure their ratios");
    simulate->add_option("--pieces", sim_opts.pieces, "piece count")->required();
    simulate->add_option("--area", sim_opts.area, "assembled area, cm²")->required();
    simulate->add_option("--strategy", sim_opts.strategy,
                         "hex, greedy-radial or grid (default greedy-radial)");
    simulate->add_option("--seed", sim_opts.seed, "base RNG seed (default 0)");
    simulate->add_option("--runs", sim_opts.runs, "number of seeds: seed, seed+1, ...");
    simulate->add_option("--jitter", sim_opts.jitter, "hex only: jitter fraction in [0,1)");
    simulate->add_option("--gap", sim_opts.gap, "grid only: spacing between pieces, cm");
    simulate->add_option("--angles", sim_opts.angles,
                         "greedy-radial only: candidate directions per piece");
    simulate->add_option("--radial-step", sim_opts.radial_step,
                         "greedy-radial only: march step as a fraction of the piece diagonal");
    simulate->add_option("--svg", sim_opts.svg_path, "write the last run's layout as SVG");
    simulate->add_option("--csv", sim_opts.csv_path, "write per-run results as CSV");
    simulate->add_option("--layout-csv", sim_opts.layout_csv_path,
                         "write the last run's layout as CSV");
    simulate->callback([&] {
        print_banner(json, no_banner);
        exit_code = cmd_simulate(sim_opts, json);
    });

    std::string validate_data;
    CLI::App* validate =
        app.add_subcommand("validate", "Report measured spread areas against the prediction");
    validate->add_option("--data", validate_data,
                         "measurements CSV (default: builtin dataset)");
    validate->callback([&] {
        print_banner(json, no_banner);
        exit_code = cmd_validate(validate_data, json);
    });

    PlotOpts plot_opts;
    CLI::App* plot =
        app.add_subcommand("plot", "SVG scatter of unassembled vs assembled area");
    plot->add_option("--data", plot_opts.data_path,
                     "measurements CSV (default: builtin dataset)");
    plot->add_option("--out", plot_opts.out_path, "output SVG path")->required();
    plot->add_option("--width", plot_opts.width_px, "canvas width, px (default 800)");
    plot->add_option("--height", plot_opts.height_px, "canvas height, px (default 600)");
    plot->callback([&] {
        print_banner(json, no_banner);
        exit_code = cmd_plot(plot_opts, json);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const CsvParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    }
    return exit_code;
}
