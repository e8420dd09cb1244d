#pragma once

#include <cstdint>
#include <numbers>
#include <optional>

namespace puzzlespread::model {

/// The spread-area factor: unassembled area = sqrt(3) x assembled area.
inline constexpr double kSqrt3 = std::numbers::sqrt3;

/// A puzzle as printed on the box: piece count plus assembled footprint.
/// Lengths are cm, areas cm^2 throughout.
struct PuzzleSpec {
    std::int64_t pieces = 1;
    std::optional<double> assembled_width;
    std::optional<double> assembled_height;
    double assembled_area = 0.0;

    static PuzzleSpec from_area(std::int64_t pieces, double assembled_area);
    static PuzzleSpec from_dims(std::int64_t pieces, double width, double height);

    /// General constructor: area, width x height, or all three (then the area
    /// must agree with width*height to 1e-9 relative).
    static PuzzleSpec make(std::int64_t pieces, std::optional<double> area,
                           std::optional<double> width, std::optional<double> height);
};

/// Every intermediate quantity of the square-piece / circumscribed-circle /
/// hexagonal-packing chain.
struct ModelBreakdown {
    double piece_area = 0.0;             // A_a / N
    double piece_edge = 0.0;             // sqrt(piece_area)
    double circle_diameter = 0.0;        // piece diagonal = sqrt(2 A_a / N)
    double hexagon_area = 0.0;           // (3 sqrt3 / 2) d^2
    double per_piece_spread_area = 0.0;  // hexagon_area / 3
    double unassembled_area = 0.0;       // sqrt3 * A_a
};

double piece_area(double assembled_area, std::int64_t pieces);
double circumscribed_diameter(double assembled_area, std::int64_t pieces);
double hexagon_area(double diameter);
double per_piece_spread_area(double diameter);

/// sqrt(3) * assembled_area. Deliberately does not take a piece count: the
/// factor N cancels in the derivation, so independence is visible in the
/// signature.
double unassembled_area(double assembled_area);

ModelBreakdown model_breakdown(const PuzzleSpec& spec);

struct TableFit {
    bool fits = false;
    double margin = 0.0;  // table area - predicted spread area, cm^2
};

/// Does a table of the given dimensions hold the unassembled pieces flat?
TableFit table_fits(const PuzzleSpec& spec, double table_width, double table_height);

}  // namespace puzzlespread::model
