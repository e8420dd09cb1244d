#include "puzzlespread/model.hpp"

#include <cmath>
#include <stdexcept>

namespace puzzlespread::model {

namespace {

void require_positive_area(double area) {
    if (!(area > 0.0) || !std::isfinite(area)) {
        throw std::domain_error("assembled area must be positive and finite");
    }
}

void require_pieces(std::int64_t pieces) {
    if (pieces < 1) {
        throw std::domain_error("piece count must be >= 1");
    }
}

}  // namespace

PuzzleSpec PuzzleSpec::from_area(std::int64_t pieces, double assembled_area) {
    return make(pieces, assembled_area, std::nullopt, std::nullopt);
}

PuzzleSpec PuzzleSpec::from_dims(std::int64_t pieces, double width, double height) {
    return make(pieces, std::nullopt, width, height);
}

PuzzleSpec PuzzleSpec::make(std::int64_t pieces, std::optional<double> area,
                            std::optional<double> width, std::optional<double> height) {
    require_pieces(pieces);
    if (width.has_value() != height.has_value()) {
        throw std::domain_error("PuzzleSpec: width and height must be given together");
    }
    double a;
    if (width) {
        if (!(*width > 0.0) || !(*height > 0.0)) {
            throw std::domain_error("PuzzleSpec: dimensions must be positive");
        }
        const double from_dims = *width * *height;
        if (area) {
            require_positive_area(*area);
            if (std::abs(*area - from_dims) > 1e-9 * from_dims) {
                throw std::domain_error(
                    "PuzzleSpec: assembled_area disagrees with width*height");
            }
        }
        a = from_dims;
    } else if (area) {
        require_positive_area(*area);
        a = *area;
    } else {
        throw std::domain_error("PuzzleSpec: need an area or width and height");
    }
    return PuzzleSpec{pieces, width, height, a};
}

double piece_area(double assembled_area, std::int64_t pieces) {
    require_positive_area(assembled_area);
    require_pieces(pieces);
    return assembled_area / static_cast<double>(pieces);
}

double circumscribed_diameter(double assembled_area, std::int64_t pieces) {
    // Pythagoras on the square piece: diagonal = sqrt(2 A_p).
    return std::sqrt(2.0 * piece_area(assembled_area, pieces));
}

double hexagon_area(double diameter) {
    if (!(diameter > 0.0) || !std::isfinite(diameter)) {
        throw std::domain_error("diameter must be positive and finite");
    }
    return 1.5 * kSqrt3 * diameter * diameter;
}

double per_piece_spread_area(double diameter) {
    return hexagon_area(diameter) / 3.0;
}

double unassembled_area(double assembled_area) {
    require_positive_area(assembled_area);
    return kSqrt3 * assembled_area;
}

ModelBreakdown model_breakdown(const PuzzleSpec& spec) {
    require_pieces(spec.pieces);
    require_positive_area(spec.assembled_area);
    ModelBreakdown b;
    b.piece_area = piece_area(spec.assembled_area, spec.pieces);
    b.piece_edge = std::sqrt(b.piece_area);
    b.circle_diameter = circumscribed_diameter(spec.assembled_area, spec.pieces);
    b.hexagon_area = hexagon_area(b.circle_diameter);
    b.per_piece_spread_area = per_piece_spread_area(b.circle_diameter);
    b.unassembled_area = unassembled_area(spec.assembled_area);
    return b;
}

TableFit table_fits(const PuzzleSpec& spec, double table_width, double table_height) {
    if (!(table_width > 0.0) || !(table_height > 0.0)) {
        throw std::domain_error("table dimensions must be positive");
    }
    const double needed = unassembled_area(spec.assembled_area);
    const double table_area = table_width * table_height;
    return TableFit{table_area >= needed, table_area - needed};
}

}  // namespace puzzlespread::model
