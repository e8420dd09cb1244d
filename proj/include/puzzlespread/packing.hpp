#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "puzzlespread/geometry.hpp"

namespace puzzlespread::pack {

enum class Strategy { kHex, kGreedyRadial, kGrid };

std::string_view strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);

struct SimParams {
    Strategy strategy = Strategy::kGreedyRadial;
    std::uint64_t seed = 0;
    int candidate_angles = 64;   // directions tried per piece (greedy-radial)
    double radial_step = 0.05;   // march step, fraction of the piece diagonal
    double jitter = 0.0;         // hex only, fraction in [0,1)
};

/// A generated non-overlapping arrangement of equal-edge squares.
struct Layout {
    std::vector<geom::OrientedSquare> pieces;
    double piece_edge = 0.0;
    Strategy strategy = Strategy::kGreedyRadial;
    std::uint64_t seed = 0;
};

/// Pieces on a hexagonal lattice with nearest-neighbor spacing = `diameter`,
/// filled ring by ring outward from the origin (spiral order). Piece edge is
/// diameter/sqrt(2), i.e. the square inscribed in the lattice circle.
///
/// Seeded draws, per piece in placement order: rotation uniform in [0, pi/2);
/// if jitter > 0, a displacement angle uniform in [0, 2pi) then a radius
/// r = jitter * diameter * (1 - sqrt(2)/2) * sqrt(u), uniform over a disk.
Layout hex_layout(std::int64_t pieces, double diameter, double jitter, std::uint64_t seed);

/// Greedy radial insertion: per piece draw one rotation then
/// `candidate_angles` directions; along each direction march outward from the
/// origin in steps of radial_step * diagonal until the piece first fits, and
/// commit the candidate with the smallest center radius (ties: first drawn).
/// Deterministic for fixed (params, pieces, edge). Broad phase is a spatial
/// hash with cell size = piece diagonal.
Layout pack_random(std::int64_t pieces, double edge, const SimParams& params);

/// Axis-aligned squares on a ceil(sqrt(N))-column grid with pitch edge+gap.
Layout pack_grid(std::int64_t pieces, double edge, double gap);

/// Measured spread of one layout against the assembled area it came from.
struct SimResult {
    double hull_area = 0.0;
    geom::SpreadExtents extents;
    double ellipse_area = 0.0;  // (pi/4) * major * minor
    double spread_ratio_hull = 0.0;
    double spread_ratio_ellipse = 0.0;
    std::int64_t pieces = 0;
    std::uint64_t seed = 0;
};

/// Hull and principal extents over all four corners of every piece (pad 0 —
/// corners already include the piece extent), plus both spread ratios.
SimResult measure_layout(const Layout& layout, double assembled_area);

struct Stats {
    double mean = 0.0;
    double stddev = 0.0;  // sample stddev; 0 for a single value
    double min = 0.0;
    double max = 0.0;
};

struct RatioStats {
    Stats hull;
    Stats ellipse;
};

RatioStats ratio_statistics(std::span<const SimResult> results);

/// CSV export, header `idx,cx_cm,cy_cm,edge_cm,rot_rad`, full double precision.
std::string layout_to_csv(const Layout& layout);
void write_layout_csv(const Layout& layout, const std::filesystem::path& path);

}  // namespace puzzlespread::pack
