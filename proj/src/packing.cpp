#include "puzzlespread/packing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "puzzlespread/errors.hpp"
#include "puzzlespread/rng.hpp"

namespace puzzlespread::pack {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_pieces(std::int64_t pieces) {
    if (pieces < 1) throw std::domain_error("piece count must be >= 1");
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string(what) + " must be positive and finite");
    }
}

// Hash grid over piece centers. With cell size = piece diagonal, any two
// overlapping pieces sit within one cell ring of each other (overlap implies
// center distance < diagonal).
class SpatialHash {
  public:
    explicit SpatialHash(double cell) : cell_(cell) {}

    void insert(int idx, geom::Vec2 c) { cells_[key(c)].push_back(idx); }

    // Calls f(idx) for pieces in the 3x3 neighborhood; stops early on true.
    template <class F>
    bool any_neighbor(geom::Vec2 c, F&& f) const {
        const int ix = coord(c.x);
        const int iy = coord(c.y);
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                const auto it = cells_.find(pack_key(ix + dx, iy + dy));
                if (it == cells_.end()) continue;
                for (const int idx : it->second) {
                    if (f(idx)) return true;
                }
            }
        }
        return false;
    }

  private:
    int coord(double v) const { return static_cast<int>(std::floor(v / cell_)); }

    static std::uint64_t pack_key(int ix, int iy) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ix)) << 32) |
               static_cast<std::uint64_t>(static_cast<std::uint32_t>(iy));
    }

    std::uint64_t key(geom::Vec2 c) const { return pack_key(coord(c.x), coord(c.y)); }

    double cell_;
    std::unordered_map<std::uint64_t, std::vector<int>> cells_;
};

// Axial hex directions; ring k starts at k*dirs[4] and walks each direction
// k steps, yielding the standard ring-by-ring spiral.
constexpr std::array<std::array<int, 2>, 6> kHexDirs = {
    {{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};

geom::Vec2 axial_to_xy(std::int64_t q, std::int64_t r, double spacing) {
    return {spacing * (static_cast<double>(q) + static_cast<double>(r) / 2.0),
            spacing * static_cast<double>(r) * (std::numbers::sqrt3 / 2.0)};
}

std::vector<geom::Vec2> hex_spiral_centers(std::int64_t n, double spacing) {
    std::vector<geom::Vec2> centers;
    centers.reserve(static_cast<std::size_t>(n));
    centers.push_back({0.0, 0.0});
    for (std::int64_t k = 1; std::ssize(centers) < n; ++k) {
        std::int64_t q = k * kHexDirs[4][0];
        std::int64_t r = k * kHexDirs[4][1];
        for (const auto& dir : kHexDirs) {
            for (std::int64_t s = 0; s < k; ++s) {
                if (std::ssize(centers) < n) {
                    centers.push_back(axial_to_xy(q, r, spacing));
                }
                q += dir[0];
                r += dir[1];
            }
        }
    }
    return centers;
}

}  // namespace

std::string_view strategy_name(Strategy s) {
    switch (s) {
        case Strategy::kHex: return "hex";
        case Strategy::kGreedyRadial: return "greedy-radial";
        case Strategy::kGrid: return "grid";
    }
    return "unknown";
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
    if (name == "hex") return Strategy::kHex;
    if (name == "greedy-radial") return Strategy::kGreedyRadial;
    if (name == "grid") return Strategy::kGrid;
    return std::nullopt;
}

Layout hex_layout(std::int64_t pieces, double diameter, double jitter, std::uint64_t seed) {
    require_pieces(pieces);
    require_positive(diameter, "diameter");
    if (!(jitter >= 0.0) || jitter >= 1.0) {
        throw std::domain_error("jitter must be in [0, 1)");
    }
    const double edge = diameter / std::numbers::sqrt2;
    const double jitter_radius = jitter * diameter * (1.0 - std::numbers::sqrt2 / 2.0);

    Rng rng(seed);
    Layout out;
    out.piece_edge = edge;
    out.strategy = Strategy::kHex;
    out.seed = seed;
    out.pieces.reserve(static_cast<std::size_t>(pieces));
    for (geom::Vec2 c : hex_spiral_centers(pieces, diameter)) {
        const double rot = rng.uniform(kHalfPi);
        if (jitter > 0.0) {
            const double angle = rng.uniform(kTwoPi);
            const double radius = jitter_radius * std::sqrt(rng.uniform());
            c.x += radius * std::cos(angle);
            c.y += radius * std::sin(angle);
        }
        out.pieces.push_back(geom::OrientedSquare{c, edge, rot});
    }
    return out;
}

Layout pack_random(std::int64_t pieces, double edge, const SimParams& params) {
    require_pieces(pieces);
    require_positive(edge, "edge");
    if (params.candidate_angles < 1) {
        throw std::domain_error("candidate_angles must be >= 1");
    }
    require_positive(params.radial_step, "radial_step");

    const double diag = edge * std::numbers::sqrt2;
    const double step = params.radial_step * diag;
    // Below this center distance two squares interpenetrate by > 1e-6 on every
    // SAT axis regardless of rotation, so the test can be skipped.
    const double sure_overlap2 = (edge - 1e-6) * (edge - 1e-6);
    const double diag2 = diag * diag;

    Rng rng(params.seed);
    Layout out;
    out.piece_edge = edge;
    out.strategy = Strategy::kGreedyRadial;
    out.seed = params.seed;
    out.pieces.reserve(static_cast<std::size_t>(pieces));
    SpatialHash hash(diag);

    std::vector<double> angles(static_cast<std::size_t>(params.candidate_angles));
    int last_blocker = -1;

    const auto overlaps_piece = [&](const geom::OrientedSquare& cand, int j) {
        const geom::OrientedSquare& p = out.pieces[static_cast<std::size_t>(j)];
        const double dx = p.center.x - cand.center.x;
        const double dy = p.center.y - cand.center.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 >= diag2) return false;
        if (d2 <= sure_overlap2) return true;
        return geom::squares_overlap(cand, p);
    };

    const auto blocked = [&](const geom::OrientedSquare& cand) {
        // Consecutive march steps are usually stopped by the same piece; try
        // the cached blocker before the full neighborhood query.
        if (last_blocker >= 0 && overlaps_piece(cand, last_blocker)) return true;
        return hash.any_neighbor(cand.center, [&](int j) {
            if (j != last_blocker && overlaps_piece(cand, j)) {
                last_blocker = j;
                return true;
            }
            return false;
        });
    };

    for (std::int64_t i = 0; i < pieces; ++i) {
        const double rot = rng.uniform(kHalfPi);
        for (double& a : angles) a = rng.uniform(kTwoPi);

        std::int64_t best_steps = std::numeric_limits<std::int64_t>::max();
        geom::Vec2 best_center{0.0, 0.0};
        for (const double angle : angles) {
            const double ux = std::cos(angle);
            const double uy = std::sin(angle);
            for (std::int64_t m = 0; m < best_steps; ++m) {
                const double r = static_cast<double>(m) * step;
                const geom::OrientedSquare cand{{r * ux, r * uy}, edge, rot};
                if (!blocked(cand)) {
                    best_steps = m;
                    best_center = cand.center;
                    break;
                }
            }
            if (best_steps == 0) break;  // cannot improve on the origin
        }
        out.pieces.push_back(geom::OrientedSquare{best_center, edge, rot});
        hash.insert(static_cast<int>(i), best_center);
        last_blocker = -1;
    }
    return out;
}

Layout pack_grid(std::int64_t pieces, double edge, double gap) {
    require_pieces(pieces);
    require_positive(edge, "edge");
    if (!(gap >= 0.0) || !std::isfinite(gap)) {
        throw std::domain_error("gap must be >= 0");
    }
    std::int64_t cols = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(pieces))));
    while (cols * cols < pieces) ++cols;
    while (cols > 1 && (cols - 1) * (cols - 1) >= pieces) --cols;

    const double pitch = edge + gap;
    Layout out;
    out.piece_edge = edge;
    out.strategy = Strategy::kGrid;
    out.seed = 0;
    out.pieces.reserve(static_cast<std::size_t>(pieces));
    for (std::int64_t i = 0; i < pieces; ++i) {
        const double x = static_cast<double>(i % cols) * pitch;
        const double y = static_cast<double>(i / cols) * pitch;
        out.pieces.push_back(geom::OrientedSquare{{x, y}, edge, 0.0});
    }
    return out;
}

SimResult measure_layout(const Layout& layout, double assembled_area) {
    require_positive(assembled_area, "assembled_area");
    if (layout.pieces.empty()) {
        throw std::domain_error("measure_layout: empty layout");
    }
    std::vector<geom::Vec2> corners;
    corners.reserve(layout.pieces.size() * 4);
    for (const geom::OrientedSquare& s : layout.pieces) {
        for (const geom::Vec2& c : s.corners()) corners.push_back(c);
    }

    SimResult res;
    res.hull_area = geom::polygon_area(geom::convex_hull(corners));
    res.extents = geom::principal_extents(corners, 0.0);
    res.ellipse_area = geom::ellipse_area(res.extents.major, res.extents.minor);
    res.spread_ratio_hull = res.hull_area / assembled_area;
    res.spread_ratio_ellipse = res.ellipse_area / assembled_area;
    res.pieces = static_cast<std::int64_t>(layout.pieces.size());
    res.seed = layout.seed;
    return res;
}

namespace {

Stats stats_of(std::span<const SimResult> results, double SimResult::*field) {
    Stats st;
    st.min = std::numeric_limits<double>::infinity();
    st.max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (const SimResult& r : results) {
        const double v = r.*field;
        sum += v;
        st.min = std::min(st.min, v);
        st.max = std::max(st.max, v);
    }
    const double n = static_cast<double>(results.size());
    st.mean = sum / n;
    if (results.size() > 1) {
        double ss = 0.0;
        for (const SimResult& r : results) {
            const double d = r.*field - st.mean;
            ss += d * d;
        }
        st.stddev = std::sqrt(ss / (n - 1.0));
    }
    return st;
}

}  // namespace

RatioStats ratio_statistics(std::span<const SimResult> results) {
    if (results.empty()) {
        throw std::domain_error("ratio_statistics: empty result list");
    }
    return RatioStats{stats_of(results, &SimResult::spread_ratio_hull),
                      stats_of(results, &SimResult::spread_ratio_ellipse)};
}

std::string layout_to_csv(const Layout& layout) {
    std::string out = "idx,cx_cm,cy_cm,edge_cm,rot_rad\n";
    char buf[160];
    for (std::size_t i = 0; i < layout.pieces.size(); ++i) {
        const geom::OrientedSquare& s = layout.pieces[i];
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g,%.17g\n", i, s.center.x,
                      s.center.y, s.edge, s.rotation);
        out += buf;
    }
    return out;
}

void write_layout_csv(const Layout& layout, const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open for writing: " + path.string());
    file << layout_to_csv(layout);
    if (!file.good()) throw IoError("write failed: " + path.string());
}

}  // namespace puzzlespread::pack
