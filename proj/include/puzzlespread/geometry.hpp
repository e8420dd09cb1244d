#pragma once

#include <array>
#include <span>
#include <vector>

namespace puzzlespread::geom {

/// Interpenetration below this (in cm, measured on SAT projection axes) counts
/// as touching, not overlap. Keeps packers from livelocking on FP ties.
inline constexpr double kOverlapTol = 1e-9;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const;
    double norm2() const { return x * x + y * y; }
};

using Point2 = Vec2;

/// A square piece: center, edge length (cm) and rotation normalized to
/// [0, pi/2) — a square has 4-fold symmetry, wider angles are redundant.
struct OrientedSquare {
    Vec2 center;
    double edge = 1.0;
    double rotation = 0.0;

    /// Validates edge > 0 and finite fields, normalizes rotation into [0, pi/2).
    static OrientedSquare make(Vec2 center, double edge, double rotation);

    std::array<Vec2, 4> corners() const;
    double diagonal() const;
};

/// Simple polygon, vertices in counter-clockwise order.
struct Polygon {
    std::vector<Vec2> vertices;
};

/// Peak-to-peak extents of a point set along its principal axes.
struct SpreadExtents {
    double major = 0.0;
    double minor = 0.0;
    Vec2 major_axis{1.0, 0.0};  // unit vector
};

/// Signed SAT margin over the 4 distinct edge normals: the smallest projection
/// overlap. Positive = interpenetration depth, negative = separation gap.
double squares_overlap_margin(const OrientedSquare& a, const OrientedSquare& b);

/// True iff the squares intersect with positive area. Touching along an edge
/// or corner (projection overlap <= kOverlapTol) does not count.
bool squares_overlap(const OrientedSquare& a, const OrientedSquare& b);

/// Monotone-chain convex hull, O(n log n). Output is CCW with no collinear
/// triples. Throws std::invalid_argument for < 3 points or all-collinear input.
Polygon convex_hull(std::span<const Vec2> points);

/// Shoelace area of a simple CCW polygon. Throws std::domain_error if the
/// polygon is degenerate (fewer than 3 vertices or non-positive area).
double polygon_area(const Polygon& p);

/// Extents along the principal axes of the point set, emulating a human
/// measuring the long and short axis of a blob of pieces. `pad` (cm) is added
/// on each side, so 2*pad per extent; pass the piece half-diagonal when the
/// points are piece centers, 0 when they are piece corners.
/// Throws std::invalid_argument for < 2 points or all-coincident points.
SpreadExtents principal_extents(std::span<const Vec2> points, double pad);

/// (pi/4)·x·y — area of an ellipse from its two full extents, for spreads
/// measured as an oval blob.
double ellipse_area(double x, double y);

/// x·y — the variant for spreads measured as a rough rectangle.
double rectangle_area(double x, double y);

}  // namespace puzzlespread::geom
