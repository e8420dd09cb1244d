#include "puzzlespread/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace puzzlespread::geom {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_finite(Vec2 p, const char* what) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw std::invalid_argument(std::string(what) + ": non-finite coordinate");
    }
}

// Projection interval of a square onto unit axis u.
struct Interval {
    double lo, hi;
};

Interval project(const std::array<Vec2, 4>& corners, Vec2 u) {
    double lo = corners[0].dot(u);
    double hi = lo;
    for (int i = 1; i < 4; ++i) {
        const double t = corners[i].dot(u);
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    return {lo, hi};
}

}  // namespace

double Vec2::norm() const { return std::hypot(x, y); }

OrientedSquare OrientedSquare::make(Vec2 center, double edge, double rotation) {
    require_finite(center, "OrientedSquare center");
    if (!(edge > 0.0) || !std::isfinite(edge)) {
        throw std::invalid_argument("OrientedSquare: edge must be positive and finite");
    }
    if (!std::isfinite(rotation)) {
        throw std::invalid_argument("OrientedSquare: non-finite rotation");
    }
    double r = std::fmod(rotation, kHalfPi);
    if (r < 0.0) r += kHalfPi;
    if (r >= kHalfPi) r = 0.0;  // fmod rounding can land exactly on the bound
    return OrientedSquare{center, edge, r};
}

std::array<Vec2, 4> OrientedSquare::corners() const {
    const double h = edge / 2.0;
    const double c = std::cos(rotation);
    const double s = std::sin(rotation);
    // CCW from the (+h,+h) corner.
    return {Vec2{center.x + h * c - h * s, center.y + h * s + h * c},
            Vec2{center.x - h * c - h * s, center.y - h * s + h * c},
            Vec2{center.x - h * c + h * s, center.y - h * s - h * c},
            Vec2{center.x + h * c + h * s, center.y + h * s - h * c}};
}

double OrientedSquare::diagonal() const { return edge * std::numbers::sqrt2; }

double squares_overlap_margin(const OrientedSquare& a, const OrientedSquare& b) {
    const std::array<Vec2, 4> ca = a.corners();
    const std::array<Vec2, 4> cb = b.corners();
    // Two distinct edge normals per square (the other two are negations).
    const std::array<Vec2, 4> axes = {
        Vec2{std::cos(a.rotation), std::sin(a.rotation)},
        Vec2{-std::sin(a.rotation), std::cos(a.rotation)},
        Vec2{std::cos(b.rotation), std::sin(b.rotation)},
        Vec2{-std::sin(b.rotation), std::cos(b.rotation)},
    };
    double margin = std::numeric_limits<double>::infinity();
    for (const Vec2 u : axes) {
        const Interval ia = project(ca, u);
        const Interval ib = project(cb, u);
        margin = std::min(margin, std::min(ia.hi, ib.hi) - std::max(ia.lo, ib.lo));
    }
    return margin;
}

bool squares_overlap(const OrientedSquare& a, const OrientedSquare& b) {
    return squares_overlap_margin(a, b) > kOverlapTol;
}

Polygon convex_hull(std::span<const Vec2> points) {
    if (points.size() < 3) {
        throw std::invalid_argument("convex_hull: need at least 3 points");
    }
    std::vector<Vec2> pts(points.begin(), points.end());
    for (const Vec2& p : pts) require_finite(p, "convex_hull point");
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
              pts.end());

    const auto turn = [](Vec2 o, Vec2 a, Vec2 b) { return (a - o).cross(b - o); };

    std::vector<Vec2> hull;
    hull.reserve(pts.size() + 1);
    for (const Vec2& p : pts) {  // lower chain
        while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), p) <= 0.0) {
            hull.pop_back();
        }
        hull.push_back(p);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper chain
        while (hull.size() >= lower && turn(hull[hull.size() - 2], hull.back(), *it) <= 0.0) {
            hull.pop_back();
        }
        hull.push_back(*it);
    }
    hull.pop_back();  // last point repeats the first

    if (hull.size() < 3) {
        throw std::invalid_argument("convex_hull: degenerate input (collinear points)");
    }
    return Polygon{std::move(hull)};
}

double polygon_area(const Polygon& p) {
    if (p.vertices.size() < 3) {
        throw std::domain_error("polygon_area: fewer than 3 vertices");
    }
    double twice = 0.0;
    for (std::size_t i = 0, n = p.vertices.size(); i < n; ++i) {
        twice += p.vertices[i].cross(p.vertices[(i + 1) % n]);
    }
    const double area = twice / 2.0;
    if (!(area > 0.0)) {
        throw std::domain_error("polygon_area: degenerate polygon (non-positive area)");
    }
    return area;
}

SpreadExtents principal_extents(std::span<const Vec2> points, double pad) {
    if (points.size() < 2) {
        throw std::invalid_argument("principal_extents: need at least 2 points");
    }
    if (pad < 0.0 || !std::isfinite(pad)) {
        throw std::invalid_argument("principal_extents: pad must be >= 0");
    }
    Vec2 mean{0.0, 0.0};
    for (const Vec2& p : points) {
        require_finite(p, "principal_extents point");
        mean = mean + p;
    }
    mean = mean * (1.0 / static_cast<double>(points.size()));

    double cxx = 0.0, cyy = 0.0, cxy = 0.0;
    for (const Vec2& p : points) {
        const Vec2 d = p - mean;
        cxx += d.x * d.x;
        cyy += d.y * d.y;
        cxy += d.x * d.y;
    }
    // Eigenvector of the larger eigenvalue of the 2x2 covariance, closed form.
    const double phi = 0.5 * std::atan2(2.0 * cxy, cxx - cyy);
    const Vec2 u{std::cos(phi), std::sin(phi)};
    const Vec2 v{-u.y, u.x};

    double ulo = 0.0, uhi = 0.0, vlo = 0.0, vhi = 0.0;
    bool first = true;
    for (const Vec2& p : points) {
        const Vec2 d = p - mean;
        const double a = d.dot(u);
        const double b = d.dot(v);
        if (first) {
            ulo = uhi = a;
            vlo = vhi = b;
            first = false;
        } else {
            ulo = std::min(ulo, a);
            uhi = std::max(uhi, a);
            vlo = std::min(vlo, b);
            vhi = std::max(vhi, b);
        }
    }
    const double span_u = uhi - ulo;
    const double span_v = vhi - vlo;
    if (span_u <= 0.0 && span_v <= 0.0) {
        throw std::invalid_argument("principal_extents: all points coincident");
    }
    // The eigen-axis ordering is by variance; report extents by peak-to-peak
    // span so that major >= minor always holds.
    SpreadExtents e;
    if (span_u >= span_v) {
        e.major = span_u + 2.0 * pad;
        e.minor = span_v + 2.0 * pad;
        e.major_axis = u;
    } else {
        e.major = span_v + 2.0 * pad;
        e.minor = span_u + 2.0 * pad;
        e.major_axis = v;
    }
    return e;
}

double ellipse_area(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) {
        throw std::domain_error("ellipse_area: dimensions must be positive");
    }
    return std::numbers::pi / 4.0 * x * y;
}

double rectangle_area(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) {
        throw std::domain_error("rectangle_area: dimensions must be positive");
    }
    return x * y;
}

}  // namespace puzzlespread::geom
