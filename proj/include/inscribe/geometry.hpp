#pragma once

#include <cstddef>
#include <vector>

#include "inscribe/box.hpp"
#include "inscribe/error.hpp"

namespace inscribe {

/// Absolute tolerance for incidence predicates (point-on-segment, face
/// membership). Value comparisons elsewhere use 1e-9 relative.
inline constexpr double kIncidenceTol = 1e-12;

/// Sentinel returned by radius_value for points outside the contour.
inline constexpr double kInfeasibleRadius = -1.0;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline Point operator-(Point p) { return {-p.x, -p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point p);

struct Segment {
    Point a;
    Point b;
};

/// Simple counterclockwise polygon with strictly positive area, closed
/// implicitly (last vertex connects to the first).
class Polygon {
  public:
    explicit Polygon(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    Point vertex(std::size_t i) const { return v_[i % v_.size()]; }
    Segment edge(std::size_t i) const { return {v_[i], v_[(i + 1) % v_.size()]}; }

    double area() const;
    Box bounding_box() const;

  private:
    std::vector<Point> v_;
};

/// Convex vertex list in CCW order. Degenerate instances (a single point or
/// a segment) are allowed; they arise from zero scaling and from Minkowski
/// sums of degenerate parts.
struct ConvexPolygon {
    std::vector<Point> v;

    std::size_t size() const { return v.size(); }
    double area() const;
    bool degenerate() const { return v.size() < 3; }
};

/// Outward edge line {z : dot(z, normal) = offset} with offset > 0 for edges
/// of a star polygon around the origin.
struct FaceLine {
    Point normal;
    double offset = 0.0;

    double origin_distance() const;
};

/// Star-shaped polygon with the origin in its kernel: every boundary point is
/// visible from 0 and no edge line passes through 0. Carries the fan
/// decomposition, per-edge line data and the radius-value Lipschitz constant
/// L = 1/Delta, Delta being the least origin-to-edge-line distance.
class StarPattern {
  public:
    /// Validates star-shapedness: the origin must be strictly interior and
    /// every fan triangle (0, v_i, v_{i+1}) positively oriented. Throws
    /// NotStarShapedError / CoplanarFaceError otherwise.
    static StarPattern validate(Polygon p);

    const Polygon& polygon() const { return poly_; }
    const std::vector<ConvexPolygon>& cones() const { return cones_; }
    const std::vector<FaceLine>& face_lines() const { return faces_; }
    double min_face_distance() const { return delta_; }
    double lipschitz() const { return lipschitz_; }
    double min_vertex_norm() const { return min_vertex_norm_; }

    /// Minkowski functional gamma(y) = min{ l >= 0 : y in l*K }. Linear within
    /// each fan cone: gamma(y) = dot(y, n)/c for the cone's edge line.
    double gauge(Point y) const;

  private:
    Polygon poly_;
    std::vector<ConvexPolygon> cones_;
    std::vector<FaceLine> faces_;
    double delta_ = 0.0;
    double lipschitz_ = 0.0;
    double min_vertex_norm_ = 0.0;

    explicit StarPattern(Polygon p) : poly_(std::move(p)) {}
};

inline StarPattern validate_star_shaped(Polygon p) { return StarPattern::validate(std::move(p)); }
inline double gauge(const StarPattern& k, Point y) { return k.gauge(y); }
double lipschitz_constant(const StarPattern& k);

enum class PointLocation { Inside, Outside, OnBoundary };

/// Even-odd ray cast along +x. An edge counts iff one endpoint is strictly
/// above the ray and the other at-or-below it; OnBoundary is detected first
/// by a point-on-segment test with absolute tolerance kIncidenceTol.
PointLocation point_in_polygon(const Polygon& q, Point x);

enum class BoxRelation { Inside, Outside, Straddles };

/// Half-space test of a 2-D box against a convex polygon. Inside iff every
/// corner satisfies every edge half-plane; Outside iff a single half-plane
/// excludes the whole box. Conservative: ambiguous cases report Straddles.
BoxRelation box_vs_convex(const Box& b, const ConvexPolygon& c);

/// Exact box-against-contour classification: Outside iff all corners are
/// outside and no contour edge meets the box, Inside iff all corners are
/// inside and no edge meets the box, Straddles otherwise.
BoxRelation box_vs_polygon(const Box& b, const Polygon& q);

/// Largest r >= 0 with x + rK inside the contour, or kInfeasibleRadius for
/// x outside it. Evaluated exactly: every contour edge is clipped against
/// every pattern cone; the gauge is linear on each clipped piece, so only
/// sub-segment endpoints are inspected.
double radius_value(const Polygon& q, const StarPattern& k, Point x);

/// Fan triangles (0, v_i, v_{i+1}), one per boundary edge; their union is K.
std::vector<ConvexPolygon> fan_decompose(const StarPattern& k);

/// Pointwise negation. A 180-degree rotation preserves orientation, so CCW
/// input stays CCW.
std::vector<ConvexPolygon> reflect(const std::vector<ConvexPolygon>& parts);
ConvexPolygon reflect(const ConvexPolygon& p);

/// Scales about the origin; t = 0 collapses to the degenerate point {0}.
ConvexPolygon scale(const ConvexPolygon& p, double t);

/// Convex hull of the pairwise endpoint/vertex sums; exact for convex
/// summands. b may be degenerate (sum is then a translation).
ConvexPolygon convex_minkowski_sum(const Segment& a, const ConvexPolygon& b);

/// CCW convex hull (monotone chain); collinear points are dropped.
ConvexPolygon convex_hull(std::vector<Point> pts);

bool point_on_segment(Point p, const Segment& s, double tol = kIncidenceTol);

/// True when the segment meets the solid rectangle [lo,hi] expanded by tol.
bool segment_intersects_box(const Segment& s, const Box& b, double tol = kIncidenceTol);

/// Closed membership in a (possibly degenerate) convex polygon, within tol.
bool point_in_convex(Point p, const ConvexPolygon& c, double tol = kIncidenceTol);

}  // namespace inscribe
