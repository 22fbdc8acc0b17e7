#include "inscribe/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace inscribe {

double norm(Point p) { return std::hypot(p.x, p.y); }

namespace {

double signed_area2(const std::vector<Point>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point a = v[i];
        const Point b = v[(i + 1) % v.size()];
        s += cross(a, b);
    }
    return s;
}

int orientation(Point a, Point b, Point c, double tol) {
    const double d = cross(b - a, c - a);
    const double scale = std::max({1.0, norm(b - a), norm(c - a)});
    if (d > tol * scale) return 1;
    if (d < -tol * scale) return -1;
    return 0;
}

bool segments_touch(const Segment& s, const Segment& t, double tol) {
    const int o1 = orientation(s.a, s.b, t.a, tol);
    const int o2 = orientation(s.a, s.b, t.b, tol);
    const int o3 = orientation(t.a, t.b, s.a, tol);
    const int o4 = orientation(t.a, t.b, s.b, tol);
    if (o1 != o2 && o3 != o4 && o1 * o2 != 0 && o3 * o4 != 0) return true;
    return point_on_segment(t.a, s, tol) || point_on_segment(t.b, s, tol) ||
           point_on_segment(s.a, t, tol) || point_on_segment(s.b, t, tol);
}

std::array<Point, 4> box_corners(const Box& b) {
    if (b.dim() != 2) throw Error("geometry operations require 2-D boxes");
    return {Point{b.lo[0], b.lo[1]}, Point{b.hi[0], b.lo[1]}, Point{b.hi[0], b.hi[1]},
            Point{b.lo[0], b.hi[1]}};
}

}  // namespace

Polygon::Polygon(std::vector<Point> vertices) : v_(std::move(vertices)) {
    if (v_.size() < 3) throw Error("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const Point e = v_[(i + 1) % v_.size()] - v_[i];
        if (norm(e) <= kIncidenceTol) throw Error("polygon has a zero-length edge");
    }
    if (signed_area2(v_) <= 0.0)
        throw Error("polygon must be counterclockwise with positive area");
    // Spikes: consecutive edges folding back onto each other.
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const Point e0 = v_[(i + 1) % v_.size()] - v_[i];
        const Point e1 = v_[(i + 2) % v_.size()] - v_[(i + 1) % v_.size()];
        if (std::abs(cross(e0, e1)) <= kIncidenceTol * norm(e0) * norm(e1) && dot(e0, e1) < 0.0)
            throw Error("polygon is self-intersecting (spike at vertex " + std::to_string(i + 1) + ")");
    }
    // Simplicity: no two non-adjacent edges may meet.
    const std::size_t n = v_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (segments_touch(edge(i), edge(j), kIncidenceTol))
                throw Error("polygon is self-intersecting (edges " + std::to_string(i) + " and " +
                            std::to_string(j) + ")");
        }
    }
}

double Polygon::area() const { return 0.5 * signed_area2(v_); }

Box Polygon::bounding_box() const {
    double xlo = v_[0].x, xhi = v_[0].x, ylo = v_[0].y, yhi = v_[0].y;
    for (const Point& p : v_) {
        xlo = std::min(xlo, p.x);
        xhi = std::max(xhi, p.x);
        ylo = std::min(ylo, p.y);
        yhi = std::max(yhi, p.y);
    }
    return Box({xlo, ylo}, {xhi, yhi});
}

double ConvexPolygon::area() const {
    if (v.size() < 3) return 0.0;
    return 0.5 * signed_area2(v);
}

double FaceLine::origin_distance() const {
    const double n = norm(normal);
    return n > 0.0 ? offset / n : 0.0;
}

StarPattern StarPattern::validate(Polygon p) {
    StarPattern k(std::move(p));
    const auto& v = k.poly_.vertices();
    if (point_in_polygon(k.poly_, Point{0.0, 0.0}) != PointLocation::Inside)
        throw NotStarShapedError("pattern origin must lie strictly inside the polygon");

    k.delta_ = std::numeric_limits<double>::infinity();
    k.min_vertex_norm_ = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point a = v[i];
        const Point b = v[(i + 1) % v.size()];
        const Point e = b - a;
        const double c = cross(a, b);  // equals dot(a, outward normal)
        const double dist = c / norm(e);
        if (std::abs(dist) <= kIncidenceTol)
            throw CoplanarFaceError("pattern edge " + std::to_string(i) +
                                    " lies on a line through the origin");
        if (dist < 0.0)
            throw NotStarShapedError("pattern boundary is not fully visible from the origin (edge " +
                                     std::to_string(i) + ")");
        k.faces_.push_back(FaceLine{Point{e.y, -e.x}, c});
        k.cones_.push_back(ConvexPolygon{{Point{0.0, 0.0}, a, b}});
        k.delta_ = std::min(k.delta_, dist);
        k.min_vertex_norm_ = std::min(k.min_vertex_norm_, norm(a));
    }
    k.lipschitz_ = 1.0 / k.delta_;
    return k;
}

double StarPattern::gauge(Point y) const {
    if (std::abs(y.x) < kIncidenceTol && std::abs(y.y) < kIncidenceTol) return 0.0;
    const auto& v = poly_.vertices();
    const std::size_t n = v.size();
    std::size_t best = 0;
    double best_slack = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double g0 = cross(v[i], y);
        const double g1 = cross(y, v[(i + 1) % n]);
        if (g0 >= 0.0 && g1 >= 0.0) {
            best = i;
            best_slack = 0.0;
            break;
        }
        // Nearest cone as a fallback against tiny negative crossings.
        const double slack = std::min(g0 / norm(v[i]), g1 / norm(v[(i + 1) % n])) / norm(y);
        if (slack > best_slack) {
            best_slack = slack;
            best = i;
        }
    }
    const FaceLine& f = faces_[best];
    return dot(y, f.normal) / f.offset;
}

double lipschitz_constant(const StarPattern& k) { return k.lipschitz(); }

PointLocation point_in_polygon(const Polygon& q, Point x) {
    const std::size_t n = q.size();
    for (std::size_t i = 0; i < n; ++i)
        if (point_on_segment(x, q.edge(i))) return PointLocation::OnBoundary;
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = q.vertex(i);
        const Point b = q.vertex(i + 1);
        if ((a.y > x.y) != (b.y > x.y)) {
            const double t = (x.y - a.y) / (b.y - a.y);
            const double xi = a.x + t * (b.x - a.x);
            if (xi > x.x) inside = !inside;
        }
    }
    return inside ? PointLocation::Inside : PointLocation::Outside;
}

BoxRelation box_vs_convex(const Box& b, const ConvexPolygon& c) {
    const auto corners = box_corners(b);
    if (c.degenerate()) {
        if (c.v.empty()) return BoxRelation::Outside;
        if (c.v.size() == 1) {
            const Point p = c.v[0];
            const bool hit = p.x >= b.lo[0] - kIncidenceTol && p.x <= b.hi[0] + kIncidenceTol &&
                             p.y >= b.lo[1] - kIncidenceTol && p.y <= b.hi[1] + kIncidenceTol;
            return hit ? BoxRelation::Straddles : BoxRelation::Outside;
        }
        return segment_intersects_box(Segment{c.v.front(), c.v.back()}, b)
                   ? BoxRelation::Straddles
                   : BoxRelation::Outside;
    }
    bool inside_all = true;
    for (std::size_t i = 0; i < c.v.size(); ++i) {
        const Point a = c.v[i];
        const Point e = c.v[(i + 1) % c.v.size()] - a;
        const double len = norm(e);
        double dmin = std::numeric_limits<double>::infinity();
        double dmax = -std::numeric_limits<double>::infinity();
        for (const Point& p : corners) {
            const double d = cross(e, p - a) / len;  // signed distance, positive inside
            dmin = std::min(dmin, d);
            dmax = std::max(dmax, d);
        }
        if (dmax <= -kIncidenceTol) return BoxRelation::Outside;
        // Closed containment: corners on the face line still count as inside,
        // otherwise boxes flush with an element edge could never resolve.
        if (dmin < -kIncidenceTol) inside_all = false;
    }
    return inside_all ? BoxRelation::Inside : BoxRelation::Straddles;
}

BoxRelation box_vs_polygon(const Box& b, const Polygon& q) {
    const auto corners = box_corners(b);
    int in = 0, out = 0;
    for (const Point& p : corners) {
        switch (point_in_polygon(q, p)) {
            case PointLocation::Inside: ++in; break;
            case PointLocation::Outside: ++out; break;
            case PointLocation::OnBoundary: return BoxRelation::Straddles;
        }
    }
    if (in != 0 && out != 0) return BoxRelation::Straddles;
    for (std::size_t i = 0; i < q.size(); ++i)
        if (segment_intersects_box(q.edge(i), b)) return BoxRelation::Straddles;
    return in == 4 ? BoxRelation::Inside : BoxRelation::Outside;
}

namespace {

// Clips [a,b] against the half-plane g(z) >= 0 where g is linear with the
// given endpoint values. Returns false when nothing remains.
bool clip_halfplane(Point& a, Point& b, double ga, double gb) {
    if (ga < 0.0 && gb < 0.0) return false;
    if (ga >= 0.0 && gb >= 0.0) return true;
    const double t = ga / (ga - gb);
    const Point p{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    if (ga < 0.0)
        a = p;
    else
        b = p;
    return true;
}

}  // namespace

double radius_value(const Polygon& q, const StarPattern& k, Point x) {
    if (point_in_polygon(q, x) == PointLocation::Outside) return kInfeasibleRadius;
    const auto& kv = k.polygon().vertices();
    const auto& faces = k.face_lines();
    const std::size_t nc = kv.size();
    double r = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < q.size(); ++e) {
        const Segment s = q.edge(e);
        const Point a0 = s.a - x;
        const Point b0 = s.b - x;
        for (std::size_t c = 0; c < nc; ++c) {
            const Point v0 = kv[c];
            const Point v1 = kv[(c + 1) % nc];
            Point a = a0, b = b0;
            if (!clip_halfplane(a, b, cross(v0, a), cross(v0, b))) continue;
            if (!clip_halfplane(a, b, cross(a, v1), cross(b, v1))) continue;
            const FaceLine& f = faces[c];
            r = std::min(r, std::min(dot(a, f.normal), dot(b, f.normal)) / f.offset);
        }
    }
    return std::max(r, 0.0);
}

std::vector<ConvexPolygon> fan_decompose(const StarPattern& k) { return k.cones(); }

ConvexPolygon reflect(const ConvexPolygon& p) {
    ConvexPolygon out;
    out.v.reserve(p.v.size());
    for (const Point& q : p.v) out.v.push_back(-q);
    return out;
}

std::vector<ConvexPolygon> reflect(const std::vector<ConvexPolygon>& parts) {
    std::vector<ConvexPolygon> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(reflect(p));
    return out;
}

ConvexPolygon scale(const ConvexPolygon& p, double t) {
    if (t < 0.0) throw Error("scale factor must be non-negative");
    if (t == 0.0) return ConvexPolygon{{Point{0.0, 0.0}}};
    ConvexPolygon out;
    out.v.reserve(p.v.size());
    for (const Point& q : p.v) out.v.push_back(t * q);
    return out;
}

ConvexPolygon convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Point a, Point b) {
                              return std::abs(a.x - b.x) <= kIncidenceTol &&
                                     std::abs(a.y - b.y) <= kIncidenceTol;
                          }),
              pts.end());
    if (pts.size() < 3) return ConvexPolygon{std::move(pts)};
    std::vector<Point> hull(2 * pts.size());
    std::size_t h = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {  // lower chain
        while (h >= 2 && cross(hull[h - 1] - hull[h - 2], pts[i] - hull[h - 2]) <= kIncidenceTol) --h;
        hull[h++] = pts[i];
    }
    const std::size_t lower = h + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {  // upper chain
        while (h >= lower && cross(hull[h - 1] - hull[h - 2], pts[i] - hull[h - 2]) <= kIncidenceTol) --h;
        hull[h++] = pts[i];
    }
    hull.resize(h - 1);
    return ConvexPolygon{std::move(hull)};
}

ConvexPolygon convex_minkowski_sum(const Segment& a, const ConvexPolygon& b) {
    std::vector<Point> pts;
    pts.reserve(2 * std::max<std::size_t>(b.v.size(), 1));
    if (b.v.empty()) {
        pts.push_back(a.a);
        pts.push_back(a.b);
    } else {
        for (const Point& q : b.v) {
            pts.push_back(a.a + q);
            pts.push_back(a.b + q);
        }
    }
    return convex_hull(std::move(pts));
}

bool point_on_segment(Point p, const Segment& s, double tol) {
    const Point e = s.b - s.a;
    const double len2 = dot(e, e);
    double t = len2 > 0.0 ? dot(p - s.a, e) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Point nearest = s.a + t * e;
    return norm(p - nearest) <= tol;
}

bool segment_intersects_box(const Segment& s, const Box& b, double tol) {
    const double xlo = b.lo[0] - tol, xhi = b.hi[0] + tol;
    const double ylo = b.lo[1] - tol, yhi = b.hi[1] + tol;
    const Point d = s.b - s.a;
    double t0 = 0.0, t1 = 1.0;
    const double p[4] = {-d.x, d.x, -d.y, d.y};
    const double q[4] = {s.a.x - xlo, xhi - s.a.x, s.a.y - ylo, yhi - s.a.y};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) return false;
            continue;
        }
        const double r = q[i] / p[i];
        if (p[i] < 0.0) {
            if (r > t1) return false;
            t0 = std::max(t0, r);
        } else {
            if (r < t0) return false;
            t1 = std::min(t1, r);
        }
    }
    return t0 <= t1;
}

bool point_in_convex(Point p, const ConvexPolygon& c, double tol) {
    if (c.v.empty()) return false;
    if (c.v.size() == 1) return norm(p - c.v[0]) <= tol;
    if (c.v.size() == 2) return point_on_segment(p, Segment{c.v[0], c.v[1]}, tol);
    for (std::size_t i = 0; i < c.v.size(); ++i) {
        const Point a = c.v[i];
        const Point e = c.v[(i + 1) % c.v.size()] - a;
        if (cross(e, p - a) / norm(e) < -tol) return false;
    }
    return true;
}

}  // namespace inscribe
