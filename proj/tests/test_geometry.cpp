#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "inscribe/error.hpp"
#include "inscribe/geometry.hpp"

using namespace inscribe;

namespace {

Polygon square(double half) {
    return Polygon({{-half, -half}, {half, -half}, {half, half}, {-half, half}});
}

Polygon four_point_star() {
    return Polygon({{2, 0}, {0.3, 0.3}, {0, 2}, {-0.3, 0.3}, {-2, 0}, {-0.3, -0.3}, {0, -2},
                    {0.3, -0.3}});
}

Polygon radial_polygon(std::mt19937& rng, int n, double rlo, double rhi) {
    std::uniform_real_distribution<double> radius(rlo, rhi);
    std::uniform_real_distribution<double> jitter(-0.25, 0.25);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        const double a = 2.0 * M_PI * (i + jitter(rng)) / n;
        const double r = radius(rng);
        pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    return Polygon(std::move(pts));
}

}  // namespace

TEST_CASE("polygon validation") {
    CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}}), Error);
    // Clockwise input is rejected rather than silently flipped.
    CHECK_THROWS_AS(Polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), Error);
    // Bowtie.
    CHECK_THROWS_AS(Polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), Error);
    const Polygon q = square(2);
    CHECK(q.area() == doctest::Approx(16.0));
}

TEST_CASE("star validation computes cones, face lines and L") {
    const StarPattern unit = validate_star_shaped(square(1));
    CHECK(unit.cones().size() == 4);
    CHECK(unit.min_face_distance() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lipschitz_constant(unit) == doctest::Approx(1.0).epsilon(1e-12));

    const StarPattern half = validate_star_shaped(square(0.5));
    CHECK(lipschitz_constant(half) == doctest::Approx(2.0).epsilon(1e-12));

    const StarPattern star = validate_star_shaped(four_point_star());
    CHECK(star.cones().size() == 8);
    // Every fan triangle is positively oriented (direct computation).
    const auto& v = star.polygon().vertices();
    for (std::size_t i = 0; i < v.size(); ++i)
        CHECK(cross(v[i], v[(i + 1) % v.size()]) > 0.0);

    // Origin outside.
    CHECK_THROWS_AS(validate_star_shaped(Polygon({{1, 1}, {2, 1}, {2, 2}, {1, 2}})),
                    NotStarShapedError);
    // Origin strictly inside but one edge radial, so its line passes
    // through the origin.
    CHECK_THROWS_AS(validate_star_shaped(Polygon(
                        {{1, 0.5}, {2, 1}, {0, 3}, {-2, 0}, {0, -2}})),
                    CoplanarFaceError);
    // Boundary not fully visible from the origin: a deep notch reaching
    // behind it.
    CHECK_THROWS_AS(validate_star_shaped(Polygon(
                        {{2, -2}, {2, 2}, {0.2, 0.1}, {-2, 2}, {-2, -2}})),
                    NotStarShapedError);
}

TEST_CASE("gauge of the unit square is the max norm") {
    const StarPattern k = validate_star_shaped(square(1));
    CHECK(gauge(k, {0.5, 0.25}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(gauge(k, {0, 0}) == 0.0);
    const StarPattern star = validate_star_shaped(four_point_star());
    CHECK(gauge(star, {2, 0}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gauge scaling and membership properties") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> coord(-3, 3), tdist(0, 4);
    const StarPattern patterns[] = {validate_star_shaped(square(1)),
                                    validate_star_shaped(four_point_star()),
                                    validate_star_shaped(radial_polygon(rng, 9, 0.5, 1.4))};
    for (const StarPattern& k : patterns) {
        for (int it = 0; it < 500; ++it) {
            const Point y{coord(rng), coord(rng)};
            const double t = tdist(rng);
            const double gy = gauge(k, y);
            CHECK(gauge(k, t * y) == doctest::Approx(t * gy).epsilon(1e-9));
            if (gy > 1e-6) {
                // y lies on the boundary of gy*K: inside some scaled cone,
                // on its face line.
                bool on_boundary = false;
                for (std::size_t c = 0; c < k.cones().size(); ++c) {
                    if (!point_in_convex(y, scale(k.cones()[c], gy), 1e-9 * std::max(1.0, gy)))
                        continue;
                    const FaceLine& f = k.face_lines()[c];
                    if (std::abs(dot(y, f.normal) / f.offset - gy) <= 1e-9 * std::max(1.0, gy))
                        on_boundary = true;
                }
                CHECK(on_boundary);
            }
        }
    }
}

TEST_CASE("radius value on concentric squares") {
    const Polygon q = square(2);
    const StarPattern k = validate_star_shaped(square(1));
    CHECK(radius_value(q, k, {0, 0}) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(radius_value(q, k, {1, 0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(radius_value(q, k, {3, 0}) == kInfeasibleRadius);
    CHECK(radius_value(q, k, {2, 0}) == doctest::Approx(0.0));
}

TEST_CASE("radius value agrees with dense boundary sampling") {
    const Polygon q = square(2);
    const StarPattern star = validate_star_shaped(four_point_star());

    // Independent oracle: min gauge over sampled contour boundary points.
    auto sampled_radius = [&](Point x) {
        double best = std::numeric_limits<double>::infinity();
        const int per_edge = 25000;
        for (std::size_t e = 0; e < q.size(); ++e) {
            const Segment s = q.edge(e);
            for (int i = 0; i <= per_edge; ++i) {
                const double u = static_cast<double>(i) / per_edge;
                const Point p = s.a + u * (s.b - s.a);
                best = std::min(best, gauge(star, p - x));
            }
        }
        return best;
    };

    // The sampling oracle overestimates by at most the gauge slope times
    // half the sample spacing.
    const double spacing = 4.0 / 25000;
    const double slack = lipschitz_constant(star) * spacing;

    CHECK(radius_value(q, star, {0, 0}) == doctest::Approx(1.0).epsilon(1e-12));
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> coord(-1.9, 1.9);
    for (int it = 0; it < 6; ++it) {
        const Point x = it == 0 ? Point{0, 0} : Point{coord(rng), coord(rng)};
        const double exact = radius_value(q, star, x);
        const double sampled = sampled_radius(x);
        CHECK(exact <= sampled + 1e-9);
        CHECK(exact >= sampled - slack);
    }
}

TEST_CASE("fan decomposition tiles the pattern") {
    const StarPattern unit = validate_star_shaped(square(1));
    const auto fans = fan_decompose(unit);
    REQUIRE(fans.size() == 4);
    for (const auto& f : fans) CHECK(f.area() == doctest::Approx(1.0).epsilon(1e-12));

    const StarPattern tri = validate_star_shaped(Polygon({{1, -1}, {1, 1}, {-2, 0}}));
    CHECK(fan_decompose(tri).size() == 3);

    const StarPattern star = validate_star_shaped(four_point_star());
    double total = 0;
    for (const auto& f : fan_decompose(star)) total += f.area();
    CHECK(total == doctest::Approx(star.polygon().area()).epsilon(1e-9));
}

TEST_CASE("reflect negates vertices and keeps CCW orientation") {
    const ConvexPolygon tri{{{0, 0}, {1, 0}, {0, 1}}};
    const ConvexPolygon r = reflect(tri);
    REQUIRE(r.v.size() == 3);
    CHECK(r.v[0].x == 0.0);
    CHECK(r.v[1].x == -1.0);
    CHECK(r.v[1].y == 0.0);
    CHECK(r.v[2].y == -1.0);
    CHECK(r.area() > 0.0);

    // Central symmetry: the square maps to itself as a set.
    const ConvexPolygon sq{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
    const ConvexPolygon rsq = reflect(sq);
    for (const Point& p : rsq.v) CHECK(point_in_convex(p, sq));

    // Involution.
    const ConvexPolygon rr = reflect(reflect(tri));
    for (std::size_t i = 0; i < tri.v.size(); ++i) {
        CHECK(rr.v[i].x == tri.v[i].x);
        CHECK(rr.v[i].y == tri.v[i].y);
    }
}

TEST_CASE("scale about the origin") {
    const ConvexPolygon sq{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
    const ConvexPolygon doubled = scale(sq, 2);
    CHECK(doubled.v[0].x == -2.0);
    CHECK(doubled.v[2].y == 2.0);
    const ConvexPolygon same = scale(sq, 1);
    CHECK(same.v[3].y == 1.0);
    const ConvexPolygon point = scale(sq, 0);
    REQUIRE(point.v.size() == 1);
    CHECK(point.v[0].x == 0.0);
    CHECK(point.degenerate());
    CHECK_THROWS_AS(scale(sq, -0.5), Error);
}

TEST_CASE("convex minkowski sum examples") {
    const ConvexPolygon sq{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
    const ConvexPolygon rect = convex_minkowski_sum(Segment{{0, 0}, {1, 0}}, sq);
    REQUIRE(rect.v.size() == 4);
    for (const Point& p : {Point{-1, -1}, Point{2, -1}, Point{2, 1}, Point{-1, 1}})
        CHECK(point_in_convex(p, rect));
    CHECK(rect.area() == doctest::Approx(6.0).epsilon(1e-12));

    const ConvexPolygon translated =
        convex_minkowski_sum(Segment{{0, 0}, {1, 0}}, ConvexPolygon{{{5, 7}}});
    REQUIRE(translated.v.size() == 2);
    CHECK(point_on_segment({5, 7}, Segment{translated.v[0], translated.v[1]}));
    CHECK(point_on_segment({6, 7}, Segment{translated.v[0], translated.v[1]}));

    const ConvexPolygon quad =
        convex_minkowski_sum(Segment{{0, 0}, {0, 1}}, ConvexPolygon{{{0, 0}, {1, 0}, {0, 1}}});
    REQUIRE(quad.v.size() == 4);
    for (const Point& p : {Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 2}}) {
        bool found = false;
        for (const Point& h : quad.v)
            if (norm(p - h) <= 1e-12) found = true;
        CHECK(found);
    }
}

TEST_CASE("minkowski sum soundness by sampling") {
    const Segment seg{{0.2, -0.3}, {1.4, 0.9}};
    const ConvexPolygon tri{{{0, 0}, {0.8, 0.1}, {0.2, 0.7}}};
    const ConvexPolygon sum = convex_minkowski_sum(seg, tri);
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> u(0, 1);
    // Every sampled a + b lands inside the hull.
    std::vector<Point> samples;
    for (int i = 0; i < 40; ++i) {
        const Point a = seg.a + u(rng) * (seg.b - seg.a);
        double w0 = u(rng), w1 = u(rng), w2 = u(rng);
        const double ws = w0 + w1 + w2;
        const Point b{(w0 * tri.v[0].x + w1 * tri.v[1].x + w2 * tri.v[2].x) / ws,
                      (w0 * tri.v[0].y + w1 * tri.v[1].y + w2 * tri.v[2].y) / ws};
        const Point p = a + b;
        CHECK(point_in_convex(p, sum, 1e-9));
        samples.push_back(p);
    }
    // Hull vertices are approachable by dense sums.
    for (const Point& h : sum.v) {
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 60; ++i)
            for (int j = 0; j <= 60; ++j)
                for (int k2 = 0; k2 + j <= 60; ++k2) {
                    const double s = static_cast<double>(i) / 60;
                    const double b0 = static_cast<double>(j) / 60;
                    const double b1 = static_cast<double>(k2) / 60;
                    const Point a = seg.a + s * (seg.b - seg.a);
                    const Point b = {tri.v[0].x + b0 * (tri.v[1].x - tri.v[0].x) +
                                         b1 * (tri.v[2].x - tri.v[0].x),
                                     tri.v[0].y + b0 * (tri.v[1].y - tri.v[0].y) +
                                         b1 * (tri.v[2].y - tri.v[0].y)};
                    best = std::min(best, norm(h - (a + b)));
                }
        CHECK(best <= 0.05);
    }
}

TEST_CASE("box against convex polygon") {
    const ConvexPolygon sq{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
    CHECK(box_vs_convex(Box::square2d(0, 0.5), sq) == BoxRelation::Inside);
    CHECK(box_vs_convex(Box::square2d(2, 3), sq) == BoxRelation::Outside);
    CHECK(box_vs_convex(Box({0.5, 0}, {1.5, 0.5}), sq) == BoxRelation::Straddles);
    // Disjoint near a corner: no single face separates, Straddles is the
    // conservative answer; a smaller box must resolve to Outside.
    const ConvexPolygon diamond{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    CHECK(box_vs_convex(Box({0.9, 0.9}, {0.95, 0.95}), diamond) == BoxRelation::Outside);
}

TEST_CASE("point in polygon with boundary detection") {
    const Polygon q = square(2);
    CHECK(point_in_polygon(q, {0, 0}) == PointLocation::Inside);
    CHECK(point_in_polygon(q, {3, 0}) == PointLocation::Outside);
    CHECK(point_in_polygon(q, {2, 0}) == PointLocation::OnBoundary);
    CHECK(point_in_polygon(q, {2, 2}) == PointLocation::OnBoundary);
    // Ray through a vertex.
    const Polygon tri = Polygon({{0, 0}, {4, 2}, {-2, 4}});
    CHECK(point_in_polygon(tri, {0, 2}) == PointLocation::Inside);
    CHECK(point_in_polygon(tri, {-3, 2}) == PointLocation::Outside);
}

TEST_CASE("box against contour polygon") {
    const Polygon q = square(2);
    CHECK(box_vs_polygon(Box::square2d(-1, 1), q) == BoxRelation::Inside);
    CHECK(box_vs_polygon(Box::square2d(3, 4), q) == BoxRelation::Outside);
    CHECK(box_vs_polygon(Box({1.5, 0}, {2.5, 1}), q) == BoxRelation::Straddles);
    // Box swallowing the whole polygon is not Outside.
    CHECK(box_vs_polygon(Box::square2d(-5, 5), q) == BoxRelation::Straddles);
}

TEST_CASE("lipschitz constant of the four point star") {
    const StarPattern star = validate_star_shaped(four_point_star());
    // Distance from the origin to the line through (2,0) and (0.3,0.3).
    const Point a{2, 0}, b{0.3, 0.3};
    const double dist = std::abs(cross(a, b)) / norm(b - a);
    CHECK(star.min_face_distance() == doctest::Approx(dist).epsilon(1e-12));
    CHECK(lipschitz_constant(star) == doctest::Approx(1.0 / dist).epsilon(1e-12));
}

TEST_CASE("radius value is Lipschitz with constant 1/Delta") {
    const Polygon q = square(2);
    std::mt19937 rng(29);
    const StarPattern patterns[] = {validate_star_shaped(square(1)),
                                    validate_star_shaped(four_point_star())};
    std::uniform_real_distribution<double> coord(-2, 2);
    for (const StarPattern& k : patterns) {
        const double L = lipschitz_constant(k);
        double max_slope = 0.0;
        for (int it = 0; it < 2000;) {
            const Point x1{coord(rng), coord(rng)};
            const Point x2{coord(rng), coord(rng)};
            const double r1 = radius_value(q, k, x1);
            const double r2 = radius_value(q, k, x2);
            if (r1 < 0 || r2 < 0 || norm(x1 - x2) < 1e-12) continue;
            ++it;
            const double slope = std::abs(r1 - r2) / norm(x1 - x2);
            CHECK(slope <= L + 1e-9);
            max_slope = std::max(max_slope, slope);
        }
        // The square pattern attains the bound along the axes.
        if (&k == &patterns[0]) {
            const double r0 = radius_value(q, k, {0, 0});
            const double r1 = radius_value(q, k, {0.5, 0});
            CHECK(std::abs(r0 - r1) / 0.5 == doctest::Approx(L).epsilon(1e-12));
        }
    }
}

TEST_CASE("radius erosion duality") {
    std::mt19937 rng(31);
    const Polygon q = square(2);
    const StarPattern k = validate_star_shaped(four_point_star());
    const auto reflected = reflect(fan_decompose(k));
    std::uniform_real_distribution<double> coord(-2, 2), tdist(0.05, 1.3);
    int checked = 0;
    while (checked < 400) {
        const Point x{coord(rng), coord(rng)};
        if (point_in_polygon(q, x) != PointLocation::Inside) continue;
        const double t = tdist(rng);
        const double r = radius_value(q, k, x);
        if (std::abs(r - t) < 1e-7) continue;
        ++checked;
        bool in_band = false;
        for (std::size_t e = 0; e < q.size() && !in_band; ++e)
            for (const auto& cone : reflected) {
                if (point_in_convex(x, convex_minkowski_sum(q.edge(e), scale(cone, t)), 1e-12)) {
                    in_band = true;
                    break;
                }
            }
        CHECK((r >= t) == !in_band);
    }
}
