#include <doctest.h>

#include <cmath>
#include <functional>

#include "inscribe/error.hpp"
#include "inscribe/estimators.hpp"
#include "inscribe/problem_io.hpp"
#include "inscribe/solver.hpp"

using namespace inscribe;

namespace {

Polygon square(double half) {
    return Polygon({{-half, -half}, {half, -half}, {half, half}, {-half, half}});
}

Polygon four_point_star() {
    return Polygon({{2, 0}, {0.3, 0.3}, {0, 2}, {-0.3, 0.3}, {-2, 0}, {-0.3, -0.3}, {0, -2},
                    {0.3, -0.3}});
}

class ScriptedEstimator final : public DomainEstimator {
  public:
    explicit ScriptedEstimator(std::function<BoxLabel(const Box&, double)> fn)
        : fn_(std::move(fn)) {}
    std::string name() const override { return "scripted"; }
    BoxLabel classify(const Box& b, double t) const override {
        count(1);
        return fn_(b, t);
    }

  private:
    std::function<BoxLabel(const Box&, double)> fn_;
};

SolverState state_with_grid(Box root, int per_axis, double threshold, double delta) {
    SolverState st;
    st.threshold = threshold;
    st.accuracy = delta;
    ActiveSet set;
    const double w0 = (root.hi[0] - root.lo[0]) / per_axis;
    const double w1 = (root.hi[1] - root.lo[1]) / per_axis;
    for (int j = 0; j < per_axis; ++j)
        for (int i = 0; i < per_axis; ++i)
            set.push(Box({root.lo[0] + i * w0, root.lo[1] + j * w1},
                         {root.lo[0] + (i + 1) * w0, root.lo[1] + (j + 1) * w1}));
    st.active = std::move(set);
    return st;
}

}  // namespace

TEST_CASE("lipschitzian accuracy estimate formula") {
    SolverState st;
    st.accuracy = 0.15;
    CHECK(lipschitzian_accuracy_estimate(st, 1.0, 0.6) == 0.4);
    st.accuracy = 0.2;
    CHECK(lipschitzian_accuracy_estimate(st, 0.0, 0.7) == 0.2);
    st.accuracy = 0.1;
    CHECK(lipschitzian_accuracy_estimate(st, 2.0, 0.5) == 0.5);
}

TEST_CASE("general accuracy estimate counts threshold probes") {
    SolverConfig cfg;
    cfg.accuracy_early_exit = false;

    SUBCASE("all empty on the first probe") {
        ScriptedEstimator est([](const Box&, double) { return BoxLabel::Empty; });
        SolverState st;
        st.threshold = 5.0;
        st.accuracy = 0.34;
        st.active = ActiveSet(Box::square2d(0, 1));
        const AccuracyEstimate a = general_accuracy_estimate(st, est, cfg);
        CHECK(a.value == 0.34);
        CHECK(a.complete);
    }

    SUBCASE("all empty only at t - 3 delta") {
        const double t = 5.0, delta = 0.25;
        ScriptedEstimator est([&](const Box&, double probe) {
            return probe <= t - 3 * delta + 1e-12 ? BoxLabel::Empty : BoxLabel::Boundary;
        });
        SolverState st;
        st.threshold = t;
        st.accuracy = delta;
        st.active = ActiveSet(Box::square2d(0, 1));
        const AccuracyEstimate a = general_accuracy_estimate(st, est, cfg);
        CHECK(a.value == doctest::Approx(3 * delta).epsilon(1e-12));
        CHECK(a.complete);
    }

    SUBCASE("early exit returns once dprime reaches epsilon") {
        ScriptedEstimator est([](const Box&, double) { return BoxLabel::Boundary; });
        SolverState st;
        st.threshold = 5.0;
        st.accuracy = 0.1;
        st.active = ActiveSet(Box::square2d(0, 1));
        SolverConfig fast;
        fast.epsilon = 0.25;
        fast.accuracy_early_exit = true;
        const AccuracyEstimate a = general_accuracy_estimate(st, est, fast);
        CHECK(a.value >= 0.25);
        CHECK_FALSE(a.complete);
        // The scripted estimator never reports Empty, so without the early
        // exit the cap converts divergence into +infinity.
        SolverConfig capped;
        capped.accuracy_early_exit = false;
        capped.accuracy_iteration_cap = 50;
        const AccuracyEstimate b = general_accuracy_estimate(st, est, capped);
        CHECK(std::isinf(b.value));
        CHECK_FALSE(b.complete);
    }
}

TEST_CASE("general accuracy estimate is an actual accuracy bound near the optimum") {
    // Concentric squares, user threshold 1.95 (optimum 2): the estimate must
    // cover the remaining gap of 0.05.
    DesignCenteringEstimator est(square(2), validate_star_shaped(square(1)));
    SolverState st = state_with_grid(Box::square2d(-0.08, 0.08), 16, -1.95, 0.01);
    SolverConfig cfg;
    cfg.accuracy_early_exit = false;
    const AccuracyEstimate a = general_accuracy_estimate(st, est, cfg);
    CHECK(a.complete);
    CHECK(a.value >= 0.05);
}

TEST_CASE("initial threshold search") {
    SUBCASE("design centering returns 0 at the first filled label") {
        DesignCenteringEstimator est(square(2), validate_star_shaped(square(1)));
        Problem p;
        p.root = Box::square2d(-2, 2);
        p.estimator = &est;
        p.direction = Direction::Maximize;
        SolverConfig cfg;
        CHECK(initial_threshold_search(p, cfg) == 0.0);
    }

    SUBCASE("black-box x^2 on [1,2] yields an upper bound") {
        LipschitzBoxEstimator est([](std::span<const double> x) { return x[0] * x[0]; }, 4.0);
        Problem p;
        p.root = Box({1}, {2});
        p.estimator = &est;
        SolverConfig cfg;
        const double t = initial_threshold_search(p, cfg);
        CHECK(t > 1.0);  // analytic minimum
    }

    SUBCASE("infeasible-everywhere estimator hits the iteration cap") {
        ScriptedEstimator est([](const Box&, double) { return BoxLabel::Empty; });
        Problem p;
        p.root = Box::square2d(0, 1);
        p.estimator = &est;
        SolverConfig cfg;
        cfg.search_iteration_cap = 5000;
        CHECK_THROWS_AS(initial_threshold_search(p, cfg), SolveError);
    }
}

TEST_CASE("find filled box") {
    SUBCASE("a filled box is returned without splitting") {
        ScriptedEstimator est([](const Box&, double) { return BoxLabel::Filled; });
        SolverState st;
        st.threshold = 1.0;
        st.accuracy = 0.1;
        st.active = ActiveSet(Box::square2d(0, 1));
        SolverConfig cfg;
        SolveStats stats;
        const auto [box, center] = find_filled_box(st, est, cfg, &stats);
        CHECK(box.lo == std::vector<double>{0, 0});
        CHECK(stats.fallback_splits == 0);
    }

    SUBCASE("concentric squares at user threshold 1.9") {
        DesignCenteringEstimator est(square(2), validate_star_shaped(square(1)));
        SolverState st = state_with_grid(Box::square2d(-0.4, 0.4), 2, -1.9, 0.1);
        SolverConfig cfg;
        const auto [box, center] = find_filled_box(st, est, cfg);
        const double r = radius_value(square(2), validate_star_shaped(square(1)),
                                      Point{center[0], center[1]});
        CHECK(r >= 1.9);
    }

    SUBCASE("one dimensional boundary box") {
        LipschitzBoxEstimator est([](std::span<const double> x) { return x[0]; }, 1.0);
        SolverState st;
        st.threshold = 0.5;
        st.accuracy = 0.05;
        ActiveSet set;
        set.push(Box({0.4}, {0.6}));
        st.active = std::move(set);
        SolverConfig cfg;
        const auto [box, center] = find_filled_box(st, est, cfg);
        CHECK(center[0] <= 0.5);
    }
}

TEST_CASE("solve concentric squares to 1e-3") {
    LoadedProblem lp = make_design_centering("square_in_square", square(2),
                                             validate_star_shaped(square(1)), 1e-3);
    RunOptions opt;
    opt.trace_boxes = true;
    for (const char* solver : {"inverse", "inverse-lipschitz"}) {
        const SolveResult res = run_solver(lp, solver, opt);
        CHECK(std::abs(res.value - 2.0) <= 1e-3);
        CHECK(res.certificate < 1e-3);
        // The witness point is feasible at the certified level.
        const double r = radius_value(*lp.contour, *lp.pattern, Point{res.point[0], res.point[1]});
        CHECK(r >= 2.0 - 1e-3);
        CHECK(lp.problem.root.contains(res.point));

        // Trace invariants against the analytic optimum.
        double prev_delta = -1.0;
        for (const TraceEvent& e : res.trace.events) {
            CHECK(e.t < 2.0);  // thresholds stay strictly below the optimum
            if (e.kind == TraceEventKind::Split) {
                if (prev_delta > 0) CHECK(e.delta == doctest::Approx(prev_delta / 2));
                prev_delta = e.delta;
            }
            if (e.kind == TraceEventKind::Accuracy && e.complete)
                CHECK(e.dprime >= 2.0 - e.t - 1e-12);
        }
    }
}

TEST_CASE("solve black-box abs sum to 1e-3") {
    LipschitzBoxEstimator est(
        [](std::span<const double> x) { return std::abs(x[0]) + std::abs(x[1]); },
        std::sqrt(2.0));
    Problem p;
    p.root = Box::square2d(-1, 1);
    p.estimator = &est;
    p.direction = Direction::Minimize;
    p.lipschitz = std::sqrt(2.0);
    SolverConfig cfg;
    cfg.epsilon = 1e-3;
    cfg.initial_threshold = 3.0;
    const SolveResult res = solve(p, cfg);
    CHECK(res.value >= 0.0);  // threshold is an upper bound of a min problem
    CHECK(res.value <= 1e-3);
    CHECK(std::abs(res.point[0]) + std::abs(res.point[1]) <= res.value + 1e-12);

    cfg.accuracy = AccuracyStrategy::Lipschitzian;
    const SolveResult res2 = solve(p, cfg);
    CHECK(res2.value <= 1e-3);
}

TEST_CASE("solve the four point star against a grid oracle") {
    const Polygon q = square(2);
    const StarPattern k = validate_star_shaped(four_point_star());
    LoadedProblem lp = make_design_centering("star", q, k, 1e-3);
    RunOptions opt;
    const SolveResult res = run_solver(lp, "inverse", opt);
    // Analytic optimum: the tips reach the walls at radius 1.
    CHECK(std::abs(res.value - 1.0) <= 1e-3);
}

TEST_CASE("solve runs the threshold search when no initial threshold is given") {
    LipschitzBoxEstimator est([](std::span<const double> x) { return x[0] * x[0]; }, 4.0);
    Problem p;
    p.root = Box({1}, {2});
    p.estimator = &est;
    SolverConfig cfg;
    cfg.epsilon = 1e-3;
    const SolveResult res = solve(p, cfg);
    CHECK(res.value > 1.0);
    CHECK(res.value - 1.0 <= 1e-3);
}

TEST_CASE("pruned regions are never re-covered") {
    LoadedProblem lp = make_design_centering("square_in_square", square(2),
                                             validate_star_shaped(square(1)), 1e-2);
    RunOptions opt;
    opt.trace_boxes = true;
    const SolveResult res = run_solver(lp, "inverse", opt);

    auto same_box = [](const Box& a, const Box& b) {
        return a.lo == b.lo && a.hi == b.hi;
    };
    auto interiors_overlap = [](const Box& a, const Box& b) {
        return a.lo[0] < b.hi[0] && b.lo[0] < a.hi[0] && a.lo[1] < b.hi[1] && b.lo[1] < a.hi[1];
    };

    std::vector<Box> pruned;
    const std::vector<TraceEvent>& ev = res.trace.events;
    for (std::size_t i = 1; i < ev.size(); ++i) {
        if (ev[i].kind != TraceEventKind::Prune) continue;
        // Pruned boxes: in the previous snapshot but not in this one.
        for (const Box& b : ev[i - 1].boxes) {
            bool kept = false;
            for (const Box& c : ev[i].boxes)
                if (same_box(b, c)) {
                    kept = true;
                    break;
                }
            if (!kept) pruned.push_back(b);
        }
        // No later active box may overlap any previously pruned interior.
        for (std::size_t j = i; j < ev.size(); ++j)
            for (const Box& c : ev[j].boxes)
                for (const Box& p : pruned) CHECK_FALSE(interiors_overlap(c, p));
    }
    CHECK(!pruned.empty());
    // The reported solution point cannot lie strictly inside a pruned box.
    for (const Box& p : pruned) {
        const bool strictly_inside =
            res.point[0] > p.lo[0] && res.point[0] < p.hi[0] && res.point[1] > p.lo[1] &&
            res.point[1] < p.hi[1];
        CHECK_FALSE(strictly_inside);
    }
}

TEST_CASE("solve rejects bad configs and reports split-cap exhaustion") {
    LoadedProblem lp = make_design_centering("square_in_square", square(2),
                                             validate_star_shaped(square(1)), 1e-3);
    SolverConfig cfg;
    cfg.epsilon = -1;
    CHECK_THROWS_AS(solve(lp.problem, cfg), Error);
    SolverConfig tight;
    tight.epsilon = 1e-9;
    tight.max_splits = 3;
    tight.initial_threshold = *lp.default_initial_threshold;
    CHECK_THROWS_AS(solve(lp.problem, tight), SolveError);
}
