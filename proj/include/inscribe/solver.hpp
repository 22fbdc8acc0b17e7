#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "inscribe/box.hpp"
#include "inscribe/estimator.hpp"
#include "inscribe/trace.hpp"

namespace inscribe {

enum class Direction { Minimize, Maximize };

/// Optimization problem over a compact root box. The engine always minimizes;
/// maximization problems are negated at the estimator boundary and reported
/// back in user direction.
struct Problem {
    Box root;
    DomainEstimator* estimator = nullptr;
    Direction direction = Direction::Minimize;

    /// Optional user-direction objective; nullopt marks infeasible points.
    /// Used by the branch-and-bound baseline and by test oracles only — the
    /// inverse solver never calls it.
    std::function<std::optional<double>(std::span<const double>)> objective;

    /// Lipschitz constant of the user-direction objective, 0 when unknown.
    double lipschitz = 0.0;

    /// Valid user-direction bound for a box whose center is infeasible, as a
    /// function of the box diameter (radius-value geometry admits r <= L*d).
    std::function<double(double)> infeasible_box_bound;

    std::size_t dimension() const { return root.dim(); }
};

enum class AccuracyStrategy { General, Lipschitzian };

/// One classification pass as seen by a pass observer: every active box and
/// its label at the probed internal threshold. Snapshot rendering replays a
/// solve and grabs the pass it wants.
struct PassView {
    std::size_t index = 0;
    double internal_threshold = 0.0;
    std::span<const Box> boxes;
    std::span<const BoxLabel> labels;
    const char* phase = "";  // "tighten" | "accuracy" | "fallback"
};

struct SolverConfig {
    double epsilon = 1e-3;
    double domain_scale = 0.6;

    /// User-direction initial threshold; when absent the threshold search
    /// procedure runs first.
    std::optional<double> initial_threshold;

    AccuracyStrategy accuracy = AccuracyStrategy::General;

    int max_splits = 60;
    bool accuracy_early_exit = true;
    std::uint64_t accuracy_iteration_cap = 1'000'000;
    std::uint64_t search_iteration_cap = 1'000'000;
    int search_split_cap = 10;

    bool trace = false;
    bool trace_boxes = false;
    int threads = 1;
    double time_limit_seconds = 0.0;  // 0 disables the limit

    /// Observes every classification pass of the main solve loop.
    std::function<void(const PassView&)> pass_observer;
};

struct SolveStats {
    std::uint64_t classification_calls = 0;
    std::uint64_t classification_passes = 0;
    std::uint64_t classification_subops = 0;
    std::uint64_t objective_calls = 0;
    std::uint64_t threshold_steps = 0;
    std::uint64_t accuracy_estimates = 0;
    int splits = 0;
    int fallback_splits = 0;
    double wall_seconds = 0.0;
};

struct SolveResult {
    double value = 0.0;  // user direction
    std::vector<double> point;
    double certificate = 0.0;
    SolveStats stats;
    Trace trace;

    /// (seconds, user-direction value) milestones: certified threshold moves
    /// for the inverse solver, incumbent improvements for branch-and-bound.
    std::vector<std::pair<double, double>> attainment;
};

/// Working state of the inverse solver: active boxes, internal threshold t,
/// accuracy delta (= domain_scale * box diameter throughout) and split count.
struct SolverState {
    ActiveSet active;
    double threshold = 0.0;
    double accuracy = 0.0;
    int split_count = 0;
};

struct AccuracyEstimate {
    double value = 0.0;
    /// True when the loop observed an all-empty pass, which is what makes the
    /// estimate an actual accuracy bound. Early exits and cap overflows
    /// return values >= epsilon without that property.
    bool complete = false;
};

/// The inverse optimization loop: repeatedly tightens the threshold while
/// filled boxes certify it, tests the accuracy estimate against epsilon, and
/// otherwise splits every active box and halves delta.
SolveResult solve(const Problem& p, const SolverConfig& cfg);

/// Accuracy estimation using only the domain estimator: probes t - d' for
/// d' = delta, 2*delta, ... until every active box classifies Empty.
AccuracyEstimate general_accuracy_estimate(const SolverState& state, DomainEstimator& est,
                                           const SolverConfig& cfg, SolveStats* stats = nullptr);

/// d' = delta + (L/S)*delta, the closed-form convergent estimate for
/// Lipschitz objectives.
double lipschitzian_accuracy_estimate(const SolverState& state, double lipschitz,
                                      double domain_scale);

/// Threshold search using only the domain estimator: probes t = 0 and climbs
/// by delta while everything is empty, splitting (and doubling delta) while
/// boxes stay undecided. Returns the internal threshold of the first filled
/// box. Throws SolveError when the caps are exceeded.
double initial_threshold_search(const Problem& p, const SolverConfig& cfg,
                                SolveStats* stats = nullptr);

/// Splits boundary boxes at the current threshold until one classifies
/// Filled; returns that box and its center point.
std::pair<Box, std::vector<double>> find_filled_box(const SolverState& state, DomainEstimator& est,
                                                    const SolverConfig& cfg,
                                                    SolveStats* stats = nullptr);

double user_value(Direction dir, double internal_value);
double internal_value(Direction dir, double user_val);

}  // namespace inscribe
