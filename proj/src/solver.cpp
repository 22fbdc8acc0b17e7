#include "inscribe/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "inscribe/error.hpp"
#include "inscribe/parallel.hpp"

namespace inscribe {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool any_filled(const std::vector<BoxLabel>& labels) {
    return std::any_of(labels.begin(), labels.end(),
                       [](BoxLabel l) { return l == BoxLabel::Filled; });
}

bool all_empty(const std::vector<BoxLabel>& labels) {
    return std::all_of(labels.begin(), labels.end(),
                       [](BoxLabel l) { return l == BoxLabel::Empty; });
}

// Shared pass counter so an observer sees a single index sequence across the
// tighten / accuracy / fallback phases of one solve.
struct PassContext {
    std::size_t counter = 0;
};

std::vector<BoxLabel> run_pass(DomainEstimator& est, std::span<const Box> boxes, double t,
                               const SolverConfig& cfg, SolveStats* stats, PassContext* ctx,
                               const char* phase) {
    std::vector<BoxLabel> labels = classify_boxes(est, boxes, t, cfg.threads);
    if (stats) {
        stats->classification_calls += labels.size();
        stats->classification_passes += 1;
    }
    if (ctx) {
        if (cfg.pass_observer) cfg.pass_observer(PassView{ctx->counter, t, boxes, labels, phase});
        ctx->counter += 1;
    }
    return labels;
}

AccuracyEstimate general_accuracy_impl(const SolverState& state, DomainEstimator& est,
                                       const SolverConfig& cfg, SolveStats* stats,
                                       PassContext* ctx) {
    const double delta = state.accuracy;
    double dprime = delta;
    for (std::uint64_t iter = 0;; ++iter) {
        if (cfg.accuracy_early_exit && dprime >= cfg.epsilon) return {dprime, false};
        if (iter >= cfg.accuracy_iteration_cap)
            return {std::numeric_limits<double>::infinity(), false};
        const auto labels = run_pass(est, state.active.boxes(), state.threshold - dprime, cfg,
                                     stats, ctx, "accuracy");
        if (all_empty(labels)) return {dprime, true};
        dprime += delta;
    }
}

std::pair<Box, std::vector<double>> find_filled_impl(const SolverState& state,
                                                     DomainEstimator& est,
                                                     const SolverConfig& cfg, SolveStats* stats,
                                                     PassContext* ctx) {
    std::vector<Box> frontier = state.active.boxes();
    for (int depth = 0; depth <= cfg.max_splits; ++depth) {
        const auto labels = run_pass(est, frontier, state.threshold, cfg, stats, ctx, "fallback");
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == BoxLabel::Filled) return {frontier[i], frontier[i].center()};
        std::vector<Box> next;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] != BoxLabel::Boundary) continue;
            for (Box& c : split(frontier[i])) next.push_back(std::move(c));
        }
        if (next.empty())
            throw SolveError(
                "domain estimator inconsistency: the feasible set vanished while searching for a "
                "filled box");
        if (depth == cfg.max_splits) break;
        frontier = std::move(next);
        if (stats) stats->fallback_splits += 1;
    }
    throw SolveError("split cap exceeded while searching for a filled box at the final threshold");
}

}  // namespace

const char* to_string(BoxLabel label) {
    switch (label) {
        case BoxLabel::Empty: return "empty";
        case BoxLabel::Boundary: return "boundary";
        case BoxLabel::Filled: return "filled";
    }
    return "?";
}

const char* to_string(TraceEventKind kind) {
    switch (kind) {
        case TraceEventKind::ThresholdStep: return "threshold_step";
        case TraceEventKind::Prune: return "prune";
        case TraceEventKind::Split: return "split";
        case TraceEventKind::Accuracy: return "accuracy";
        case TraceEventKind::Done: return "done";
    }
    return "?";
}

double user_value(Direction dir, double internal) {
    return dir == Direction::Maximize ? -internal : internal;
}

double internal_value(Direction dir, double user_val) {
    return dir == Direction::Maximize ? -user_val : user_val;
}

double lipschitzian_accuracy_estimate(const SolverState& state, double lipschitz,
                                      double domain_scale) {
    return state.accuracy + (lipschitz / domain_scale) * state.accuracy;
}

AccuracyEstimate general_accuracy_estimate(const SolverState& state, DomainEstimator& est,
                                           const SolverConfig& cfg, SolveStats* stats) {
    return general_accuracy_impl(state, est, cfg, stats, nullptr);
}

std::pair<Box, std::vector<double>> find_filled_box(const SolverState& state, DomainEstimator& est,
                                                    const SolverConfig& cfg, SolveStats* stats) {
    return find_filled_impl(state, est, cfg, stats, nullptr);
}

double initial_threshold_search(const Problem& p, const SolverConfig& cfg, SolveStats* stats) {
    if (!p.estimator) throw Error("problem has no domain estimator");
    ActiveSet active(p.root);
    double t = 0.0;
    double delta = cfg.domain_scale * p.root.diameter();
    int splits = 0;
    for (std::uint64_t iter = 0; iter < cfg.search_iteration_cap; ++iter) {
        const auto labels =
            run_pass(*p.estimator, active.boxes(), t, cfg, stats, nullptr, "search");
        if (any_filled(labels)) return t;
        if (all_empty(labels)) {
            t += delta;
        } else {
            if (splits >= cfg.search_split_cap)
                throw SolveError(
                    "initial threshold search exceeded its split cap; supply an explicit "
                    "initial_threshold");
            active.split_all();
            ++splits;
            delta *= 2.0;
        }
    }
    throw SolveError(
        "initial threshold search exceeded its iteration cap; supply an explicit "
        "initial_threshold");
}

namespace {

class Engine {
  public:
    Engine(const Problem& p, const SolverConfig& cfg) : p_(p), cfg_(cfg), start_(Clock::now()) {
        if (!p.estimator) throw Error("problem has no domain estimator");
        if (!(cfg.epsilon > 0.0)) throw Error("epsilon must be positive");
        if (!(cfg.domain_scale > 0.0 && cfg.domain_scale < 1.0))
            throw Error("domain scale must lie in (0, 1)");
        if (cfg.max_splits < 1) throw Error("max_splits must be at least 1");
        result_.trace.enabled = cfg.trace;
        result_.trace.with_boxes = cfg.trace_boxes;
    }

    SolveResult run() {
        const std::uint64_t base_subops = p_.estimator->sub_operations();

        state_.threshold = cfg_.initial_threshold
                               ? internal_value(p_.direction, *cfg_.initial_threshold)
                               : initial_threshold_search(p_, cfg_, &result_.stats);
        state_.active = ActiveSet(p_.root);
        state_.accuracy = cfg_.domain_scale * p_.root.diameter();
        emit(TraceEventKind::ThresholdStep);
        note_attainment();

        while (true) {
            check_time();
            tighten_threshold();
            const AccuracyEstimate acc = estimate_accuracy();
            result_.stats.accuracy_estimates += 1;
            {
                TraceEvent& e = emit(TraceEventKind::Accuracy);
                e.dprime = acc.value;
                e.complete = acc.complete;
            }
            if (acc.value < cfg_.epsilon) {
                finish(acc.value);
                break;
            }
            if (state_.split_count >= cfg_.max_splits)
                throw SolveError("split cap exceeded before reaching the target accuracy",
                                 user_value(p_.direction, state_.threshold), true);
            state_.active.split_all();
            state_.split_count += 1;
            result_.stats.splits += 1;
            state_.accuracy *= 0.5;
            emit(TraceEventKind::Split);
        }

        result_.stats.classification_subops = p_.estimator->sub_operations() - base_subops;
        result_.stats.wall_seconds = seconds_since(start_);
        return std::move(result_);
    }

  private:
    void check_time() const {
        if (cfg_.time_limit_seconds > 0.0 && seconds_since(start_) > cfg_.time_limit_seconds)
            throw TimeoutError("time limit exceeded");
    }

    // Step 2: lower the threshold by delta while filled boxes certify the
    // lower level, pruning boxes that classify Empty there.
    void tighten_threshold() {
        for (std::uint64_t guard = 0;; ++guard) {
            if (guard > cfg_.accuracy_iteration_cap)
                throw SolveError("threshold tightening did not stabilize; estimator suspect");
            check_time();
            const double probe = state_.threshold - state_.accuracy;
            const auto labels = run_pass(*p_.estimator, state_.active.boxes(), probe, cfg_,
                                         &result_.stats, &passes_, "tighten");
            if (!any_filled(labels)) return;
            for (std::size_t i = 0; i < labels.size(); ++i) {
                if (labels[i] == BoxLabel::Filled) {
                    last_filled_ = state_.active[i];
                    break;
                }
            }
            std::vector<bool> keep(labels.size());
            for (std::size_t i = 0; i < labels.size(); ++i) keep[i] = labels[i] != BoxLabel::Empty;
            const std::size_t removed = state_.active.prune(keep);
            state_.threshold = probe;
            if (removed > 0) {
                TraceEvent& e = emit(TraceEventKind::Prune);
                e.removed = removed;
            }
            emit(TraceEventKind::ThresholdStep);
            result_.stats.threshold_steps += 1;
            note_attainment();
        }
    }

    AccuracyEstimate estimate_accuracy() {
        if (cfg_.accuracy == AccuracyStrategy::Lipschitzian) {
            if (!p_.estimator->lipschitz_estimate_valid(state_.threshold - state_.accuracy))
                return {std::numeric_limits<double>::infinity(), false};
            return {lipschitzian_accuracy_estimate(state_, p_.lipschitz, cfg_.domain_scale), true};
        }
        return general_accuracy_impl(state_, *p_.estimator, cfg_, &result_.stats, &passes_);
    }

    void finish(double certificate) {
        if (!last_filled_) {
            auto [box, center] = find_filled_impl(state_, *p_.estimator, cfg_, &result_.stats,
                                                  &passes_);
            last_filled_ = std::move(box);
        }
        result_.value = user_value(p_.direction, state_.threshold);
        result_.point = last_filled_->center();
        result_.certificate = certificate;
        TraceEvent& e = emit(TraceEventKind::Done);
        e.value = result_.value;
        e.point = result_.point;
        e.certificate = certificate;
    }

    TraceEvent& emit(TraceEventKind kind) {
        if (!cfg_.trace) {
            scratch_ = TraceEvent{};
            return scratch_;
        }
        TraceEvent e;
        e.kind = kind;
        e.t = user_value(p_.direction, state_.threshold);
        e.delta = state_.accuracy;
        e.active = state_.active.size();
        e.seconds = seconds_since(start_);
        if (cfg_.trace_boxes) e.boxes = state_.active.boxes();
        result_.trace.events.push_back(std::move(e));
        return result_.trace.events.back();
    }

    void note_attainment() {
        result_.attainment.emplace_back(seconds_since(start_),
                                        user_value(p_.direction, state_.threshold));
    }

    const Problem& p_;
    const SolverConfig& cfg_;
    Clock::time_point start_;
    SolverState state_;
    PassContext passes_;
    std::optional<Box> last_filled_;
    SolveResult result_;
    TraceEvent scratch_;
};

}  // namespace

SolveResult solve(const Problem& p, const SolverConfig& cfg) { return Engine(p, cfg).run(); }

}  // namespace inscribe
