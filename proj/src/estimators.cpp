#include "inscribe/estimators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "inscribe/error.hpp"

namespace inscribe {

DesignCenteringEstimator::DesignCenteringEstimator(Polygon contour, StarPattern pattern)
    : contour_(std::move(contour)),
      pattern_(std::move(pattern)),
      reflected_cones_(reflect(fan_decompose(pattern_))) {}

const std::vector<ConvexPolygon>& DesignCenteringEstimator::elements(double t) const {
    auto it = cache_.find(t);
    if (it != cache_.end()) return it->second;
    std::vector<ConvexPolygon> els;
    if (t > kIncidenceTol) {
        els.reserve(contour_.size() * reflected_cones_.size());
        for (std::size_t e = 0; e < contour_.size(); ++e) {
            const Segment edge = contour_.edge(e);
            for (const ConvexPolygon& cone : reflected_cones_)
                els.push_back(convex_minkowski_sum(edge, scale(cone, t)));
        }
    }
    return cache_.emplace(t, std::move(els)).first->second;
}

void DesignCenteringEstimator::prepare(double threshold) { elements(radius_threshold(threshold)); }

BoxLabel DesignCenteringEstimator::classify(const Box& b, double threshold) const {
    return classify_radius(b, radius_threshold(threshold));
}

BoxLabel DesignCenteringEstimator::classify_radius(const Box& b, double t) const {
    std::uint64_t subops = contour_.size();  // contour test, roughly one op per edge
    const BoxRelation vs_contour = box_vs_polygon(b, contour_);
    if (vs_contour == BoxRelation::Outside) {
        count(subops);
        return BoxLabel::Empty;
    }
    bool straddles_element = false;
    for (const ConvexPolygon& el : elements(t)) {
        ++subops;
        const BoxRelation rel = box_vs_convex(b, el);
        if (rel == BoxRelation::Inside) {
            count(subops);
            return BoxLabel::Empty;
        }
        if (rel == BoxRelation::Straddles) straddles_element = true;
    }
    count(subops);
    if (vs_contour == BoxRelation::Inside && !straddles_element) return BoxLabel::Filled;
    return BoxLabel::Boundary;
}

BoxLabel dc_classify(const DesignCenteringEstimator& est, const Box& b, double t) {
    return est.classify_radius(b, t);
}

LipschitzBoxEstimator::LipschitzBoxEstimator(
    std::function<double(std::span<const double>)> objective, double lipschitz)
    : objective_(std::move(objective)), lipschitz_(lipschitz) {
    if (!objective_) throw Error("lipschitz estimator needs an objective");
    if (lipschitz_ < 0.0) throw Error("lipschitz constant must be non-negative");
}

BoxLabel LipschitzBoxEstimator::classify(const Box& b, double threshold) const {
    const std::vector<double> c = b.center();
    const double fc = objective_(c);
    objective_calls_.fetch_add(1, std::memory_order_relaxed);
    count(1);
    const double half = lipschitz_ * b.diameter() * 0.5;
    if (fc - half > threshold) return BoxLabel::Empty;
    if (fc + half <= threshold) return BoxLabel::Filled;
    return BoxLabel::Boundary;
}

BoxLabel lipschitz_classify(const LipschitzBoxEstimator& est, const Box& b, double t) {
    return est.classify(b, t);
}

namespace {

using Clock = std::chrono::steady_clock;

struct Node {
    Box box;
    double lower = 0.0;  // internal-direction Lipschitz lower bound
};

}  // namespace

SolveResult branch_and_bound_solve(const Problem& p, const BranchAndBoundConfig& cfg) {
    if (!p.objective) throw Error("branch and bound needs an objective evaluator");
    if (!(p.lipschitz > 0.0)) throw Error("branch and bound needs a Lipschitz constant");
    const auto start = Clock::now();
    const double L = p.lipschitz;

    SolveResult result;
    result.trace.enabled = cfg.trace;

    double incumbent = std::numeric_limits<double>::infinity();
    std::vector<double> best_point;

    auto seconds = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

    auto evaluate = [&](const Box& b) -> Node {
        const std::vector<double> c = b.center();
        const std::optional<double> fu = p.objective(c);
        result.stats.objective_calls += 1;
        Node n{b, 0.0};
        if (fu) {
            const double fi = internal_value(p.direction, *fu);
            n.lower = fi - L * b.diameter() * 0.5;
            if (fi < incumbent) {
                incumbent = fi;
                best_point = c;
                result.attainment.emplace_back(seconds(), *fu);
            }
        } else if (p.infeasible_box_bound) {
            n.lower = internal_value(p.direction, p.infeasible_box_bound(b.diameter()));
        } else {
            n.lower = -std::numeric_limits<double>::infinity();
        }
        return n;
    };

    std::vector<Node> active;
    active.push_back(evaluate(p.root));

    while (true) {
        if (cfg.time_limit_seconds > 0.0 && seconds() > cfg.time_limit_seconds)
            throw TimeoutError("time limit exceeded");
        double lowest = std::numeric_limits<double>::infinity();
        for (const Node& n : active) lowest = std::min(lowest, n.lower);
        const double gap = active.empty() ? 0.0 : incumbent - lowest;
        if (gap <= cfg.epsilon && !std::isinf(incumbent)) {
            result.value = user_value(p.direction, incumbent);
            result.point = best_point;
            result.certificate = std::max(gap, 0.0);
            result.stats.wall_seconds = seconds();
            if (cfg.trace) {
                TraceEvent e;
                e.kind = TraceEventKind::Done;
                e.t = result.value;
                e.active = active.size();
                e.seconds = result.stats.wall_seconds;
                e.value = result.value;
                e.point = result.point;
                e.certificate = result.certificate;
                result.trace.events.push_back(std::move(e));
            }
            return result;
        }
        if (result.stats.splits >= cfg.max_splits)
            throw SolveError("split cap exceeded before proving the bound gap",
                             user_value(p.direction, incumbent), !std::isinf(incumbent));
        std::vector<Node> next;
        next.reserve(active.size() * 4);
        for (const Node& n : active) {
            for (Box& child : split(n.box)) {
                Node c = evaluate(child);
                next.push_back(std::move(c));
            }
        }
        // Prune against the (possibly just improved) incumbent.
        std::vector<Node> kept;
        kept.reserve(next.size());
        for (Node& n : next)
            if (n.lower < incumbent - cfg.working_tolerance) kept.push_back(std::move(n));
        active = std::move(kept);
        result.stats.splits += 1;
        if (cfg.trace) {
            TraceEvent e;
            e.kind = TraceEventKind::Split;
            e.t = user_value(p.direction, incumbent);
            e.active = active.size();
            e.seconds = seconds();
            result.trace.events.push_back(std::move(e));
        }
    }
}

}  // namespace inscribe
