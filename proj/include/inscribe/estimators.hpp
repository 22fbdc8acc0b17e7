#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "inscribe/estimator.hpp"
#include "inscribe/geometry.hpp"
#include "inscribe/solver.hpp"

namespace inscribe {

/// Domain estimation for design centering through erosion: a box is Empty
/// when it misses the contour or sits inside a single convex element of
/// boundary(Q) + t*(-K); Filled when it sits inside the contour and outside
/// every element; Boundary otherwise. Empty/Filled labels are never wrong.
///
/// Elements are cached per radius threshold. The cache is populated in
/// prepare() (or lazily on first use) and immutable afterwards, so
/// classification of distinct boxes can run concurrently.
class DesignCenteringEstimator final : public DomainEstimator {
  public:
    DesignCenteringEstimator(Polygon contour, StarPattern pattern);

    std::string name() const override { return "design_centering"; }

    /// Internal minimization adapter: a threshold t for the negated radius
    /// maps to the radius threshold max(-t, 0).
    void prepare(double threshold) override;
    BoxLabel classify(const Box& b, double threshold) const override;
    bool lipschitz_estimate_valid(double threshold) const override { return threshold < 0.0; }

    /// Classification at a max-direction radius threshold t >= 0.
    BoxLabel classify_radius(const Box& b, double t) const;

    /// Convex elements of boundary(Q) + t*(-K): one hull per (contour edge,
    /// reflected scaled fan piece) pair. Empty list for t <= incidence tol.
    const std::vector<ConvexPolygon>& elements(double t) const;

    static double radius_threshold(double internal_threshold) {
        return internal_threshold < 0.0 ? -internal_threshold : 0.0;
    }

    const Polygon& contour() const { return contour_; }
    const StarPattern& pattern() const { return pattern_; }

  private:
    Polygon contour_;
    StarPattern pattern_;
    std::vector<ConvexPolygon> reflected_cones_;
    mutable std::map<double, std::vector<ConvexPolygon>> cache_;
};

/// Black-box estimator for Lipschitz objectives on a box-constrained region:
/// bounds f over a box by f(center) +/- L*diameter/2.
class LipschitzBoxEstimator final : public DomainEstimator {
  public:
    LipschitzBoxEstimator(std::function<double(std::span<const double>)> objective,
                          double lipschitz);

    std::string name() const override { return "lipschitz_blackbox"; }
    BoxLabel classify(const Box& b, double threshold) const override;

    std::uint64_t objective_calls() const { return objective_calls_.load(std::memory_order_relaxed); }

  private:
    std::function<double(std::span<const double>)> objective_;
    double lipschitz_;
    mutable std::atomic<std::uint64_t> objective_calls_{0};
};

BoxLabel dc_classify(const DesignCenteringEstimator& est, const Box& b, double t);
BoxLabel lipschitz_classify(const LipschitzBoxEstimator& est, const Box& b, double t);

struct BranchAndBoundConfig {
    double epsilon = 1e-3;
    double working_tolerance = 0.0;
    int max_splits = 60;
    bool trace = false;
    double time_limit_seconds = 0.0;
};

/// Lipschitz branch-and-bound baseline ("BnB-Lipschitz"): uniform
/// simultaneous splitting of all active boxes, incumbent from box centers,
/// pruning by the Lipschitz bound against the incumbent. Terminates when the
/// bound gap over active boxes drops to epsilon.
SolveResult branch_and_bound_solve(const Problem& p, const BranchAndBoundConfig& cfg);

}  // namespace inscribe
