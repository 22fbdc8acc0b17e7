#pragma once

#include <atomic>
#include <cstdint>
#include <string>

#include "inscribe/box.hpp"

namespace inscribe {

/// Three-valued box label. Empty: certainly no acceptable point in the box.
/// Filled: every point of the box is acceptable. Boundary: undetermined.
enum class BoxLabel { Empty, Boundary, Filled };

const char* to_string(BoxLabel label);

/// Classifies boxes against an objective threshold for the internal
/// minimization problem: Empty only if every point has f(x) > t or is
/// infeasible, Filled only if every point is feasible with f(x) <= t,
/// Boundary in any other or unknown case.
///
/// classify() must be pure per box so distinct boxes can be labeled
/// concurrently; any per-threshold state is built in prepare(), which the
/// solver calls single-threaded before each classification pass.
class DomainEstimator {
  public:
    virtual ~DomainEstimator() = default;

    virtual std::string name() const = 0;
    virtual void prepare(double /*threshold*/) {}
    virtual BoxLabel classify(const Box& b, double threshold) const = 0;

    /// Whether the closed-form Lipschitzian accuracy estimate applies after a
    /// tightening pass that probed this threshold. The design-centering
    /// estimator clamps negative radius thresholds and classifies that regime
    /// conservatively, where the closed form does not bound the gap.
    virtual bool lipschitz_estimate_valid(double /*threshold*/) const { return true; }

    virtual std::uint64_t classification_calls() const {
        return calls_.load(std::memory_order_relaxed);
    }
    virtual std::uint64_t sub_operations() const {
        return subops_.load(std::memory_order_relaxed);
    }

  protected:
    void count(std::uint64_t subops) const {
        calls_.fetch_add(1, std::memory_order_relaxed);
        subops_.fetch_add(subops, std::memory_order_relaxed);
    }

  private:
    mutable std::atomic<std::uint64_t> calls_{0};
    mutable std::atomic<std::uint64_t> subops_{0};
};

}  // namespace inscribe
