#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "inscribe/error.hpp"

namespace inscribe {

/// Closed axis-aligned hyperrectangle. The unit of domain subdivision.
struct Box {
    std::vector<double> lo;
    std::vector<double> hi;

    Box() = default;
    Box(std::vector<double> lo_, std::vector<double> hi_);

    static Box square2d(double lo, double hi) { return Box({lo, lo}, {hi, hi}); }

    std::size_t dim() const { return lo.size(); }

    /// Euclidean length of the main diagonal.
    double diameter() const;

    std::vector<double> center() const;

    double width(std::size_t axis) const { return hi[axis] - lo[axis]; }

    double volume() const;

    /// Closed containment: lo[i] <= x[i] <= hi[i] on every axis.
    bool contains(std::span<const double> x) const;
};

/// Bisects b along every axis at the exact midpoints (lo+hi)/2, producing
/// 2^n congruent children that tile b. Child order follows the axis bitmask
/// (bit i set = upper half along axis i), so splitting is deterministic.
/// Throws Error if some axis has zero width.
std::vector<Box> split(const Box& b);

/// Ordered collection of equally-sized boxes; the solver's working set.
/// Insertion order is preserved so runs are reproducible.
class ActiveSet {
  public:
    ActiveSet() = default;
    explicit ActiveSet(Box root) { boxes_.push_back(std::move(root)); }

    std::size_t size() const { return boxes_.size(); }
    bool empty() const { return boxes_.empty(); }
    const Box& operator[](std::size_t i) const { return boxes_[i]; }
    const std::vector<Box>& boxes() const { return boxes_; }

    void push(Box b) { boxes_.push_back(std::move(b)); }

    /// Common diameter of the member boxes (0 when empty).
    double diameter() const { return boxes_.empty() ? 0.0 : boxes_.front().diameter(); }

    /// Splits every member simultaneously, keeping set order.
    void split_all();

    /// Keeps boxes_[i] with keep[i] true; returns the number removed.
    std::size_t prune(const std::vector<bool>& keep);

  private:
    std::vector<Box> boxes_;
};

}  // namespace inscribe
