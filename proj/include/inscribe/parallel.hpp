#pragma once

#include <span>
#include <vector>

#include "inscribe/estimator.hpp"

namespace inscribe {

/// Labels every box at the given threshold. Calls estimator.prepare(t) once,
/// then classifies boxes with an OpenMP parallel loop when threads > 1.
/// Results land in active-set order, so the outcome does not depend on the
/// thread count.
std::vector<BoxLabel> classify_boxes(DomainEstimator& est, std::span<const Box> boxes, double t,
                                     int threads);

/// Serial reference implementation; kept for the equivalence tests and the
/// kernel benchmark.
std::vector<BoxLabel> classify_boxes_serial(DomainEstimator& est, std::span<const Box> boxes,
                                            double t);

int hardware_threads();

}  // namespace inscribe
