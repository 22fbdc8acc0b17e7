#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "inscribe/box.hpp"

namespace inscribe {

enum class TraceEventKind { ThresholdStep, Prune, Split, Accuracy, Done };

const char* to_string(TraceEventKind kind);

/// One solver event. Every event carries the user-level threshold t, the
/// current accuracy delta, the active box count and a timestamp (seconds
/// since the solve started); the remaining fields are kind-specific.
struct TraceEvent {
    TraceEventKind kind = TraceEventKind::ThresholdStep;
    double t = 0.0;
    double delta = 0.0;
    std::size_t active = 0;
    double seconds = 0.0;

    // Accuracy
    double dprime = std::numeric_limits<double>::quiet_NaN();
    bool complete = false;

    // Prune
    std::size_t removed = 0;

    // Done
    double value = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> point;
    double certificate = std::numeric_limits<double>::quiet_NaN();

    // Active-set snapshot, populated only when box tracing is enabled.
    std::vector<Box> boxes;
};

struct Trace {
    bool enabled = false;
    bool with_boxes = false;
    std::vector<TraceEvent> events;
};

}  // namespace inscribe
