#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "inscribe/trace.hpp"

namespace inscribe {

/// First record of a trace file; carries enough to replay the run.
struct TraceFileHeader {
    std::string problem_path;
    std::string solver;
    double epsilon = 1e-3;
    double domain_scale = 0.6;
    std::optional<double> initial_threshold;
    int threads = 1;
};

/// Line-delimited JSON: one header record, then one record per event with
/// fields event, t, delta, active, seconds plus the kind-specific extras
/// (dprime/complete, removed, value/point/certificate).
void write_trace_file(std::ostream& out, const TraceFileHeader& header, const Trace& trace);

TraceFileHeader read_trace_header(const std::string& path);

}  // namespace inscribe
