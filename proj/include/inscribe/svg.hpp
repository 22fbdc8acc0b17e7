#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "inscribe/problem_io.hpp"

namespace inscribe {

/// Renders classification pass `step` of an inverse solve as a deterministic
/// SVG: contour outline, convex elements at that pass's threshold, and the
/// active boxes colored by label. Throws Error when step is out of range.
std::string render_snapshot_svg(const LoadedProblem& lp, const std::string& solver,
                                const RunOptions& opt, std::size_t step);

/// Replays the run recorded in a trace file and renders the requested pass.
void emit_svg(const std::string& trace_path, std::size_t step, std::ostream& out);

}  // namespace inscribe
