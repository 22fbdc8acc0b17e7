#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace inscribe {

struct BenchOptions {
    /// Solvers to run per problem; empty falls back to each problem file's
    /// own selection list.
    std::vector<std::string> solvers;
    double timeout_seconds = 0.0;
    /// When true, the seconds column times the first attainment of the
    /// problem's target_value instead of the full proven run.
    bool reach_mode = false;
    int threads = 1;
};

/// Runs every (problem, solver) pair sequentially and writes one CSV row
/// each: problem, solver, epsilon, value, certificate, seconds,
/// classify_calls, objective_calls, splits. Timed-out rows keep their slot
/// with a ">limit" marker in the seconds column.
void run_benchmark(const std::vector<std::string>& problem_paths, const BenchOptions& opt,
                   std::ostream& csv);

/// Explicit-solver variant used by tests; throws on an empty solver list.
void run_benchmark(const std::vector<std::string>& problem_paths,
                   const std::vector<std::string>& solvers, const BenchOptions& opt,
                   std::ostream& csv);

/// All .json files directly inside dir, sorted by name.
std::vector<std::string> list_problem_files(const std::string& dir);

}  // namespace inscribe
