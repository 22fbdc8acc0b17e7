#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "inscribe/estimators.hpp"
#include "inscribe/geometry.hpp"
#include "inscribe/solver.hpp"

namespace inscribe {

/// A parsed and validated problem file together with the owning estimator
/// and the ready-to-solve Problem view into it.
struct LoadedProblem {
    std::string name;
    std::string kind;  // "design_centering" | "lipschitz_blackbox"
    double epsilon = 1e-3;
    std::vector<std::string> solvers;  // subset of {"inverse","inverse-lipschitz","bnb"}
    std::optional<double> initial_threshold;  // user direction, from the file
    std::optional<double> domain_scale;
    std::optional<double> target_value;  // objective level for reach-mode timing

    std::optional<Polygon> contour;
    std::optional<StarPattern> pattern;

    std::unique_ptr<DomainEstimator> estimator;
    Problem problem;

    /// User-direction default when the file gives no initial threshold.
    /// Design centering uses the always-safe bound
    /// -diameter(bbox Q)/min-vertex-norm(K); black-box problems have none
    /// (the threshold search procedure runs instead).
    std::optional<double> default_initial_threshold;
};

/// Options shared by the CLI and the benchmark runner; unset fields fall
/// back to the problem file's values.
struct RunOptions {
    std::optional<double> epsilon;
    std::optional<double> domain_scale;
    bool trace = false;
    bool trace_boxes = false;
    int threads = 1;
    double time_limit_seconds = 0.0;
    std::function<void(const PassView&)> pass_observer;
};

/// Base solver configuration for a problem ("inverse" or "inverse-lipschitz").
SolverConfig solver_config(const LoadedProblem& lp, const std::string& solver,
                           const RunOptions& opt);

/// Parses and validates a problem file. Throws ParseError with a located
/// message for malformed input and geometry errors for invalid polygons.
LoadedProblem parse_problem(const std::string& path);

/// Same, from an in-memory JSON document (used by tests).
LoadedProblem parse_problem_text(const std::string& text, const std::string& display_name);

LoadedProblem make_design_centering(std::string name, Polygon contour, StarPattern pattern,
                                    double epsilon);

/// Built-in black-box objectives selectable by name in problem files:
/// abs_sum, max_abs, linear_first, sum_squares.
std::vector<std::string> builtin_objective_names();
std::function<double(std::span<const double>)> builtin_objective(const std::string& name);

/// Runs the named solver ("inverse", "inverse-lipschitz", "bnb").
SolveResult run_solver(const LoadedProblem& lp, const std::string& solver,
                       const RunOptions& opt);

bool known_solver(const std::string& solver);

}  // namespace inscribe
