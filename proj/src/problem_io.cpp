#include "inscribe/problem_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "inscribe/error.hpp"

namespace inscribe {

using nlohmann::json;

namespace {

const std::vector<std::string> kAllSolvers = {"inverse", "inverse-lipschitz", "bnb"};

Polygon parse_polygon(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() < 3)
        throw ParseError("field '" + field + "' must be a list of at least 3 [x, y] pairs");
    std::vector<Point> pts;
    pts.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw ParseError("field '" + field + "' must contain [x, y] number pairs");
        pts.push_back(Point{v[0].get<double>(), v[1].get<double>()});
    }
    return Polygon(std::move(pts));
}

void fill_common(LoadedProblem& lp, const json& j) {
    lp.epsilon = j.value("epsilon", 1e-3);
    if (!(lp.epsilon > 0.0)) throw ParseError("field 'epsilon' must be positive");
    if (j.contains("solvers")) {
        lp.solvers.clear();
        for (const auto& s : j.at("solvers")) {
            const std::string name = s.get<std::string>();
            if (!known_solver(name)) throw ParseError("unknown solver '" + name + "'");
            lp.solvers.push_back(name);
        }
    } else {
        lp.solvers = kAllSolvers;
    }
    if (j.contains("initial_threshold")) lp.initial_threshold = j.at("initial_threshold").get<double>();
    if (j.contains("domain_scale")) {
        lp.domain_scale = j.at("domain_scale").get<double>();
        if (!(*lp.domain_scale > 0.0 && *lp.domain_scale < 1.0))
            throw ParseError("field 'domain_scale' must lie in (0, 1)");
    }
    if (j.contains("target_value")) lp.target_value = j.at("target_value").get<double>();
}

LoadedProblem build_design_centering(std::string name, Polygon contour, StarPattern pattern) {
    LoadedProblem lp;
    lp.name = std::move(name);
    lp.kind = "design_centering";
    lp.solvers = kAllSolvers;
    lp.contour = contour;
    lp.pattern = pattern;
    auto est = std::make_unique<DesignCenteringEstimator>(contour, pattern);

    lp.problem.root = contour.bounding_box();
    lp.problem.direction = Direction::Maximize;
    lp.problem.estimator = est.get();
    lp.problem.lipschitz = pattern.lipschitz();
    const Polygon q = contour;
    const StarPattern k = pattern;
    lp.problem.objective = [q, k](std::span<const double> x) -> std::optional<double> {
        const double r = radius_value(q, k, Point{x[0], x[1]});
        if (r < 0.0) return std::nullopt;
        return r;
    };
    const double L = pattern.lipschitz();
    lp.problem.infeasible_box_bound = [L](double diam) { return L * diam; };

    lp.default_initial_threshold =
        -(lp.problem.root.diameter() / pattern.min_vertex_norm());
    lp.estimator = std::move(est);
    return lp;
}

LoadedProblem build_blackbox(std::string name, const json& j) {
    LoadedProblem lp;
    lp.name = std::move(name);
    lp.kind = "lipschitz_blackbox";
    lp.solvers = kAllSolvers;

    if (!j.contains("function")) throw ParseError("black-box problem needs a 'function' name");
    const std::string fn_name = j.at("function").get<std::string>();
    auto fn = builtin_objective(fn_name);
    if (!j.contains("lipschitz")) throw ParseError("black-box problem needs a 'lipschitz' constant");
    const double L = j.at("lipschitz").get<double>();
    if (!(L > 0.0)) throw ParseError("field 'lipschitz' must be positive");

    if (!j.contains("box")) throw ParseError("black-box problem needs a 'box' with lo/hi");
    const json& jb = j.at("box");
    if (!jb.contains("lo") || !jb.contains("hi")) throw ParseError("'box' needs 'lo' and 'hi' arrays");
    lp.problem.root = Box(jb.at("lo").get<std::vector<double>>(), jb.at("hi").get<std::vector<double>>());

    const std::string dir = j.value("direction", std::string("min"));
    if (dir != "min" && dir != "max") throw ParseError("field 'direction' must be 'min' or 'max'");
    lp.problem.direction = dir == "max" ? Direction::Maximize : Direction::Minimize;
    lp.problem.lipschitz = L;
    lp.problem.objective = [fn](std::span<const double> x) -> std::optional<double> {
        return fn(x);
    };

    // The estimator works on the internal minimization objective.
    std::function<double(std::span<const double>)> internal_fn = fn;
    if (lp.problem.direction == Direction::Maximize)
        internal_fn = [fn](std::span<const double> x) { return -fn(x); };
    lp.estimator = std::make_unique<LipschitzBoxEstimator>(std::move(internal_fn), L);
    lp.problem.estimator = lp.estimator.get();
    return lp;
}

LoadedProblem parse_json(const json& j, const std::string& display_name) {
    if (!j.contains("kind")) throw ParseError("problem file needs a 'kind' field");
    const std::string kind = j.at("kind").get<std::string>();
    const std::string name = j.value("name", display_name);
    LoadedProblem lp;
    if (kind == "design_centering") {
        if (!j.contains("contour")) throw ParseError("design centering needs a 'contour' polygon");
        if (!j.contains("pattern")) throw ParseError("design centering needs a 'pattern' polygon");
        Polygon contour = parse_polygon(j.at("contour"), "contour");
        StarPattern pattern = validate_star_shaped(parse_polygon(j.at("pattern"), "pattern"));
        lp = build_design_centering(name, std::move(contour), std::move(pattern));
    } else if (kind == "lipschitz_blackbox") {
        lp = build_blackbox(name, j);
    } else {
        throw ParseError("unknown problem kind '" + kind + "'");
    }
    fill_common(lp, j);
    return lp;
}

}  // namespace

LoadedProblem parse_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    try {
        return parse_json(j, std::filesystem::path(path).stem().string());
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

LoadedProblem parse_problem_text(const std::string& text, const std::string& display_name) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(display_name + ": " + e.what());
    }
    try {
        return parse_json(j, display_name);
    } catch (const json::exception& e) {
        throw ParseError(display_name + ": " + e.what());
    }
}

LoadedProblem make_design_centering(std::string name, Polygon contour, StarPattern pattern,
                                    double epsilon) {
    LoadedProblem lp = build_design_centering(std::move(name), std::move(contour), std::move(pattern));
    lp.epsilon = epsilon;
    return lp;
}

std::vector<std::string> builtin_objective_names() {
    return {"abs_sum", "max_abs", "linear_first", "sum_squares"};
}

std::function<double(std::span<const double>)> builtin_objective(const std::string& name) {
    if (name == "abs_sum")
        return [](std::span<const double> x) {
            double s = 0.0;
            for (double v : x) s += std::abs(v);
            return s;
        };
    if (name == "max_abs")
        return [](std::span<const double> x) {
            double s = 0.0;
            for (double v : x) s = std::max(s, std::abs(v));
            return s;
        };
    if (name == "linear_first") return [](std::span<const double> x) { return x[0]; };
    if (name == "sum_squares")
        return [](std::span<const double> x) {
            double s = 0.0;
            for (double v : x) s += v * v;
            return s;
        };
    throw ParseError("unknown built-in objective '" + name + "'");
}

bool known_solver(const std::string& solver) {
    return solver == "inverse" || solver == "inverse-lipschitz" || solver == "bnb";
}

SolverConfig solver_config(const LoadedProblem& lp, const std::string& solver,
                           const RunOptions& opt) {
    SolverConfig cfg;
    cfg.epsilon = opt.epsilon.value_or(lp.epsilon);
    cfg.domain_scale = opt.domain_scale.value_or(lp.domain_scale.value_or(0.6));
    cfg.initial_threshold = lp.initial_threshold ? lp.initial_threshold
                                                 : lp.default_initial_threshold;
    cfg.accuracy = solver == "inverse-lipschitz" ? AccuracyStrategy::Lipschitzian
                                                 : AccuracyStrategy::General;
    cfg.trace = opt.trace || opt.trace_boxes;
    cfg.trace_boxes = opt.trace_boxes;
    cfg.threads = opt.threads;
    cfg.time_limit_seconds = opt.time_limit_seconds;
    cfg.pass_observer = opt.pass_observer;
    return cfg;
}

SolveResult run_solver(const LoadedProblem& lp, const std::string& solver, const RunOptions& opt) {
    if (!known_solver(solver)) throw Error("unknown solver '" + solver + "'");
    if (solver == "bnb") {
        BranchAndBoundConfig cfg;
        cfg.epsilon = opt.epsilon.value_or(lp.epsilon);
        cfg.time_limit_seconds = opt.time_limit_seconds;
        cfg.trace = opt.trace;
        return branch_and_bound_solve(lp.problem, cfg);
    }
    const SolverConfig cfg = solver_config(lp, solver, opt);
    if (solver == "inverse-lipschitz" && !(lp.problem.lipschitz > 0.0))
        throw Error("inverse-lipschitz needs a positive Lipschitz constant");
    const auto* black_box = dynamic_cast<const LipschitzBoxEstimator*>(lp.problem.estimator);
    const std::uint64_t base_calls = black_box ? black_box->objective_calls() : 0;
    SolveResult res = solve(lp.problem, cfg);
    if (black_box) res.stats.objective_calls = black_box->objective_calls() - base_calls;
    return res;
}

}  // namespace inscribe
