#include "inscribe/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>

#include "inscribe/error.hpp"
#include "inscribe/problem_io.hpp"

namespace inscribe {

namespace {

std::string fmt(double v, const char* spec = "%.10g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

struct Row {
    std::string problem, solver, epsilon, value, certificate, seconds, classify_calls,
        objective_calls, splits;
};

void write_row(std::ostream& out, const Row& r) {
    out << r.problem << ',' << r.solver << ',' << r.epsilon << ',' << r.value << ','
        << r.certificate << ',' << r.seconds << ',' << r.classify_calls << ','
        << r.objective_calls << ',' << r.splits << '\n';
}

void bench_one(const LoadedProblem& lp, const std::string& solver, const BenchOptions& opt,
               std::ostream& csv) {
    Row row;
    row.problem = lp.name;
    row.solver = solver;
    row.epsilon = fmt(lp.epsilon);
    RunOptions ro;
    ro.threads = opt.threads;
    ro.time_limit_seconds = opt.timeout_seconds;
    try {
        const SolveResult res = run_solver(lp, solver, ro);
        row.value = fmt(res.value);
        row.certificate = fmt(res.certificate);
        row.classify_calls = std::to_string(res.stats.classification_calls);
        row.objective_calls = std::to_string(res.stats.objective_calls);
        row.splits = std::to_string(res.stats.splits);
        if (opt.reach_mode) {
            if (!lp.target_value)
                throw Error("problem '" + lp.name + "' has no target_value for reach mode");
            const double target = *lp.target_value;
            const bool maximize = lp.problem.direction == Direction::Maximize;
            double reached_at = -1.0, reached_value = 0.0;
            for (const auto& [sec, val] : res.attainment) {
                if (maximize ? val >= target - 1e-12 : val <= target + 1e-12) {
                    reached_at = sec;
                    reached_value = val;
                    break;
                }
            }
            if (reached_at < 0.0) {
                row.seconds = "unreached";
            } else {
                row.seconds = fmt(reached_at, "%.6f");
                row.value = fmt(reached_value);
            }
        } else {
            row.seconds = fmt(res.stats.wall_seconds, "%.6f");
        }
    } catch (const TimeoutError&) {
        row.seconds = ">" + fmt(opt.timeout_seconds, "%.6g");
    }
    write_row(csv, row);
}

}  // namespace

void run_benchmark(const std::vector<std::string>& problem_paths,
                   const std::vector<std::string>& solvers, const BenchOptions& opt,
                   std::ostream& csv) {
    if (solvers.empty()) throw Error("benchmark needs a non-empty solver list");
    BenchOptions o = opt;
    o.solvers = solvers;
    run_benchmark(problem_paths, o, csv);
}

void run_benchmark(const std::vector<std::string>& problem_paths, const BenchOptions& opt,
                   std::ostream& csv) {
    csv << "problem,solver,epsilon,value,certificate,seconds,classify_calls,objective_calls,"
           "splits\n";
    for (const std::string& path : problem_paths) {
        const LoadedProblem lp = parse_problem(path);
        const std::vector<std::string>& solvers = opt.solvers.empty() ? lp.solvers : opt.solvers;
        if (solvers.empty()) throw Error("no solvers selected for problem '" + lp.name + "'");
        for (const std::string& solver : solvers) bench_one(lp, solver, opt, csv);
    }
}

std::vector<std::string> list_problem_files(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw Error("not a directory: " + dir);
    std::vector<std::string> out;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            out.push_back(entry.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace inscribe
