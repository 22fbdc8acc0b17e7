#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "inscribe/bench.hpp"
#include "inscribe/error.hpp"
#include "inscribe/oracle.hpp"
#include "inscribe/problem_io.hpp"
#include "inscribe/svg.hpp"
#include "inscribe/trace_io.hpp"

namespace {

using namespace inscribe;

void print_result(const LoadedProblem& lp, const std::string& solver, const SolveResult& res) {
    std::printf("problem      %s\n", lp.name.c_str());
    std::printf("solver       %s\n", solver.c_str());
    std::printf("value        %.10g\n", res.value);
    std::printf("certificate  %.10g\n", res.certificate);
    std::printf("point       ");
    for (double x : res.point) std::printf(" %.10g", x);
    std::printf("\n");
    std::printf("seconds      %.6f\n", res.stats.wall_seconds);
    std::printf("classify_calls %llu (passes %llu, subops %llu)\n",
                (unsigned long long)res.stats.classification_calls,
                (unsigned long long)res.stats.classification_passes,
                (unsigned long long)res.stats.classification_subops);
    std::printf("objective_calls %llu\n", (unsigned long long)res.stats.objective_calls);
    std::printf("splits       %d\n", res.stats.splits);
}

int run(int argc, char** argv) {
    CLI::App app{"Deterministic global optimization by inverse threshold bisection, with a 2-D "
                 "design-centering backend and a Lipschitz branch-and-bound baseline"};
    app.require_subcommand(1);

    // solve
    std::string solve_problem, solve_solver = "inverse", solve_trace;
    double solve_eps = -1.0, solve_scale = -1.0, solve_timeout = 0.0;
    int solve_threads = 1;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one problem file");
    solve_cmd->add_option("problem", solve_problem, "Problem file (JSON)")->required();
    solve_cmd->add_option("--solver", solve_solver, "inverse | inverse-lipschitz | bnb");
    solve_cmd->add_option("--eps", solve_eps, "Target accuracy override");
    solve_cmd->add_option("--scale", solve_scale, "Domain scale override");
    solve_cmd->add_option("--trace", solve_trace, "Write a JSONL trace to this path");
    solve_cmd->add_option("--threads", solve_threads, "Classification threads");
    solve_cmd->add_option("--timeout", solve_timeout, "Time limit in seconds");

    // bench
    std::string bench_dir, bench_out;
    std::vector<std::string> bench_solvers;
    double bench_timeout = 0.0;
    bool bench_reach = false;
    auto* bench_cmd = app.add_subcommand("bench", "Run all problems in a directory, write CSV");
    bench_cmd->add_option("dir", bench_dir, "Directory of problem files")->required();
    bench_cmd->add_option("--out", bench_out, "Output CSV path")->required();
    bench_cmd->add_option("--solver", bench_solvers, "Solvers to run (default: per-file list)");
    bench_cmd->add_option("--timeout", bench_timeout, "Per-row time limit in seconds");
    bench_cmd->add_flag("--reach", bench_reach, "Time first attainment of each file's target_value");

    // oracle
    std::string oracle_problem;
    int oracle_grid = 1000, oracle_threads = 1;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force grid reference value");
    oracle_cmd->add_option("problem", oracle_problem, "Problem file (JSON)")->required();
    oracle_cmd->add_option("--grid", oracle_grid, "Grid resolution per axis");
    oracle_cmd->add_option("--threads", oracle_threads, "Evaluation threads");

    // snapshot
    std::string snap_trace, snap_out;
    std::size_t snap_step = 0;
    auto* snap_cmd = app.add_subcommand("snapshot", "Render one classification pass as SVG");
    snap_cmd->add_option("trace", snap_trace, "Trace file from solve --trace")->required();
    snap_cmd->add_option("--step", snap_step, "Classification pass index")->required();
    snap_cmd->add_option("--out", snap_out, "Output SVG path")->required();

    CLI11_PARSE(app, argc, argv);

    if (solve_cmd->parsed()) {
        const LoadedProblem lp = parse_problem(solve_problem);
        if (!known_solver(solve_solver)) throw Error("unknown solver '" + solve_solver + "'");
        RunOptions opt;
        if (solve_eps > 0.0) opt.epsilon = solve_eps;
        if (solve_scale > 0.0) opt.domain_scale = solve_scale;
        opt.threads = solve_threads;
        opt.time_limit_seconds = solve_timeout;
        opt.trace = !solve_trace.empty();
        const SolveResult res = run_solver(lp, solve_solver, opt);
        print_result(lp, solve_solver, res);
        if (!solve_trace.empty()) {
            std::ofstream out(solve_trace);
            if (!out) throw Error("cannot write trace file: " + solve_trace);
            TraceFileHeader header;
            header.problem_path = solve_problem;
            header.solver = solve_solver;
            header.epsilon = opt.epsilon.value_or(lp.epsilon);
            header.domain_scale = opt.domain_scale.value_or(lp.domain_scale.value_or(0.6));
            header.initial_threshold = lp.initial_threshold ? lp.initial_threshold
                                                            : lp.default_initial_threshold;
            header.threads = solve_threads;
            write_trace_file(out, header, res.trace);
        }
        return 0;
    }

    if (bench_cmd->parsed()) {
        BenchOptions opt;
        opt.solvers = bench_solvers;
        opt.timeout_seconds = bench_timeout;
        opt.reach_mode = bench_reach;
        std::ofstream out(bench_out);
        if (!out) throw Error("cannot write CSV file: " + bench_out);
        run_benchmark(list_problem_files(bench_dir), opt, out);
        std::printf("wrote %s\n", bench_out.c_str());
        return 0;
    }

    if (oracle_cmd->parsed()) {
        const LoadedProblem lp = parse_problem(oracle_problem);
        if (lp.kind != "design_centering")
            throw Error("the brute-force oracle supports design-centering problems only");
        const OracleGrid g = brute_force_oracle(*lp.contour, *lp.pattern, oracle_grid, oracle_threads);
        std::printf("value  %.10g\n", g.value);
        std::printf("point  %.10g %.10g\n", g.point.x, g.point.y);
        std::printf("grid   %dx%d, cell diagonal %.6g, error bound %.6g\n", g.resolution,
                    g.resolution, g.cell_diagonal(), g.error_bound(lp.problem.lipschitz));
        return 0;
    }

    if (snap_cmd->parsed()) {
        std::ofstream out(snap_out);
        if (!out) throw Error("cannot write SVG file: " + snap_out);
        emit_svg(snap_trace, snap_step, out);
        std::printf("wrote %s\n", snap_out.c_str());
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
