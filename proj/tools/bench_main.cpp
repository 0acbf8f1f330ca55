// Command-line driver for the benchmark harness.
//
//   bench run     --solvers dppm,dppm-beta0 --problems 1-5 --dims 1000,5000
//                 --inits x1-x8 --out results.csv
//   bench profile --metric iter --in results.csv --out profile.svg
//   bench solve   --problem 3 --dim 1000 --init x1 --trace trace.csv
//
// Solver failures are data and still exit 0; only usage or I/O errors fail.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdlib>
#include <exception>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "monoeq/bench.hpp"

using namespace monoeq;

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!item.empty()) items.push_back(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return items;
}

long long to_integer(const std::string& text) {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad integer '" + text + "'");
    return v;
}

/// "1-5" or "1,3,4" (or a mix such as "1-2,5").
std::vector<int> parse_problems(const std::string& text) {
    std::vector<int> out;
    for (const auto& item : split_list(text)) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) {
            out.push_back(static_cast<int>(to_integer(item)));
            continue;
        }
        const int lo = static_cast<int>(to_integer(item.substr(0, dash)));
        const int hi = static_cast<int>(to_integer(item.substr(dash + 1)));
        if (lo > hi) throw std::invalid_argument("empty range '" + item + "'");
        for (int p = lo; p <= hi; ++p) out.push_back(p);
    }
    return out;
}

std::vector<std::size_t> parse_dims(const std::string& text) {
    std::vector<std::size_t> out;
    for (const auto& item : split_list(text)) {
        const long long n = to_integer(item);
        if (n < 2) throw std::invalid_argument("dimension must be at least 2: '" + item + "'");
        out.push_back(static_cast<std::size_t>(n));
    }
    return out;
}

/// "x1-x8" or "x1,x3".
std::vector<InitialPoint> parse_inits(const std::string& text) {
    std::vector<InitialPoint> out;
    for (const auto& item : split_list(text)) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) {
            out.push_back(parse_initial_point(item));
            continue;
        }
        const int lo = static_cast<int>(parse_initial_point(item.substr(0, dash)));
        const int hi = static_cast<int>(parse_initial_point(item.substr(dash + 1)));
        if (lo > hi) throw std::invalid_argument("empty range '" + item + "'");
        for (int p = lo; p <= hi; ++p) out.push_back(static_cast<InitialPoint>(p));
    }
    return out;
}

int worker_count(int requested) {
    if (const char* env = std::getenv("BENCH_WORKERS"); env != nullptr && *env != '\0') {
        const long long n = to_integer(env);
        if (n < 1) throw std::invalid_argument("BENCH_WORKERS must be a positive integer");
        return static_cast<int>(n);
    }
    return requested;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmark harness for projection methods on monotone equations"};
    app.require_subcommand(1);

    SolverConfig cfg;

    std::string solvers_arg = "dppm";
    std::string problems_arg = "1-5";
    std::string dims_arg = "1000,5000,10000,50000,100000";
    std::string inits_arg = "x1-x8";
    std::string out_csv = "results.csv";
    int workers = 1;
    auto* run = app.add_subcommand("run", "Run solvers over a problem grid and write a CSV");
    run->add_option("--solvers", solvers_arg, "Comma-separated variant names")->capture_default_str();
    run->add_option("--problems", problems_arg, "Problem ids, e.g. 1-5 or 1,3")->capture_default_str();
    run->add_option("--dims", dims_arg, "Comma-separated dimensions")->capture_default_str();
    run->add_option("--inits", inits_arg, "Initial points, e.g. x1-x8 or x1,x4")->capture_default_str();
    run->add_option("--tol", cfg.tol, "Residual-norm tolerance")->capture_default_str();
    run->add_option("--max-iter", cfg.max_iter, "Iteration cap")->capture_default_str();
    run->add_option("--workers", workers, "Parallel runs (BENCH_WORKERS overrides)")->capture_default_str();
    run->add_option("--out", out_csv, "Output CSV path")->capture_default_str();
    run->add_option("--max-backtracks", cfg.max_backtracks, "Line-search probe cap")->capture_default_str();
    run->add_flag("--project-along-fx", cfg.project_along_current_residual,
                  "Hyperplane step along F(x_k) instead of F(z_k)");

    std::string metric_arg = "iter";
    std::string in_csv = "results.csv";
    std::string out_svg = "profile.svg";
    double tau_max = 100.0;
    auto* profile = app.add_subcommand("profile", "Performance profile of a results CSV as SVG");
    profile->add_option("--metric", metric_arg, "iter, fval or time")->capture_default_str();
    profile->add_option("--in", in_csv, "Results CSV")->capture_default_str();
    profile->add_option("--out", out_svg, "Output SVG path")->capture_default_str();
    profile->add_option("--tau-max", tau_max, "Largest performance ratio plotted")->capture_default_str();

    int problem_id = 3;
    std::size_t dim = 1000;
    std::string init_arg = "x1";
    std::string solver_arg = "dppm";
    std::string trace_csv;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one problem instance and report");
    solve_cmd->add_option("--problem", problem_id, "Problem id 1..5")->capture_default_str();
    solve_cmd->add_option("--dim", dim, "Dimension")->capture_default_str();
    solve_cmd->add_option("--init", init_arg, "Initial point x1..x8")->capture_default_str();
    solve_cmd->add_option("--solver", solver_arg, "Variant name")->capture_default_str();
    solve_cmd->add_option("--tol", cfg.tol, "Residual-norm tolerance")->capture_default_str();
    solve_cmd->add_option("--max-iter", cfg.max_iter, "Iteration cap")->capture_default_str();
    solve_cmd->add_option("--trace", trace_csv, "Write the per-iteration trace to this CSV");
    solve_cmd->add_option("--max-backtracks", cfg.max_backtracks, "Line-search probe cap")->capture_default_str();
    solve_cmd->add_flag("--project-along-fx", cfg.project_along_current_residual,
                        "Hyperplane step along F(x_k) instead of F(z_k)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            std::vector<VariantSpec> solvers;
            for (const auto& name : split_list(solvers_arg)) solvers.push_back(variant_by_name(name));
            const auto grid =
                make_grid(parse_problems(problems_arg), parse_dims(dims_arg), parse_inits(inits_arg));
            if (grid.empty() || solvers.empty()) throw std::invalid_argument("nothing to run");
            for (const auto& cell : grid) (void)make_problem(cell.problem, 2);

            const auto results = run_grid(solvers, grid, cfg, worker_count(workers));
            write_csv(results, out_csv);

            std::map<std::string, std::pair<int, int>> tally;
            for (const auto& r : results) {
                auto& [ok, total] = tally[r.solver_name];
                ok += r.status == SolverStatus::converged ? 1 : 0;
                ++total;
            }
            for (const auto& s : solvers) {
                const auto [ok, total] = tally[s.name];
                fmt::print("{:<20} converged {}/{}\n", s.name, ok, total);
            }
            fmt::print("wrote {} rows to {}\n", results.size(), out_csv);
        } else if (profile->parsed()) {
            const Metric metric = parse_metric(metric_arg);
            const auto results = read_csv(in_csv);
            const auto curves = performance_profile(results, metric, log_spaced_taus(tau_max));
            write_profile_svg(curves, out_svg,
                              fmt::format("Performance profile ({})", to_string(metric)));
            for (const auto& c : curves) {
                fmt::print("{:<20} rho(1) = {:.3f}  rho({:g}) = {:.3f}\n", c.solver_name,
                           c.points.front().fraction, c.points.back().tau,
                           c.points.back().fraction);
            }
            fmt::print("wrote {}\n", out_svg);
        } else if (solve_cmd->parsed()) {
            const VariantSpec spec = variant_by_name(solver_arg);
            const ProblemInstance problem = make_problem(problem_id, dim);
            ResidualMap residual = problem.residual();
            DppmSolver solver(residual, problem.constraint,
                              make_initial_point(parse_initial_point(init_arg), dim), cfg,
                              make_rules(spec));
            const SolverReport report = solver.run();
            fmt::print("problem {} ({}), n = {}, init {}, solver {}\n", problem.id, problem.name,
                       dim, init_arg, spec.name);
            fmt::print("status {}  ITER {}  FVAL {}  TIME {:.3f} ms  NORM {:.2e}\n",
                       to_string(report.status), report.iters, report.fevals,
                       std::chrono::duration<double, std::milli>(report.elapsed).count(),
                       report.final_norm);
            if (!trace_csv.empty()) {
                write_trace_csv(report.trace, trace_csv);
                fmt::print("wrote {} trace rows to {}\n", report.trace.size(), trace_csv);
            }
        }
    } catch (const std::exception& e) {
        fmt::print(stderr, "bench: {}\n", e.what());
        return 1;
    }
    return 0;
}
