#include "monoeq/bench.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace monoeq {

std::string_view status_code(SolverStatus status) noexcept {
    switch (status) {
    case SolverStatus::converged: return "converged";
    case SolverStatus::max_iter: return "max_iter";
    case SolverStatus::line_search_failure: return "ls_fail";
    case SolverStatus::nonfinite_residual: return "nonfinite";
    }
    return "unknown";
}

SolverStatus parse_status_code(std::string_view code) {
    if (code == "converged") return SolverStatus::converged;
    if (code == "max_iter") return SolverStatus::max_iter;
    if (code == "ls_fail") return SolverStatus::line_search_failure;
    if (code == "nonfinite") return SolverStatus::nonfinite_residual;
    throw std::invalid_argument("unknown status code '" + std::string(code) + "'");
}

RunResult run_cell(const VariantSpec& solver, const GridCell& cell, const SolverConfig& cfg) {
    const ProblemInstance problem = make_problem(cell.problem, cell.dim);
    const Vector x0 = make_initial_point(cell.init, cell.dim);
    ResidualMap residual = problem.residual();
    const VariantSolver run = make_variant(solver, cfg);

    const auto start = std::chrono::steady_clock::now();
    const SolverReport report = run(residual, problem.constraint, x0);
    const auto stop = std::chrono::steady_clock::now();

    RunResult out;
    out.solver_name = solver.name;
    out.problem_id = cell.problem;
    out.dim = cell.dim;
    out.init = cell.init;
    out.status = report.status;
    out.iters = report.iters;
    out.fevals = report.fevals;
    out.time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    out.final_norm = report.final_norm;
    return out;
}

std::vector<RunResult> run_grid(const std::vector<VariantSpec>& solvers,
                                const std::vector<GridCell>& grid, const SolverConfig& cfg,
                                int workers) {
    if (grid.empty()) throw std::invalid_argument("run_grid: empty grid");
    if (solvers.empty()) throw std::invalid_argument("run_grid: no solvers");
    cfg.validate();

    const std::size_t jobs = grid.size() * solvers.size();
    std::vector<RunResult> results(jobs);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (std::size_t job = next++; job < jobs; job = next++) {
            try {
                results[job] = run_cell(solvers[job % solvers.size()],
                                        grid[job / solvers.size()], cfg);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = jobs;
            }
        }
    };

    const std::size_t threads =
        std::min<std::size_t>(jobs, static_cast<std::size_t>(workers > 0 ? workers : 1));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
    return results;
}

} // namespace monoeq
