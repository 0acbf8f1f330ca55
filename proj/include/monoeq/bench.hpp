#pragma once

// Benchmark harness: runs solver variants over a grid of problem cells,
// persists the results, and turns them into Dolan-More performance profiles.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "monoeq/baselines.hpp"
#include "monoeq/dppm.hpp"
#include "monoeq/problems.hpp"

namespace monoeq {

struct RunResult {
    std::string solver_name;
    int problem_id = 0;
    std::size_t dim = 0;
    InitialPoint init = InitialPoint::x1;
    SolverStatus status = SolverStatus::max_iter;
    int iters = 0;
    std::int64_t fevals = 0;
    double time_ms = 0.0;
    double final_norm = 0.0;
};

/// Short status codes used in result files: converged, max_iter, ls_fail,
/// nonfinite.
[[nodiscard]] std::string_view status_code(SolverStatus status) noexcept;
[[nodiscard]] SolverStatus parse_status_code(std::string_view code);

/// Runs every (cell, solver) pair on a fresh residual map. Results come back
/// cell-major with solvers in the order given, whatever the worker count.
/// Solver failures are recorded in the status column, never thrown.
[[nodiscard]] std::vector<RunResult> run_grid(const std::vector<VariantSpec>& solvers,
                                              const std::vector<GridCell>& grid,
                                              const SolverConfig& cfg, int workers = 1);

/// Runs one cell; the timer covers the solve only.
[[nodiscard]] RunResult run_cell(const VariantSpec& solver, const GridCell& cell,
                                 const SolverConfig& cfg);

enum class Metric { iters, fevals, time_ms };

/// Accepts iter, fval, time.
[[nodiscard]] Metric parse_metric(std::string_view text);
[[nodiscard]] std::string_view to_string(Metric metric) noexcept;

struct ProfilePoint {
    double tau;
    double fraction;
};

struct ProfileCurve {
    std::string solver_name;
    std::vector<ProfilePoint> points;
};

/// `count` log-spaced values from 1 to tau_max inclusive.
[[nodiscard]] std::vector<double> log_spaced_taus(double tau_max = 100.0, int count = 200);

/// For every cell, r = metric / (best metric over solvers on that cell); a
/// run that did not converge gets r = +inf. A curve point at tau is the
/// fraction of cells with r <= tau, so tied winners all count at tau = 1.
/// A best metric of 0 (e.g. zero iterations) is replaced by 1 as the
/// denominator.
///
/// Throws std::invalid_argument with fewer than two solvers, when the
/// solvers do not cover the same cells, or when a tau is below 1.
[[nodiscard]] std::vector<ProfileCurve> performance_profile(const std::vector<RunResult>& results,
                                                            Metric metric,
                                                            const std::vector<double>& taus);

/// Header: solver,problem,dim,init,status,iter,fval,time_ms,norm
void write_csv(const std::vector<RunResult>& results, const std::filesystem::path& path);
[[nodiscard]] std::vector<RunResult> read_csv(const std::filesystem::path& path);

/// One row per IterationRecord.
void write_trace_csv(const std::vector<IterationRecord>& trace, const std::filesystem::path& path);

/// Step curves on a log-scaled tau axis.
void write_profile_svg(const std::vector<ProfileCurve>& curves, const std::filesystem::path& path,
                       std::string_view title = "Performance profile");

} // namespace monoeq
