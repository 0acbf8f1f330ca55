#pragma once

// Diagonal PRP-type projection method for convex-constrained monotone
// equations F(x) = 0, x in a closed convex set.
//
// Each iteration builds a direction from a clipped diagonal spectral scaling
// and a PRP-type mixing coefficient, finds a trial point z on that direction
// with a derivative-free backtracking search, then projects the iterate onto
// the hyperplane separating it from the solution set (and back onto the set).
// No Jacobian is formed and the only O(n) storage is a handful of vectors.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "monoeq/core.hpp"

namespace monoeq {

struct SolverConfig {
    double rho = 0.8;             ///< backtracking factor, (0,1)
    double sigma = 0.01;          ///< line-search sufficient-decrease constant, (0,1)
    double theta = 0.1;           ///< shrink factor of the sign safeguard, (0,1)
    double ell = 1e-10;           ///< lower clip of the spectral ratios, (0,1]
    double u = 1e10;              ///< upper clip of the spectral ratios, >= 1
    double mu = 1e10;             ///< direction-switch threshold
    double t = 1.0;               ///< damping constant of the mixing coefficient, > 1/4
    double eps_safeguard = 1e-10; ///< floor inside the sign safeguard
    double gamma = 1e-8;          ///< probe step of the trial-stepsize estimate
    double beta_floor = 1e-6;     ///< trial stepsizes at or below this fall back to 1
    double tol = 1e-5;            ///< stop when |F(x)| <= tol
    int max_iter = 1000;
    int max_backtracks = 60;
    /// Move along F(x_k) instead of F(z_k) in the hyperplane step. The
    /// default F(z_k) is what keeps iterates Fejer monotone.
    bool project_along_current_residual = false;

    /// Throws std::invalid_argument naming the first violated bound.
    void validate() const;
};

/// lambda_i of D_k = diag(1 / lambda_i). Every entry lies in [ell, u].
struct DiagonalScaling {
    Vector lambda;

    static DiagonalScaling identity(std::size_t dim) { return {Vector(dim, 1.0)}; }

    /// D F, i.e. F_i / lambda_i.
    [[nodiscard]] Vector apply(const Vector& f) const;
};

enum class DirectionBranch { pure_diagonal, combined };

enum class StepOutcome {
    projected,         ///< x_{k+1} from the hyperplane projection
    early_exit,        ///< z_k was feasible and already solved the system
    line_search_failed ///< no acceptable step within max_backtracks
};

enum class SolverStatus { converged, max_iter, line_search_failure, nonfinite_residual };

[[nodiscard]] std::string_view to_string(SolverStatus status) noexcept;
[[nodiscard]] std::string_view to_string(DirectionBranch branch) noexcept;
[[nodiscard]] std::string_view to_string(StepOutcome outcome) noexcept;

/// One row of the per-iteration trace. Quantities indexed by k refer to the
/// iterate x_k the iteration started from.
struct IterationRecord {
    int k = 0;
    double alpha = 0.0;          ///< accepted step; NaN if the search failed
    double beta = 0.0;           ///< mixing coefficient used to build d_k
    int backtracks = 0;          ///< m: the search made m + 1 probes
    DirectionBranch branch = DirectionBranch::pure_diagonal;
    double residual_norm = 0.0;  ///< |F(x_k)|
    double descent_value = 0.0;  ///< <F(x_k), d_k>
    double step_norm = 0.0;      ///< |x_{k+1} - x_k|
    double direction_norm = 0.0; ///< |d_k|
    double iterate_norm = 0.0;   ///< |x_k|
    double next_iterate_norm = 0.0;
    double lambda_min = 1.0;     ///< range of the scaling behind d_k
    double lambda_max = 1.0;
    StepOutcome outcome = StepOutcome::projected;
};

struct SolverReport {
    SolverStatus status = SolverStatus::max_iter;
    Vector solution;
    int iters = 0;
    std::int64_t fevals = 0;
    double final_norm = 0.0;
    std::chrono::nanoseconds elapsed{0};
    std::vector<IterationRecord> trace;
};

/// Replacement for y_i when its sign disagrees with s_i. With s_i > 0 and
/// y_i <= 0 the result is theta * max(|F_k^i|, |F_{k-1}^i|, eps); with
/// s_i < 0 and y_i >= 0 it is the negation. Otherwise y_i is returned as is.
[[nodiscard]] double safeguard_y(double s_i, double y_i, double f_new_i, double f_old_i,
                                 double theta, double eps) noexcept;

/// lambda_i = max(min(y_i / s_i, u), ell), or 1 where s_i == 0.
/// y_safeguarded must already have passed through safeguard_y.
[[nodiscard]] DiagonalScaling update_scaling(const Vector& s, const Vector& y_safeguarded,
                                             const SolverConfig& cfg);

/// Sign safeguard followed by update_scaling: the default scaling rule.
[[nodiscard]] DiagonalScaling safeguarded_scaling(const Vector& s, const Vector& y,
                                                  const Vector& f_new, const Vector& f_old,
                                                  const SolverConfig& cfg);

/// max{0, <F_k,y>/|F_{k-1}|^2 - t <F_k,d>/|F_{k-1}|^4 (<F_k,y>/|F_k|)^2}.
/// Requires f_prev_norm > 0 and |f| > 0. Never negative; a NaN expression
/// collapses to 0.
[[nodiscard]] double compute_beta(const Vector& f, double f_prev_norm, const Vector& y_prev,
                                  const Vector& d_prev, double t);

struct Direction {
    Vector d;
    DirectionBranch branch;
};

/// -F on the first iteration; afterwards -D F when
/// |<F, y_prev>| |d_prev| >= mu |F|, else -D F + beta d_prev.
[[nodiscard]] Direction compute_direction(const Vector& f, const DiagonalScaling& scaling,
                                          double beta, const Vector& d_prev,
                                          const Vector& y_prev, double mu,
                                          bool first_iteration);

struct LineSearchStep {
    double alpha;
    Vector z;
    Vector fz;
    int backtracks;
};

/// Smallest m in [0, max_backtracks] with
///   <F(x + a d), d> <= -sigma a |F(x + a d)| |d|^2,   a = beta_trial rho^m.
/// Every probe costs one evaluation; probes with a non-finite inner product
/// are rejected. Returns nullopt when every probe is rejected.
[[nodiscard]] std::optional<LineSearchStep> line_search(ResidualMap& residual, const Vector& x,
                                                        const Vector& d, double beta_trial,
                                                        const SolverConfig& cfg);

/// <F(x), d> / (<d, F(x + gamma d) - F(x)> / gamma), replaced by 1 when it is
/// non-finite or <= beta_floor. Costs one evaluation.
[[nodiscard]] double initial_trial_stepsize(ResidualMap& residual, const Vector& x,
                                            const Vector& fx, const Vector& d,
                                            const SolverConfig& cfg);

/// P[x - xi F(z)] with xi = <x - z, F(z)> / |F(z)|^2. Requires |F(z)| > 0.
[[nodiscard]] Vector projection_step(const Vector& x, const Vector& z, const Vector& fz,
                                     const ConstraintSet& set);

/// Hooks that let ablation variants swap the scaling rule and switch the
/// mixing coefficient off while keeping the rest of the iteration intact.
struct UpdateRules {
    using ScalingRule = std::function<DiagonalScaling(
        const Vector& s, const Vector& y, const Vector& f_new, const Vector& f_old,
        const SolverConfig& cfg)>;

    ScalingRule scaling = safeguarded_scaling;
    bool use_beta = true;
};

struct SolverState {
    int k = 0;
    Vector x;
    Vector fx;
    double f_norm = 0.0;
    Vector d;                    ///< direction for the next iteration
    double beta = 0.0;           ///< mixing coefficient that produced d
    DirectionBranch branch = DirectionBranch::pure_diagonal;
    DiagonalScaling scaling;
    double prev_f_norm = 0.0;
    Vector prev_d;
    Vector prev_y;               ///< raw F(x_k) - F(x_{k-1})
    std::vector<IterationRecord> trace;
};

/// Resumable solver: construct, then call step() until finished(), or call
/// run(). The residual map must outlive the solver.
class DppmSolver {
public:
    DppmSolver(ResidualMap& residual, ConstraintSet set, const Vector& x0, SolverConfig cfg,
               UpdateRules rules = {});

    /// Performs one iteration. Returns false, doing nothing, once finished.
    bool step();
    SolverReport run();

    [[nodiscard]] bool finished() const noexcept { return status_.has_value(); }
    [[nodiscard]] std::optional<SolverStatus> status() const noexcept { return status_; }
    [[nodiscard]] const SolverState& state() const noexcept { return state_; }
    [[nodiscard]] const SolverConfig& config() const noexcept { return cfg_; }
    [[nodiscard]] SolverReport report() const;

private:
    void iterate();
    void check_termination();

    ResidualMap& residual_;
    ConstraintSet set_;
    SolverConfig cfg_;
    UpdateRules rules_;
    SolverState state_;
    std::optional<SolverStatus> status_;
    std::int64_t evals_at_start_ = 0;
    std::chrono::nanoseconds elapsed_{0};
};

/// Runs the default method to completion.
SolverReport solve(ResidualMap& residual, const ConstraintSet& set, const Vector& x0,
                   const SolverConfig& cfg = {});

} // namespace monoeq
