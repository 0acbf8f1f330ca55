#include "monoeq/dppm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace monoeq {

namespace {

using Clock = std::chrono::steady_clock;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("SolverConfig: " + what);
}

} // namespace

void SolverConfig::validate() const {
    require(rho > 0.0 && rho < 1.0, "rho must lie in (0,1)");
    require(sigma > 0.0 && sigma < 1.0, "sigma must lie in (0,1)");
    require(theta > 0.0 && theta < 1.0, "theta must lie in (0,1)");
    require(ell > 0.0 && ell <= 1.0 && u >= 1.0, "need 0 < ell <= 1 <= u");
    require(mu > 0.0, "mu must be positive");
    require(t > 0.25, "t must exceed 1/4");
    require(eps_safeguard > 0.0, "eps_safeguard must be positive");
    require(gamma > 0.0, "gamma must be positive");
    require(tol > 0.0, "tol must be positive");
    require(max_iter > 0, "max_iter must be positive");
    require(max_backtracks > 0, "max_backtracks must be positive");
}

Vector DiagonalScaling::apply(const Vector& f) const {
    if (f.dim() != lambda.dim()) {
        throw std::invalid_argument("DiagonalScaling::apply: dimension mismatch");
    }
    Vector out(f.dim());
    for (std::size_t i = 0; i < f.dim(); ++i) out[i] = f[i] / lambda[i];
    return out;
}

std::string_view to_string(SolverStatus status) noexcept {
    switch (status) {
    case SolverStatus::converged: return "converged";
    case SolverStatus::max_iter: return "max_iter";
    case SolverStatus::line_search_failure: return "line_search_failure";
    case SolverStatus::nonfinite_residual: return "nonfinite_residual";
    }
    return "unknown";
}

std::string_view to_string(DirectionBranch branch) noexcept {
    return branch == DirectionBranch::pure_diagonal ? "pure_diagonal" : "combined";
}

std::string_view to_string(StepOutcome outcome) noexcept {
    switch (outcome) {
    case StepOutcome::projected: return "projected";
    case StepOutcome::early_exit: return "early_exit";
    case StepOutcome::line_search_failed: return "line_search_failed";
    }
    return "unknown";
}

double safeguard_y(double s_i, double y_i, double f_new_i, double f_old_i, double theta,
                   double eps) noexcept {
    if (s_i > 0.0 && y_i <= 0.0) {
        return theta * std::max(std::max(std::abs(f_new_i), std::abs(f_old_i)), eps);
    }
    if (s_i < 0.0 && y_i >= 0.0) {
        return -theta * std::max(std::max(std::abs(f_new_i), std::abs(f_old_i)), eps);
    }
    return y_i;
}

DiagonalScaling update_scaling(const Vector& s, const Vector& y_safeguarded,
                               const SolverConfig& cfg) {
    if (s.dim() != y_safeguarded.dim()) {
        throw std::invalid_argument("update_scaling: dimension mismatch");
    }
    DiagonalScaling out{Vector(s.dim(), 1.0)};
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (s[i] == 0.0) continue;
        const double ratio = y_safeguarded[i] / s[i];
        if (std::isnan(ratio)) continue;
        out.lambda[i] = std::max(std::min(ratio, cfg.u), cfg.ell);
    }
    return out;
}

DiagonalScaling safeguarded_scaling(const Vector& s, const Vector& y, const Vector& f_new,
                                    const Vector& f_old, const SolverConfig& cfg) {
    Vector guarded(y.dim());
    for (std::size_t i = 0; i < y.dim(); ++i) {
        guarded[i] = safeguard_y(s[i], y[i], f_new[i], f_old[i], cfg.theta, cfg.eps_safeguard);
    }
    return update_scaling(s, guarded, cfg);
}

double compute_beta(const Vector& f, double f_prev_norm, const Vector& y_prev,
                    const Vector& d_prev, double t) {
    const double fy = dot(f, y_prev);
    const double fd = dot(f, d_prev);
    const double prev_sq = f_prev_norm * f_prev_norm;
    const double ratio = fy / norm2(f);
    const double value = fy / prev_sq - t * (fd / (prev_sq * prev_sq)) * (ratio * ratio);
    return value > 0.0 ? value : 0.0;
}

Direction compute_direction(const Vector& f, const DiagonalScaling& scaling, double beta,
                            const Vector& d_prev, const Vector& y_prev, double mu,
                            bool first_iteration) {
    const std::size_t n = f.dim();
    Direction out{Vector(n), DirectionBranch::pure_diagonal};
    if (first_iteration) {
        for (std::size_t i = 0; i < n; ++i) out.d[i] = -f[i];
        return out;
    }
    if (scaling.lambda.dim() != n || d_prev.dim() != n || y_prev.dim() != n) {
        throw std::invalid_argument("compute_direction: dimension mismatch");
    }

    const bool pure = std::abs(dot(f, y_prev)) * norm2(d_prev) >= mu * norm2(f);
    if (pure) {
        for (std::size_t i = 0; i < n; ++i) out.d[i] = -(f[i] / scaling.lambda[i]);
    } else {
        out.branch = DirectionBranch::combined;
        for (std::size_t i = 0; i < n; ++i) {
            out.d[i] = -(f[i] / scaling.lambda[i]) + beta * d_prev[i];
        }
    }
    return out;
}

std::optional<LineSearchStep> line_search(ResidualMap& residual, const Vector& x,
                                          const Vector& d, double beta_trial,
                                          const SolverConfig& cfg) {
    if (!(beta_trial > 0.0)) {
        throw std::invalid_argument("line_search: trial stepsize must be positive");
    }
    const double d_sq = dot(d, d);
    if (!(d_sq > 0.0)) {
        throw std::invalid_argument("line_search: direction must be nonzero");
    }

    for (int m = 0; m <= cfg.max_backtracks; ++m) {
        const double alpha = beta_trial * std::pow(cfg.rho, m);
        Vector z = add_scaled(x, alpha, d);
        Vector fz = residual.evaluate(z);
        const double lhs = dot(fz, d);
        const double rhs = -cfg.sigma * alpha * norm2(fz) * d_sq;
        if (std::isfinite(lhs) && lhs <= rhs) {
            return LineSearchStep{alpha, std::move(z), std::move(fz), m};
        }
    }
    return std::nullopt;
}

double initial_trial_stepsize(ResidualMap& residual, const Vector& x, const Vector& fx,
                              const Vector& d, const SolverConfig& cfg) {
    const Vector probe = residual.evaluate(add_scaled(x, cfg.gamma, d));
    const double curvature = dot(d, subtract(probe, fx)) / cfg.gamma;
    const double beta = dot(fx, d) / curvature;
    if (!std::isfinite(beta) || beta <= cfg.beta_floor) return 1.0;
    return beta;
}

namespace {

Vector hyperplane_step(const Vector& x, const Vector& z, const Vector& fz, const Vector& along,
                       const ConstraintSet& set) {
    const double xi = dot(subtract(x, z), fz) / dot(fz, fz);
    return set.project(add_scaled(x, -xi, along));
}

} // namespace

Vector projection_step(const Vector& x, const Vector& z, const Vector& fz,
                       const ConstraintSet& set) {
    return hyperplane_step(x, z, fz, fz, set);
}

DppmSolver::DppmSolver(ResidualMap& residual, ConstraintSet set, const Vector& x0,
                       SolverConfig cfg, UpdateRules rules)
    : residual_(residual), set_(std::move(set)), cfg_(cfg), rules_(std::move(rules)) {
    cfg_.validate();
    if (x0.dim() != residual_.dim()) {
        throw std::invalid_argument("DppmSolver: x0 has dimension " + std::to_string(x0.dim()) +
                                    ", residual expects " + std::to_string(residual_.dim()));
    }
    if (!rules_.scaling) {
        throw std::invalid_argument("DppmSolver: empty scaling rule");
    }

    const auto start = Clock::now();
    evals_at_start_ = residual_.eval_count();
    const std::size_t n = x0.dim();
    state_.x = set_.contains(x0) ? x0 : set_.project(x0);
    state_.fx = residual_.evaluate(state_.x);
    state_.f_norm = norm2(state_.fx);
    state_.scaling = DiagonalScaling::identity(n);
    state_.prev_d = Vector(n);
    state_.prev_y = Vector(n);
    if (all_finite(state_.fx)) {
        auto first = compute_direction(state_.fx, state_.scaling, 0.0, state_.prev_d,
                                       state_.prev_y, cfg_.mu, true);
        state_.d = std::move(first.d);
        state_.branch = first.branch;
    }
    check_termination();
    elapsed_ += Clock::now() - start;
}

void DppmSolver::check_termination() {
    if (status_) return;
    if (!all_finite(state_.fx)) {
        status_ = SolverStatus::nonfinite_residual;
    } else if (state_.f_norm <= cfg_.tol) {
        status_ = SolverStatus::converged;
    } else if (state_.k >= cfg_.max_iter) {
        status_ = SolverStatus::max_iter;
    } else if (!all_finite(state_.d)) {
        status_ = SolverStatus::nonfinite_residual;
    }
}

bool DppmSolver::step() {
    if (status_) return false;
    const auto start = Clock::now();
    iterate();
    check_termination();
    elapsed_ += Clock::now() - start;
    return true;
}

void DppmSolver::iterate() {
    SolverState& st = state_;
    const Vector& d = st.d;

    IterationRecord rec;
    rec.k = st.k;
    rec.beta = st.beta;
    rec.branch = st.branch;
    rec.residual_norm = st.f_norm;
    rec.descent_value = dot(st.fx, d);
    rec.direction_norm = norm2(d);
    rec.iterate_norm = norm2(st.x);
    rec.next_iterate_norm = rec.iterate_norm;
    const auto [lo, hi] = std::minmax_element(st.scaling.lambda.begin(), st.scaling.lambda.end());
    rec.lambda_min = *lo;
    rec.lambda_max = *hi;

    if (!(rec.direction_norm > 0.0)) {
        // A zero direction with a nonzero residual leaves nothing to search along.
        status_ = SolverStatus::line_search_failure;
        return;
    }

    const double beta_trial = initial_trial_stepsize(residual_, st.x, st.fx, d, cfg_);
    auto accepted = line_search(residual_, st.x, d, beta_trial, cfg_);
    if (!accepted) {
        rec.alpha = std::numeric_limits<double>::quiet_NaN();
        rec.backtracks = cfg_.max_backtracks;
        rec.outcome = StepOutcome::line_search_failed;
        st.trace.push_back(rec);
        status_ = SolverStatus::line_search_failure;
        return;
    }
    rec.alpha = accepted->alpha;
    rec.backtracks = accepted->backtracks;

    Vector x_next;
    Vector f_next;
    if (set_.contains(accepted->z) && norm2(accepted->fz) <= cfg_.tol) {
        rec.outcome = StepOutcome::early_exit;
        x_next = std::move(accepted->z);
        f_next = std::move(accepted->fz);
    } else {
        if (dot(accepted->fz, accepted->fz) > 0.0) {
            const Vector& along =
                cfg_.project_along_current_residual ? st.fx : accepted->fz;
            x_next = hyperplane_step(st.x, accepted->z, accepted->fz, along, set_);
        } else {
            // z solves the system but lies outside the set; no hyperplane exists.
            x_next = set_.project(accepted->z);
        }
        f_next = residual_.evaluate(x_next);
    }
    rec.step_norm = norm2(subtract(x_next, st.x));
    rec.next_iterate_norm = norm2(x_next);
    st.trace.push_back(rec);

    if (!all_finite(f_next)) {
        status_ = SolverStatus::nonfinite_residual;
        return;
    }

    const Vector s = subtract(x_next, st.x);
    Vector y = subtract(f_next, st.fx);
    st.scaling = rules_.scaling(s, y, f_next, st.fx, cfg_);

    st.prev_f_norm = st.f_norm;
    st.prev_d = std::move(st.d);
    st.prev_y = std::move(y);
    st.x = std::move(x_next);
    st.fx = std::move(f_next);
    st.f_norm = norm2(st.fx);
    ++st.k;

    if (st.f_norm > cfg_.tol && st.k < cfg_.max_iter) {
        st.beta = rules_.use_beta
                      ? compute_beta(st.fx, st.prev_f_norm, st.prev_y, st.prev_d, cfg_.t)
                      : 0.0;
        auto next = compute_direction(st.fx, st.scaling, st.beta, st.prev_d, st.prev_y,
                                      cfg_.mu, false);
        st.d = std::move(next.d);
        st.branch = next.branch;
    } else {
        st.d = Vector(st.x.dim());
        st.beta = 0.0;
    }
}

SolverReport DppmSolver::run() {
    while (step()) {
    }
    return report();
}

SolverReport DppmSolver::report() const {
    SolverReport out;
    out.status = status_.value_or(SolverStatus::max_iter);
    out.solution = state_.x;
    out.iters = state_.k;
    out.fevals = residual_.eval_count() - evals_at_start_;
    out.final_norm = state_.f_norm;
    out.elapsed = elapsed_;
    out.trace = state_.trace;
    return out;
}

SolverReport solve(ResidualMap& residual, const ConstraintSet& set, const Vector& x0,
                   const SolverConfig& cfg) {
    DppmSolver solver(residual, set, x0, cfg);
    return solver.run();
}

} // namespace monoeq
