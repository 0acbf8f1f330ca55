#include "monoeq/bench.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace monoeq {

Metric parse_metric(std::string_view text) {
    if (text == "iter" || text == "iters") return Metric::iters;
    if (text == "fval" || text == "fevals") return Metric::fevals;
    if (text == "time" || text == "time_ms") return Metric::time_ms;
    throw std::invalid_argument("unknown metric '" + std::string(text) +
                                "' (expected iter, fval or time)");
}

std::string_view to_string(Metric metric) noexcept {
    switch (metric) {
    case Metric::iters: return "iter";
    case Metric::fevals: return "fval";
    case Metric::time_ms: return "time";
    }
    return "unknown";
}

std::vector<double> log_spaced_taus(double tau_max, int count) {
    if (!(tau_max >= 1.0) || count < 2) {
        throw std::invalid_argument("log_spaced_taus: need tau_max >= 1 and count >= 2");
    }
    std::vector<double> taus(static_cast<std::size_t>(count));
    const double top = std::log(tau_max);
    for (int i = 0; i < count; ++i) {
        taus[static_cast<std::size_t>(i)] = std::exp(top * i / (count - 1));
    }
    taus.front() = 1.0;
    taus.back() = tau_max;
    return taus;
}

namespace {

using CellKey = std::tuple<int, std::size_t, int>;

double metric_value(const RunResult& r, Metric metric) {
    switch (metric) {
    case Metric::iters: return static_cast<double>(r.iters);
    case Metric::fevals: return static_cast<double>(r.fevals);
    case Metric::time_ms: return r.time_ms;
    }
    return 0.0;
}

} // namespace

std::vector<ProfileCurve> performance_profile(const std::vector<RunResult>& results,
                                              Metric metric, const std::vector<double>& taus) {
    for (double tau : taus) {
        if (!(tau >= 1.0)) throw std::invalid_argument("performance_profile: tau below 1");
    }

    std::vector<std::string> solvers;
    std::map<CellKey, std::map<std::string, double>> cells;
    constexpr double inf = std::numeric_limits<double>::infinity();
    for (const auto& r : results) {
        if (std::find(solvers.begin(), solvers.end(), r.solver_name) == solvers.end()) {
            solvers.push_back(r.solver_name);
        }
        const CellKey key{r.problem_id, r.dim, static_cast<int>(r.init)};
        const double value = r.status == SolverStatus::converged ? metric_value(r, metric) : inf;
        if (!cells[key].emplace(r.solver_name, value).second) {
            throw std::invalid_argument("performance_profile: duplicate result for solver '" +
                                        r.solver_name + "'");
        }
    }
    if (solvers.size() < 2) {
        throw std::invalid_argument("performance_profile: need results for at least two solvers");
    }
    for (const auto& [key, per_solver] : cells) {
        if (per_solver.size() != solvers.size()) {
            throw std::invalid_argument(
                "performance_profile: solvers do not cover a common set of cells");
        }
    }

    // ratios[s][c]
    std::vector<std::vector<double>> ratios(solvers.size());
    for (const auto& [key, per_solver] : cells) {
        double best = inf;
        for (const auto& [name, value] : per_solver) best = std::min(best, value);
        const double denom = best > 0.0 ? best : 1.0;
        for (std::size_t s = 0; s < solvers.size(); ++s) {
            const double value = per_solver.at(solvers[s]);
            double ratio = inf;
            if (std::isfinite(value)) ratio = value == best ? 1.0 : value / denom;
            ratios[s].push_back(ratio);
        }
    }

    const double cell_count = static_cast<double>(cells.size());
    std::vector<ProfileCurve> curves;
    curves.reserve(solvers.size());
    for (std::size_t s = 0; s < solvers.size(); ++s) {
        std::vector<double> sorted = ratios[s];
        std::sort(sorted.begin(), sorted.end());
        ProfileCurve curve{solvers[s], {}};
        curve.points.reserve(taus.size());
        for (double tau : taus) {
            const auto hits = std::upper_bound(sorted.begin(), sorted.end(), tau) - sorted.begin();
            curve.points.push_back({tau, static_cast<double>(hits) / cell_count});
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

} // namespace monoeq
