#include "monoeq/problems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monoeq {

ProblemInstance make_problem(int id, std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("make_problem: dimension must be at least 2");
    }
    ProblemInstance p;
    p.id = id;
    p.dim = n;
    switch (id) {
    case 1:
        p.name = "Modified Exponential Function";
        p.kernel = [](std::span<const double> x, std::span<double> out) {
            out[0] = std::exp(x[0]) - 1.0;
            for (std::size_t i = 1; i < x.size(); ++i) {
                out[i] = std::exp(x[i]) - x[i - 1] - 1.0;
            }
        };
        break;
    case 2: {
        p.name = "Modified Logarithmic Function";
        const double dn = static_cast<double>(n);
        p.kernel = [dn](std::span<const double> x, std::span<double> out) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                out[i] = std::log(std::abs(x[i]) + 1.0) - x[i] / dn;
            }
        };
        break;
    }
    case 3:
        p.name = "Nonsmooth Function";
        p.kernel = [](std::span<const double> x, std::span<double> out) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                out[i] = 2.0 * x[i] - std::sin(std::abs(x[i]));
            }
        };
        break;
    case 4:
        p.name = "Min-Max Function";
        p.kernel = [](std::span<const double> x, std::span<double> out) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                const double a = std::abs(x[i]);
                out[i] = std::min(std::min(a, x[i] * x[i]), std::max(a, x[i] * x[i] * x[i]));
            }
        };
        break;
    case 5:
        p.name = "Strictly Convex Function";
        p.kernel = [](std::span<const double> x, std::span<double> out) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                out[i] = std::exp(x[i]) - 1.0;
            }
        };
        break;
    default:
        throw std::invalid_argument("make_problem: unknown problem id " + std::to_string(id) +
                                    " (expected 1..5)");
    }
    return p;
}

std::string to_string(InitialPoint point) {
    return "x" + std::to_string(static_cast<int>(point));
}

InitialPoint parse_initial_point(std::string_view text) {
    if (text.size() == 2 && (text[0] == 'x' || text[0] == 'X') && text[1] >= '1' &&
        text[1] <= '8') {
        return static_cast<InitialPoint>(text[1] - '0');
    }
    throw std::invalid_argument("unknown initial point '" + std::string(text) +
                                "' (expected x1..x8)");
}

Vector make_initial_point(InitialPoint point, std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("make_initial_point: dimension must be positive");
    }
    const double dn = static_cast<double>(n);
    Vector x(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const double i = static_cast<double>(idx + 1);
        switch (point) {
        case InitialPoint::x1: x[idx] = 1.0; break;
        case InitialPoint::x2: x[idx] = 0.1; break;
        // Underflows to exactly 0 past i = 1074.
        case InitialPoint::x3: x[idx] = std::ldexp(1.0, -static_cast<int>(idx + 1)); break;
        case InitialPoint::x4: x[idx] = i * (dn - 1.0) / dn; break;
        case InitialPoint::x5: x[idx] = (i - 1.0) / dn; break;
        case InitialPoint::x6: x[idx] = 1.0 / i; break;
        case InitialPoint::x7: x[idx] = (dn - i) / dn; break;
        case InitialPoint::x8: x[idx] = i / dn; break;
        default: throw std::invalid_argument("make_initial_point: unknown point");
        }
    }
    return x;
}

std::vector<GridCell> make_grid(const std::vector<int>& problems,
                                const std::vector<std::size_t>& dims,
                                const std::vector<InitialPoint>& inits) {
    std::vector<GridCell> grid;
    grid.reserve(problems.size() * dims.size() * inits.size());
    for (int p : problems) {
        for (std::size_t n : dims) {
            for (InitialPoint x0 : inits) grid.push_back({p, n, x0});
        }
    }
    return grid;
}

std::vector<GridCell> benchmark_grid() {
    return make_grid({1, 2, 3, 4, 5}, {benchmark_dims.begin(), benchmark_dims.end()},
                     {all_initial_points.begin(), all_initial_points.end()});
}

} // namespace monoeq
