#pragma once

// The five monotone test systems on the nonnegative orthant, the eight
// standard starting points, and the benchmark grid built from them.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "monoeq/core.hpp"

namespace monoeq {

struct ProblemInstance {
    int id = 0;
    std::string name;
    std::size_t dim = 0;
    ResidualKernel kernel;
    ConstraintSet constraint = ConstraintSet::nonneg_orthant();

    /// A fresh evaluation-counting map; give each solver run its own.
    [[nodiscard]] ResidualMap residual() const { return ResidualMap(dim, kernel); }
    /// The origin solves all five systems.
    [[nodiscard]] Vector known_solution() const { return Vector(dim, 0.0); }
};

/// Problem 1: modified exponential, F_1 = e^{x_1} - 1,
///            F_i = e^{x_i} - x_{i-1} - 1.
/// Problem 2: modified logarithmic, F_i = ln(|x_i| + 1) - x_i / n.
/// Problem 3: nonsmooth, F_i = 2 x_i - sin|x_i|.
/// Problem 4: F_i = min(min(|x_i|, x_i^2), max(|x_i|, x_i^3)).
/// Problem 5: strictly convex, F_i = e^{x_i} - 1.
/// Throws std::invalid_argument for an id outside 1..5 or n < 2.
[[nodiscard]] ProblemInstance make_problem(int id, std::size_t n);

enum class InitialPoint { x1 = 1, x2, x3, x4, x5, x6, x7, x8 };

inline constexpr std::array<InitialPoint, 8> all_initial_points{
    InitialPoint::x1, InitialPoint::x2, InitialPoint::x3, InitialPoint::x4,
    InitialPoint::x5, InitialPoint::x6, InitialPoint::x7, InitialPoint::x8};

[[nodiscard]] std::string to_string(InitialPoint point);
/// Accepts "x1".."x8"; throws std::invalid_argument otherwise.
[[nodiscard]] InitialPoint parse_initial_point(std::string_view text);

/// Component i (1-based) of each point:
///   x1: 1          x2: 0.1          x3: 2^-i         x4: i (n-1) / n
///   x5: (i-1) / n  x6: 1 / i        x7: (n-i) / n    x8: i / n
[[nodiscard]] Vector make_initial_point(InitialPoint point, std::size_t n);

struct GridCell {
    int problem = 1;
    std::size_t dim = 0;
    InitialPoint init = InitialPoint::x1;

    friend bool operator==(const GridCell&, const GridCell&) = default;
};

inline constexpr std::array<std::size_t, 5> benchmark_dims{1000, 5000, 10000, 50000, 100000};

/// Cross product problems x dims x initial points, problem-major.
[[nodiscard]] std::vector<GridCell> make_grid(const std::vector<int>& problems,
                                              const std::vector<std::size_t>& dims,
                                              const std::vector<InitialPoint>& inits);

/// The full 5 x 5 x 8 = 200-cell experiment.
[[nodiscard]] std::vector<GridCell> benchmark_grid();

} // namespace monoeq
