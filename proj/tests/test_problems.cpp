#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "monoeq/problems.hpp"

using namespace monoeq;

TEST(Problems, ZeroIsASolution) {
    for (int id = 1; id <= 5; ++id) {
        for (std::size_t n : {2u, 17u, 1000u}) {
            const auto p = make_problem(id, n);
            auto f = p.residual();
            EXPECT_EQ(f.evaluate(p.known_solution()), Vector(n, 0.0)) << "problem " << id;
            EXPECT_EQ(p.constraint.kind(), ConstraintKind::nonneg_orthant);
        }
    }
}

TEST(Problems, HandValues) {
    auto f3 = make_problem(3, 2).residual();
    const Vector v3 = f3.evaluate({std::numbers::pi / 2, 0});
    EXPECT_DOUBLE_EQ(v3[0], std::numbers::pi - 1);
    EXPECT_EQ(v3[1], 0.0);

    auto f1 = make_problem(1, 2).residual();
    const Vector v1 = f1.evaluate({0, 1});
    EXPECT_EQ(v1[0], 0.0);
    EXPECT_DOUBLE_EQ(v1[1], std::numbers::e - 0.0 - 1.0); // e^{x_2} - x_1 - 1

    // log(2) - 1/n in every component, including the first
    auto f2 = make_problem(2, 4).residual();
    for (double v : f2.evaluate(Vector(4, 1.0))) EXPECT_DOUBLE_EQ(v, std::log(2.0) - 0.25);

    auto f4 = make_problem(4, 3).residual();
    EXPECT_EQ(f4.evaluate({0.5, 2, -3}), (Vector{0.25, 2, 3}));

    auto f5 = make_problem(5, 2).residual();
    EXPECT_DOUBLE_EQ(f5.evaluate({1, 0})[0], std::numbers::e - 1);
}

TEST(Problems, BadArguments) {
    EXPECT_THROW((void)make_problem(0, 10), std::invalid_argument);
    EXPECT_THROW((void)make_problem(6, 10), std::invalid_argument);
    EXPECT_THROW((void)make_problem(1, 1), std::invalid_argument);
    EXPECT_THROW((void)parse_initial_point("x9"), std::invalid_argument);
}

TEST(Problems, Problem3Bounds) {
    auto f = make_problem(3, 64).residual();
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 20.0);
    for (int rep = 0; rep < 50; ++rep) {
        Vector x(64);
        for (auto& v : x) v = u(rng);
        const Vector fx = f.evaluate(x);
        for (std::size_t i = 0; i < 64; ++i) {
            EXPECT_LE(std::abs(fx[i]), 3 * std::abs(x[i]));
            EXPECT_GE(fx[i] * x[i], x[i] * x[i]);
        }
    }
}

TEST(Problems, MonotoneOnOrthant) {
    for (int id = 1; id <= 5; ++id) {
        const auto p = make_problem(id, 50);
        auto f = p.residual();
        EXPECT_TRUE(check_monotone(f, p.constraint, 1000, 2024 + id)) << "problem " << id;
    }
}

TEST(InitialPoints, TableValues) {
    EXPECT_EQ(make_initial_point(InitialPoint::x4, 4), (Vector{0.75, 1.5, 2.25, 3}));
    EXPECT_EQ(make_initial_point(InitialPoint::x5, 2), (Vector{0, 0.5}));
    EXPECT_EQ(make_initial_point(InitialPoint::x3, 3), (Vector{0.5, 0.25, 0.125}));
    EXPECT_EQ(make_initial_point(InitialPoint::x1, 3), (Vector{1, 1, 1}));
    EXPECT_EQ(make_initial_point(InitialPoint::x2, 2), (Vector{0.1, 0.1}));
    EXPECT_EQ(make_initial_point(InitialPoint::x6, 4), (Vector{1, 0.5, 1.0 / 3, 0.25}));
    EXPECT_EQ(make_initial_point(InitialPoint::x7, 4), (Vector{0.75, 0.5, 0.25, 0}));
    EXPECT_EQ(make_initial_point(InitialPoint::x8, 4), (Vector{0.25, 0.5, 0.75, 1}));
}

TEST(InitialPoints, AllNonnegativeWithRequestedDim) {
    for (auto id : all_initial_points) {
        for (std::size_t n : {1u, 9u, 5000u}) {
            const Vector x = make_initial_point(id, n);
            ASSERT_EQ(x.dim(), n);
            for (double v : x) ASSERT_GE(v, 0.0) << to_string(id);
        }
        EXPECT_EQ(parse_initial_point(to_string(id)), id);
    }
}

TEST(InitialPoints, GeometricTailUnderflows) {
    const Vector x = make_initial_point(InitialPoint::x3, 2000);
    EXPECT_GT(x[1073], 0.0); // 2^-1074, the smallest subnormal
    EXPECT_EQ(x[1074], 0.0);
    EXPECT_EQ(x[1999], 0.0);
}

TEST(Grid, Shape) {
    const auto grid = benchmark_grid();
    ASSERT_EQ(grid.size(), 200u);
    EXPECT_EQ(grid.front(), (GridCell{1, 1000, InitialPoint::x1}));
    EXPECT_EQ(grid.back(), (GridCell{5, 100000, InitialPoint::x8}));
    EXPECT_EQ(grid[1], (GridCell{1, 1000, InitialPoint::x2}));
    EXPECT_EQ(grid[8], (GridCell{1, 5000, InitialPoint::x1}));
    int p4 = 0;
    for (const auto& c : grid) p4 += c.problem == 4 ? 1 : 0;
    EXPECT_EQ(p4, 40);
}
