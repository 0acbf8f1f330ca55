#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>

#include "monoeq/bench.hpp"

using namespace monoeq;

namespace {

RunResult make_result(std::string solver, int problem, InitialPoint init, SolverStatus status,
                      int iters, std::int64_t fevals, double time_ms = 1.0) {
    RunResult r;
    r.solver_name = std::move(solver);
    r.problem_id = problem;
    r.dim = 1000;
    r.init = init;
    r.status = status;
    r.iters = iters;
    r.fevals = fevals;
    r.time_ms = time_ms;
    r.final_norm = status == SolverStatus::converged ? 3.14159265e-6 : 1.0;
    return r;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("monoeq_test_" + name);
}

int count_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) ++n;
    return n;
}

constexpr auto ok = SolverStatus::converged;
constexpr auto bad = SolverStatus::max_iter;

} // namespace

TEST(Profile, StrictWinnerAndTotalFailure) {
    const std::vector<RunResult> rs{
        make_result("a", 1, InitialPoint::x1, ok, 3, 10), make_result("b", 1, InitialPoint::x1, bad, 1000, 3001),
        make_result("a", 2, InitialPoint::x1, ok, 5, 12), make_result("b", 2, InitialPoint::x1, bad, 1000, 3001)};
    const auto curves = performance_profile(rs, Metric::iters, log_spaced_taus());
    ASSERT_EQ(curves.size(), 2u);
    for (const auto& p : curves[0].points) EXPECT_EQ(p.fraction, 1.0);
    for (const auto& p : curves[1].points) EXPECT_EQ(p.fraction, 0.0);
}

TEST(Profile, TiesCountForEveryone) {
    const std::vector<RunResult> rs{make_result("a", 1, InitialPoint::x1, ok, 4, 9),
                                    make_result("b", 1, InitialPoint::x1, ok, 4, 9),
                                    make_result("a", 1, InitialPoint::x2, ok, 7, 20),
                                    make_result("b", 1, InitialPoint::x2, ok, 7, 20)};
    for (const auto& c : performance_profile(rs, Metric::fevals, {1.0, 2.0})) {
        EXPECT_EQ(c.points[0].fraction, 1.0);
    }
}

TEST(Profile, RatiosAndZeroMetric) {
    // cell 1: a = 2, b = 6 (ratio 3); cell 2: a = 0, b = 5 (min 0 treated as 1)
    const std::vector<RunResult> rs{make_result("a", 1, InitialPoint::x1, ok, 2, 5),
                                    make_result("b", 1, InitialPoint::x1, ok, 6, 19),
                                    make_result("a", 1, InitialPoint::x2, ok, 0, 1),
                                    make_result("b", 1, InitialPoint::x2, ok, 5, 16)};
    const auto curves = performance_profile(rs, Metric::iters, {1.0, 2.9, 3.0, 4.9, 5.0});
    const auto& b = curves[1].points;
    EXPECT_EQ(b[0].fraction, 0.0);
    EXPECT_EQ(b[1].fraction, 0.0);
    EXPECT_EQ(b[2].fraction, 0.5);
    EXPECT_EQ(b[3].fraction, 0.5);
    EXPECT_EQ(b[4].fraction, 1.0);
}

TEST(Profile, Preconditions) {
    const auto one = make_result("a", 1, InitialPoint::x1, ok, 2, 5);
    EXPECT_THROW((void)performance_profile({one}, Metric::iters, {1.0}), std::invalid_argument);
    const auto other = make_result("b", 2, InitialPoint::x1, ok, 2, 5);
    EXPECT_THROW((void)performance_profile({one, other}, Metric::iters, {1.0}),
                 std::invalid_argument);
    const auto same_cell = make_result("b", 1, InitialPoint::x1, ok, 2, 5);
    EXPECT_THROW((void)performance_profile({one, same_cell}, Metric::iters, {0.5}),
                 std::invalid_argument);
    EXPECT_THROW((void)performance_profile({one, same_cell, one}, Metric::iters, {1.0}),
                 std::invalid_argument);
    EXPECT_THROW((void)parse_metric("cpu"), std::invalid_argument);
}

TEST(Profile, TauGrid) {
    const auto taus = log_spaced_taus();
    ASSERT_EQ(taus.size(), 200u);
    EXPECT_EQ(taus.front(), 1.0);
    EXPECT_EQ(taus.back(), 100.0);
    for (std::size_t i = 1; i < taus.size(); ++i) EXPECT_GT(taus[i], taus[i - 1]);
}

TEST(Csv, EmptyIsHeaderOnly) {
    const auto path = temp_file("empty.csv");
    write_csv({}, path);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "solver,problem,dim,init,status,iter,fval,time_ms,norm");
    EXPECT_EQ(count_lines(path), 1);
    EXPECT_TRUE(read_csv(path).empty());
}

TEST(Csv, RoundTrip) {
    std::vector<RunResult> rs;
    const SolverStatus statuses[] = {SolverStatus::converged, SolverStatus::max_iter,
                                     SolverStatus::line_search_failure,
                                     SolverStatus::nonfinite_residual};
    for (int i = 0; i < 200; ++i) {
        auto r = make_result(i % 2 ? "dppm" : "dppm-beta0", 1 + i % 5, all_initial_points[i % 8],
                             statuses[i % 4], i, 3 * i + 1, 0.5 * i);
        r.final_norm = i % 4 == 3 ? std::numeric_limits<double>::infinity() : 1.234567891e-7 * i;
        rs.push_back(r);
    }
    const auto path = temp_file("round.csv");
    write_csv(rs, path);
    EXPECT_EQ(count_lines(path), 201);
    const auto back = read_csv(path);
    ASSERT_EQ(back.size(), rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        EXPECT_EQ(back[i].solver_name, rs[i].solver_name);
        EXPECT_EQ(back[i].problem_id, rs[i].problem_id);
        EXPECT_EQ(back[i].dim, rs[i].dim);
        EXPECT_EQ(back[i].init, rs[i].init);
        EXPECT_EQ(back[i].status, rs[i].status);
        EXPECT_EQ(back[i].iters, rs[i].iters);
        EXPECT_EQ(back[i].fevals, rs[i].fevals);
        if (std::isinf(rs[i].final_norm)) {
            EXPECT_TRUE(std::isinf(back[i].final_norm));
        } else {
            EXPECT_NEAR(back[i].final_norm, rs[i].final_norm, 5e-6 * rs[i].final_norm);
        }
    }
}

TEST(Csv, BadInputCarriesLocation) {
    const auto path = temp_file("bad.csv");
    {
        std::ofstream out(path);
        out << "solver,problem,dim,init,status,iter,fval,time_ms,norm\n";
        out << "dppm,1,1000,x1,converged,4,13,0.1,1e-6\n";
        out << "dppm,1,1000,x9,converged,4,13,0.1,1e-6\n";
    }
    try {
        (void)read_csv(path);
        FAIL() << "expected an error";
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find(":3"), std::string::npos) << e.what();
    }
    EXPECT_THROW((void)read_csv(temp_file("does_not_exist.csv")), std::runtime_error);
}

TEST(Grid, OrderIndependentOfWorkers) {
    const auto grid = make_grid({2, 3}, {200, 400}, {InitialPoint::x1, InitialPoint::x6});
    const std::vector<VariantSpec> solvers{variant_by_name("dppm"), variant_by_name("dppm-beta0")};
    const auto serial = run_grid(solvers, grid, {}, 1);
    const auto parallel = run_grid(solvers, grid, {}, 3);
    ASSERT_EQ(serial.size(), 16u);
    ASSERT_EQ(parallel.size(), serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].solver_name, solvers[i % 2].name);
        EXPECT_EQ(serial[i].problem_id, grid[i / 2].problem);
        EXPECT_EQ(serial[i].init, grid[i / 2].init);
        EXPECT_EQ(parallel[i].solver_name, serial[i].solver_name);
        EXPECT_EQ(parallel[i].problem_id, serial[i].problem_id);
        EXPECT_EQ(parallel[i].dim, serial[i].dim);
        EXPECT_EQ(parallel[i].init, serial[i].init);
        EXPECT_EQ(parallel[i].iters, serial[i].iters);
        EXPECT_EQ(parallel[i].fevals, serial[i].fevals);
        EXPECT_EQ(parallel[i].final_norm, serial[i].final_norm);
    }
}

TEST(Grid, FailuresAreData) {
    const auto results =
        run_grid({variant_by_name("dppm")}, make_grid({5}, {1000}, {InitialPoint::x4}), {}, 1);
    ASSERT_EQ(results.size(), 1u);
    EXPECT_EQ(results[0].status, SolverStatus::nonfinite_residual);
    EXPECT_GE(results[0].fevals, results[0].iters + 1);
}

TEST(Svg, WritesCurves) {
    const std::vector<RunResult> rs{make_result("a", 1, InitialPoint::x1, ok, 2, 5),
                                    make_result("b", 1, InitialPoint::x1, ok, 6, 19)};
    const auto path = temp_file("profile.svg");
    write_profile_svg(performance_profile(rs, Metric::iters, log_spaced_taus()), path);
    std::ifstream in(path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_NE(text.find("<svg"), std::string::npos);
    EXPECT_NE(text.find("<path"), std::string::npos);
    EXPECT_NE(text.find("</svg>"), std::string::npos);
}
