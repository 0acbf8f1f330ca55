#include <gtest/gtest.h>

#include "monoeq/baselines.hpp"
#include "monoeq/problems.hpp"

using namespace monoeq;

TEST(ClassicDelta, Examples) {
    EXPECT_EQ(classic_delta({1, 1}, {2, 4}), 3.0);
    EXPECT_EQ(classic_delta({0.5, -2, 7}, {0.5, -2, 7}), 1.0);
    EXPECT_EQ(classic_delta({1, -1}, {1, 1}), 0.0);
    EXPECT_EQ(classic_delta({0, 0}, {1, 1}), 1.0);
}

TEST(ClassicDelta, ScalingSubstitutesAndClips) {
    SolverConfig cfg;
    // delta = (2 - 1) / 2 = 0.5 replaces the negative ratio of the second entry.
    const auto a = classic_delta_scaling({1, 1}, {2, -1}, cfg);
    EXPECT_EQ(a.lambda[0], 2.0);
    EXPECT_EQ(a.lambda[1], 0.5);
    // delta = 0 lands on ell
    const auto b = classic_delta_scaling({1, -1}, {1, 1}, cfg);
    EXPECT_EQ(b.lambda[1], cfg.ell);
    const auto c = classic_delta_scaling({0, 1}, {3, 1e20}, cfg);
    EXPECT_EQ(c.lambda[0], 1.0);
    EXPECT_EQ(c.lambda[1], cfg.u);
}

TEST(Variants, NamesResolve) {
    ASSERT_EQ(known_variants().size(), 4u);
    for (const auto& v : known_variants()) EXPECT_EQ(variant_by_name(v.name).name, v.name);
    EXPECT_THROW((void)variant_by_name("mdyp"), std::invalid_argument);
}

TEST(Variants, DppmSpecMatchesSolveBitExactly) {
    const auto p = make_problem(3, 100);
    const Vector x0 = make_initial_point(InitialPoint::x2, 100);
    auto f1 = p.residual();
    auto f2 = p.residual();
    const auto direct = solve(f1, p.constraint, x0);
    const auto variant = make_variant(variant_by_name("dppm"), {})(f2, p.constraint, x0);
    EXPECT_EQ(variant.solution, direct.solution);
    EXPECT_EQ(variant.iters, direct.iters);
    EXPECT_EQ(variant.fevals, direct.fevals);
    EXPECT_EQ(variant.final_norm, direct.final_norm);
}

TEST(Variants, BetaZeroOnIdentityMap) {
    ResidualMap f(10, [](std::span<const double> x, std::span<double> out) {
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
    });
    SolverConfig cfg;
    const auto r = make_variant(variant_by_name("dppm-beta0"), cfg)(
        f, ConstraintSet::nonneg_orthant(), Vector(10, 1.0));
    EXPECT_EQ(r.status, SolverStatus::converged);
    for (const auto& rec : r.trace) {
        EXPECT_EQ(rec.beta, 0.0);
        EXPECT_LE(rec.descent_value, -(1.0 / cfg.u) * rec.residual_norm * rec.residual_norm);
    }
}

TEST(Variants, ClassicDeltaOnNonsmoothProblem) {
    const auto p = make_problem(3, 1000);
    auto f = p.residual();
    const auto r = make_variant(variant_by_name("dppm-classic-delta"), {})(
        f, p.constraint, make_initial_point(InitialPoint::x1, 1000));
    EXPECT_EQ(r.status, SolverStatus::converged);
    EXPECT_LE(r.iters, 1000);
}

TEST(Variants, AllPreserveInvariants) {
    const std::size_t n = 300;
    SolverConfig cfg;
    for (const auto& spec : known_variants()) {
        for (int id : {2, 3, 4}) {
            const auto p = make_problem(id, n);
            auto f = p.residual();
            DppmSolver solver(f, p.constraint, make_initial_point(InitialPoint::x6, n), cfg,
                              make_rules(spec));
            while (solver.step()) {
                const auto& st = solver.state();
                ASSERT_TRUE(p.constraint.contains(st.x)) << spec.name;
                ASSERT_GE(st.beta, 0.0);
                for (double l : st.scaling.lambda) {
                    ASSERT_GE(l, cfg.ell);
                    ASSERT_LE(l, cfg.u);
                }
                const auto& rec = st.trace.back();
                if (rec.outcome == StepOutcome::projected) {
                    ASSERT_LE(rec.next_iterate_norm, rec.iterate_norm * (1 + 1e-12))
                        << spec.name << " problem " << id << " k " << rec.k;
                }
            }
        }
    }
}
