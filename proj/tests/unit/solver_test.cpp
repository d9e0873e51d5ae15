#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <limits>

#include "acgd/solver.hpp"
#include "oracles.hpp"

using namespace acgd;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

SolverConfig config(Mode mode, Region region, StepRule rule) {
  SolverConfig c;
  c.mode = mode;
  c.region = std::move(region);
  c.strategy.rule = rule;
  c.seed = 7;
  return c;
}

std::vector<double> objectives(const SolverResult& r) {
  std::vector<double> out;
  for (const TraceRow& row : r.trace) out.push_back(row.objective);
  return out;
}

constexpr StepRule kAdaptive[] = {StepRule::AdaptiveConstant, StepRule::AdaptiveAdjustable,
                                  StepRule::PureBacktracking};

}  // namespace

TEST(Direction, Examples) {
  EXPECT_EQ(direction(Mode::Unconstrained, vec({1, 0}), vec({5, 5})), vec({1, 0}));
  EXPECT_EQ(direction(Mode::Constrained, vec({1, 0}), vec({0, 0})), vec({1, 0}));
  EXPECT_EQ(direction(Mode::Constrained, vec({2, 3}), vec({2, 3})), vec({0, 0}));
  EXPECT_THROW(direction(Mode::Constrained, vec({1}), vec({1, 2})), DimensionError);
}

TEST(Gap, Examples) {
  EXPECT_EQ(gap(Mode::Constrained, vec({0, 0}), vec({1, 2})), 0.0);
  const Vector g = vec({3, 4});
  EXPECT_DOUBLE_EQ(gap(Mode::Unconstrained, g, lmo(Region::l2_ball(2, 1.0), g)), 5.0);
  const Vector x = vec({1, 0});
  const Vector v = lmo(Region::l1_ball(2, 1.0), vec({1, 0}));
  EXPECT_EQ(v, vec({-1, 0}));
  EXPECT_DOUBLE_EQ(gap(Mode::Constrained, vec({1, 0}), direction(Mode::Constrained, v, x)), 2.0);
}

TEST(Gap, UnconstrainedEqualsDualNorm) {
  for (NormId p : {NormId::L1, NormId::L2, NormId::LInf}) {
    const Vector g = oracle::gaussian(5, 3);
    const Vector d = lmo(Region::norm_ball(p, 5, 1.0), g);
    EXPECT_NEAR(gap(Mode::Unconstrained, g, d), dual_norm(p, g), 1e-12);
  }
}

TEST(Solve, UnconstrainedShiftedQuadratic) {
  const Objective f = oracle::quadratic(Matrix::Identity(2, 2), vec({1, 0}));
  const SolverResult r = solve(
      f, config(Mode::Unconstrained, Region::l2_ball(2, 1.0), StepRule::AdaptiveConstant),
      Vector::Zero(2));
  ASSERT_EQ(r.status, Status::Converged) << r.error;
  EXPECT_LE((r.final_x - vec({1, 0})).norm(), 1e-4);
  EXPECT_LE(r.trace.back().gap, 1e-5);
}

TEST(Solve, LinearObjectiveOnSimplex) {
  const Vector c = vec({1, 2, 3});
  Objective f("linear", 3, [c](const Vector& x) { return -c.dot(x); },
              [c](const Vector&) -> Vector { return -c; });
  const SolverResult r =
      solve(f, config(Mode::Constrained, Region::simplex(3, 1.0), StepRule::AdaptiveConstant),
            Vector::Constant(3, 1.0 / 3.0));
  ASSERT_EQ(r.status, Status::Converged) << r.error;
  EXPECT_NEAR((r.final_x - vec({0, 0, 1})).norm(), 0.0, 1e-9);
  EXPECT_LE(r.final_gap, 1e-5);
}

TEST(Solve, HalfSquaredNormOnL1Ball) {
  for (StepRule rule : kAdaptive) {
    const SolverResult r = solve(oracle::half_sq_norm(2),
                                 config(Mode::Constrained, Region::l1_ball(2, 1.0), rule),
                                 vec({1, 0}));
    ASSERT_EQ(r.status, Status::Converged) << to_string(rule) << r.error;
    EXPECT_LE(r.final_objective, 1e-5);
    EXPECT_LE(r.final_gap, 1e-5);
  }
}

TEST(Solve, RejectsInfeasibleStartAndBadConfig) {
  const Objective f = oracle::half_sq_norm(2);
  EXPECT_THROW(solve(f, config(Mode::Constrained, Region::simplex(2, 1.0),
                               StepRule::AdaptiveConstant),
                     vec({1, 1})),
               InfeasibleStartError);
  EXPECT_THROW(
      solve(f, config(Mode::Constrained, Region::simplex(2, 1.0), StepRule::ShortStep),
            vec({1, 0})),
      ConfigError);
  EXPECT_THROW(solve(f, config(Mode::Constrained, Region::simplex(3, 1.0),
                               StepRule::AdaptiveConstant),
                     vec({1, 0})),
               DimensionError);
  SolverConfig fg = config(Mode::Constrained, Region::simplex(2, 1.0), StepRule::OpenLoop);
  fg.use_functional_gap = true;
  EXPECT_THROW(solve(f, fg, vec({1, 0})), ConfigError);
}

TEST(Solve, FeasibleMonotoneAndDescentAmount) {
  const Matrix B = oracle::gaussian(8, 8, 21);
  const Matrix H = B.transpose() * B;
  const Objective f = oracle::quadratic(H, oracle::gaussian(8, 22));
  const Region region = Region::l1_ball(8, 1.0);
  for (StepRule rule : kAdaptive) {
    SolverConfig c = config(Mode::Constrained, region, rule);
    c.max_iter = 300;
    const SolverResult r = solve(f, c, Vector::Unit(8, 2));
    ASSERT_NE(r.status, Status::Error) << r.error;
    EXPECT_TRUE(oracle::nonincreasing(objectives(r), 1e-12));
    for (const TraceRow& row : r.trace) {
      EXPECT_GE(row.t, 0.0);
      EXPECT_LE(row.t, 1.0);
      EXPECT_GE(row.gap, -1e-12);
    }
    EXPECT_LE(feasibility_violation(region, r.final_x), 1e-9);
  }
}

TEST(Solve, IteratesStayFeasibleStepByStep) {
  const Objective f = oracle::quadratic(Matrix::Identity(4, 4), vec({3, -2, 0.5, 1}));
  const Region region = Region::simplex(4, 1.0);
  for (long n = 1; n < 40; n += 3) {
    SolverConfig c = config(Mode::Constrained, region, StepRule::AdaptiveAdjustable);
    c.max_iter = n;
    const SolverResult r = solve(f, c, Vector::Unit(4, 1));
    EXPECT_LE(feasibility_violation(region, r.final_x), 1e-9);
  }
}

TEST(Solve, MaxIterTraceShape) {
  const Objective f = oracle::quadratic(Matrix::Identity(3, 3), vec({0.2, 0.3, 0.1}));
  SolverConfig c = config(Mode::Constrained, Region::simplex(3, 1.0), StepRule::OpenLoop);
  c.max_iter = 25;
  const SolverResult r = solve(f, c, Vector::Unit(3, 0));
  ASSERT_EQ(r.status, Status::MaxIterReached);
  ASSERT_EQ(r.trace.size(), 25u);
  EXPECT_EQ(r.iterations, 25);
  for (std::size_t k = 0; k < r.trace.size(); ++k) {
    EXPECT_EQ(r.trace[k].k, static_cast<long>(k));
    EXPECT_EQ(r.trace[k].t, 2.0 / (static_cast<double>(k) + 2.0));
    EXPECT_EQ(r.trace[k].L_accepted, 0.0);
  }
  EXPECT_EQ(r.final_objective, f.value(r.final_x));
}

TEST(Solve, ShortStepMatchesGradientStep) {
  const Matrix B = oracle::gaussian(5, 5, 3);
  const Matrix H = B.transpose() * B + Matrix::Identity(5, 5);
  Objective f = oracle::quadratic(H, oracle::gaussian(5, 4));
  const double L = oracle::lambda_max(H);
  f.known_lipschitz = L;
  const Vector x0 = oracle::gaussian(5, 5);
  SolverConfig c = config(Mode::Unconstrained, Region::l2_ball(5, 1.0), StepRule::ShortStep);
  c.max_iter = 1;
  const SolverResult r = solve(f, c, x0);
  const Vector expected = x0 - f.gradient(x0) / L;
  EXPECT_LE((r.final_x - expected).lpNorm<Eigen::Infinity>(), 1e-12);
}

TEST(Solve, FunctionalGapTermination) {
  Objective f = oracle::quadratic(Matrix::Identity(2, 2), vec({0.2, 0.1}), 3.0);
  f.known_optimum = 3.0;
  SolverConfig c = config(Mode::Constrained, Region::l1_ball(2, 1.0), StepRule::AdaptiveAdjustable);
  c.use_functional_gap = true;
  const SolverResult r = solve(f, c, vec({1, 0}));
  ASSERT_EQ(r.status, Status::Converged);
  EXPECT_LE(r.final_objective - 3.0, 1e-5);
  EXPECT_EQ(r.trace.back().t, 0.0);
  EXPECT_EQ(r.trace.back().objective, r.final_objective);
}

TEST(Solve, EvaluationCountersAreCumulative) {
  const Objective f = oracle::quadratic(Matrix::Identity(3, 3), vec({0.2, 0.3, 0.1}));
  SolverConfig c = config(Mode::Constrained, Region::l1_ball(3, 1.0), StepRule::PureBacktracking);
  const SolverResult r = solve(f, c, Vector::Unit(3, 0));
  long prev_g = 0, prev_f = 0;
  for (const TraceRow& row : r.trace) {
    EXPECT_GE(row.grad_evals, prev_g);
    EXPECT_GT(row.fn_evals, prev_f - 1);
    prev_g = row.grad_evals;
    prev_f = row.fn_evals;
  }
  // Initial gradient plus the probe.
  EXPECT_EQ(r.trace.front().grad_evals, 2);
  EXPECT_EQ(r.grad_evals, 2 + r.iterations);
}

TEST(Solve, NumericFailureBecomesErrorStatus) {
  // Minimizer at 2, but f is undefined past 1.5; the open-loop schedule steps there.
  Objective f("blowup", 1,
              [](const Vector& x) { return x[0] > 1.5 ? NAN : 0.5 * (x[0] - 2) * (x[0] - 2); },
              [](const Vector& x) -> Vector { return x.array() - 2.0; });
  SolverConfig c = config(Mode::Unconstrained, Region::l2_ball(1, 1.0), StepRule::OpenLoop);
  const SolverResult r = solve(f, c, vec({0}));
  EXPECT_EQ(r.status, Status::Error);
  EXPECT_FALSE(r.error.empty());
  EXPECT_FALSE(r.trace.empty());
}

TEST(Solve, DeterministicTraces) {
  const Matrix B = oracle::gaussian(6, 6, 8);
  const Objective f = oracle::quadratic(B.transpose() * B, oracle::gaussian(6, 9));
  for (StepRule rule : kAdaptive) {
    SolverConfig c = config(Mode::Constrained, Region::l2_ball(6, 1.0), rule);
    const SolverResult a = solve(f, c, Vector::Zero(6));
    const SolverResult b = solve(f, c, Vector::Zero(6));
    ASSERT_EQ(a.trace.size(), b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
      EXPECT_EQ(0, std::memcmp(&a.trace[i].objective, &b.trace[i].objective, sizeof(double)));
      EXPECT_EQ(0, std::memcmp(&a.trace[i].L_accepted, &b.trace[i].L_accepted, sizeof(double)));
    }
  }
}
