#include <gtest/gtest.h>

#include <random>

#include "obm/error.hpp"
#include "obm/lp.hpp"

namespace obm {
namespace {

LpOptions with_backend(LpBackend b) {
  LpOptions o;
  o.backend = b;
  return o;
}

std::vector<LpBackend> backends() {
  std::vector<LpBackend> out{LpBackend::kDenseSimplex};
  if (highs_available()) out.push_back(LpBackend::kHighs);
  return out;
}

TEST(Lp, SingleBoundDualIsPositive) {
  for (LpBackend b : backends()) {
    LpModel m(1);
    m.set_objective(0, 1.0);
    m.add_row({{0, 1.0}}, 1.0);
    const LpSolution s = solve(m, with_backend(b));
    ASSERT_EQ(s.status, LpStatus::kOptimal);
    EXPECT_NEAR(s.objective_value, 1.0, 1e-9);
    ASSERT_EQ(s.duals.size(), 1u);
    EXPECT_NEAR(s.duals[0], 1.0, 1e-9);
  }
}

TEST(Lp, ScaledRowDual) {
  // max 3x + 2y, 2x + y <= 4, x + 3y <= 6 -> x = 1.2, y = 1.6, duals 1.4, 0.2
  for (LpBackend b : backends()) {
    LpModel m(2);
    m.set_objective({3.0, 2.0});
    m.add_row({{0, 2.0}, {1, 1.0}}, 4.0);
    m.add_row({{0, 1.0}, {1, 3.0}}, 6.0);
    const LpSolution s = solve(m, with_backend(b));
    ASSERT_EQ(s.status, LpStatus::kOptimal);
    EXPECT_NEAR(s.objective_value, 6.8, 1e-9);
    EXPECT_NEAR(s.duals[0], 1.4, 1e-9);
    EXPECT_NEAR(s.duals[1], 0.2, 1e-9);
  }
}

TEST(Lp, NegativeRhsNeedsPhaseOne) {
  // x + y >= 1 written as -x - y <= -1; max -x - 2y -> x = 1
  for (LpBackend b : backends()) {
    LpModel m(2);
    m.set_objective({-1.0, -2.0});
    m.add_row({{0, -1.0}, {1, -1.0}}, -1.0);
    m.add_row({{0, 1.0}}, 5.0);
    const LpSolution s = solve(m, with_backend(b));
    ASSERT_EQ(s.status, LpStatus::kOptimal);
    EXPECT_NEAR(s.objective_value, -1.0, 1e-9);
    EXPECT_NEAR(s.duals[0], 1.0, 1e-9);
  }
}

TEST(Lp, DetectsInfeasibleAndUnbounded) {
  for (LpBackend b : backends()) {
    LpModel inf(1);
    inf.add_row({{0, 1.0}}, -1.0);
    EXPECT_EQ(solve(inf, with_backend(b)).status, LpStatus::kInfeasible);
    LpModel unb(2);
    unb.set_objective({1.0, 0.0});
    unb.add_row({{1, 1.0}}, 1.0);
    EXPECT_EQ(solve(unb, with_backend(b)).status, LpStatus::kUnbounded);
  }
}

TEST(Lp, RejectsBadRows) {
  LpModel m(2);
  EXPECT_THROW(m.add_row({{2, 1.0}}, 1.0), std::invalid_argument);
  EXPECT_THROW(m.add_row({{0, std::nan("")}}, 1.0), std::invalid_argument);
  EXPECT_THROW(m.add_row({{0, 1.0}}, INFINITY), std::invalid_argument);
}

LpModel random_model(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nv(2, 25), nr(1, 30);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int n = nv(rng), r = nr(rng);
  LpModel m(n);
  std::vector<double> c(n);
  for (double& v : c) v = u(rng) * 4 - 1;
  m.set_objective(c);
  // A box keeps it bounded; the interior point 0.1 keeps it feasible.
  for (int j = 0; j < n; ++j) m.add_row({{j, 1.0}}, 1.0 + 3 * u(rng));
  for (int k = 0; k < r; ++k) {
    std::vector<SparseEntry> row;
    double at_point = 0.0;
    for (int j = 0; j < n; ++j) {
      if (u(rng) < 0.4) {
        const double a = u(rng) * 6 - 3;
        row.push_back({j, a});
        at_point += 0.1 * a;
      }
    }
    m.add_row(std::move(row), at_point + u(rng) * 2);
  }
  return m;
}

TEST(Lp, BackendsAgreeOnRandomModels) {
  if (!highs_available()) GTEST_SKIP();
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 40; ++rep) {
    const LpModel m = random_model(rng);
    const LpSolution a = solve(m, with_backend(LpBackend::kDenseSimplex));
    const LpSolution b = solve(m, with_backend(LpBackend::kHighs));
    ASSERT_EQ(a.status, LpStatus::kOptimal);
    ASSERT_EQ(b.status, LpStatus::kOptimal);
    EXPECT_NEAR(a.objective_value, b.objective_value, 1e-7);
    for (const LpSolution* s : {&a, &b}) {
      const LpResiduals res = check_solution(m, *s);
      EXPECT_LT(res.primal_violation, 1e-7);
      EXPECT_LT(res.dual_violation, 1e-7);
      EXPECT_LT(res.duality_gap, 1e-6);
      EXPECT_LT(res.complementarity, 1e-6);
    }
  }
}

TEST(Lp, IncrementalRowsMatchColdSolve) {
  std::mt19937_64 rng(11);
  for (LpBackend b : backends()) {
    for (int rep = 0; rep < 10; ++rep) {
      LpModel m = random_model(rng);
      LpSolver solver(m, with_backend(b));
      solver.solve();
      std::vector<LpRow> rows;
      for (const LpRow& row : m.rows()) {
        LpRow copy = row;
        copy.rhs *= 0.7;
        rows.push_back(copy);
        if (rows.size() == 3) break;
      }
      solver.add_rows(rows);
      const LpSolution& warm = solver.solve();
      const LpSolution cold = solve(add_rows(m, rows), with_backend(b));
      ASSERT_EQ(warm.status, cold.status);
      EXPECT_NEAR(warm.objective_value, cold.objective_value, 1e-7);
    }
  }
}

TEST(Lp, FormatsCplexText) {
  LpModel m(2);
  m.set_objective({1.0, -2.0});
  m.add_row({{0, 1.0}, {1, 1.0}}, 3.0, "cap");
  const std::string text = format_lp(m);
  EXPECT_NE(text.find("Maximize"), std::string::npos);
  EXPECT_NE(text.find("cap_0: 1 x0 + 1 x1 <= 3"), std::string::npos) << text;
}

}  // namespace
}  // namespace obm
