#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "obm/dynamic_relax.hpp"
#include "obm/exact_dp.hpp"
#include "obm/oracle_dp.hpp"
#include "obm/parallel.hpp"
#include "obm/static_relax.hpp"

namespace obm {
namespace {

Instance single_edge(int n) {
  const StaticWeight w{0, 0, 1.0};
  return Instance::from_static(n, n, n, std::span(&w, 1));
}

Instance random_weighted(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(0.45);
  std::uniform_real_distribution<double> w(0.1, 2.0);
  std::vector<StaticWeight> ws;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (edge(rng)) ws.push_back({i, j, w(rng)});
    }
  }
  return Instance::from_static(n, n, n, ws);
}

DynamicOptions with_formulation(DynamicFormulation f) {
  DynamicOptions o;
  o.formulation = f;
  return o;
}

TEST(DynamicRelax, SingleEdgeIsArrivalProbability) {
  for (int n = 2; n <= 6; ++n) {
    const double exact = 1.0 - std::pow(1.0 - 1.0 / n, n);
    EXPECT_NEAR(solve_dynamic(single_edge(n), false).bound, exact, 1e-8) << n;
    EXPECT_NEAR(solve_dynamic(single_edge(n), true).bound, exact, 1e-8) << n;
  }
  EXPECT_NEAR(solve_dynamic(single_edge(2), false).bound, 0.75, 1e-9);
}

TEST(DynamicRelax, EmptyGraphIsZero) {
  const Instance empty = Instance::from_static(4, 4, 4, std::span<const StaticWeight>{});
  EXPECT_EQ(solve_dynamic(empty, true).bound, 0.0);
  EXPECT_EQ(solve_static_full(empty).bound, 0.0);
}

TEST(DynamicRelax, ProbJ2OnlyIsLooser) {
  EXPECT_NEAR(bound_prob_j2_only(single_edge(2)).bound, 1.0, 1e-9);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const Instance inst = gen_erdos(5, 0.5, {seed, 0});
    EXPECT_GE(bound_prob_j2_only(inst).bound, solve_dynamic(inst, true).bound - 1e-7);
  }
}

TEST(DynamicRelax, FormulationsAgree) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    const Instance inst = random_weighted(n, seed);
    for (bool j2 : {false, true}) {
      const double a = solve_dynamic(inst, j2, with_formulation(DynamicFormulation::kExplicit)).bound;
      const double b = solve_dynamic(inst, j2, with_formulation(DynamicFormulation::kAggregated)).bound;
      EXPECT_NEAR(a, b, 1e-7 * std::max(1.0, a)) << "n=" << n << " seed=" << seed << " j2=" << j2;
    }
  }
}

// The optimal policy's matching probabilities are feasible, so each bound
// sits above the DP optimum; adding the two-ad family only tightens.
TEST(DynamicRelax, SandwichesTheOptimum) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    const Instance inst = random_weighted(n, 100 + seed);
    const double opt = solve_dp(inst).optimal_value;
    const double d1 = solve_dynamic(inst, false).bound;
    const double d2 = solve_dynamic(inst, true).bound;
    EXPECT_GE(d1, opt - 1e-7);
    EXPECT_GE(d2, opt - 1e-7);
    EXPECT_LE(d2, d1 + 1e-7);
  }
}

TEST(DynamicRelax, OptimumSolvesWithoutSlackOnOneAd) {
  // One ad: the one-ad rows describe the achievable region exactly.
  for (int n = 2; n <= 6; ++n) {
    std::vector<StaticWeight> ws;
    for (int i = 0; i < n; ++i) ws.push_back({i, 0, 1.0 + i});
    const Instance inst = Instance::from_static(n, n, n, ws);
    EXPECT_NEAR(solve_dynamic(inst, false).bound, solve_dp(inst).optimal_value, 1e-7) << n;
  }
}

TEST(DynamicRelax, ReturnedPointSatisfiesEveryCut) {
  const int n = 4;
  const Instance inst = random_weighted(n, 7);
  const BoundReport r = solve_dynamic(inst, true);
  for (CutFamily f : {CutFamily::kProbBound, CutFamily::kJ1, CutFamily::kJ2}) {
    for (const Cut& c : enumerate_family(n, f)) {
      EXPECT_LE(check_validity(c, r.z).violation, 1e-6) << c.key();
    }
  }
}

TEST(DynamicRelax, DualsAreFeasibleAndPriceTheBound) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const int n = 3 + static_cast<int>(seed);
    const Instance inst = random_weighted(n, 40 + seed);
    const BoundReport r = solve_dynamic(inst, false);
    EXPECT_LE(dual_feasibility_gap(inst, r.duals), 1e-6);
    // Weak duality with rhs 1/n on impression rows and 1 on one-ad rows
    // (mu is stored multiplied by n).
    double dual_obj = 0.0;
    for (double l : r.duals.lambda) dual_obj += l / n;
    for (double m : r.duals.mu.raw()) dual_obj += m / n;
    EXPECT_NEAR(dual_obj, r.bound, 1e-6 * std::max(1.0, r.bound));
  }
}

// Brute force over the whole two-ad family: for every (stage, ad pair) the
// separator must report the largest violation.
TEST(SeparateJ2, MatchesEnumeration) {
  const int n = 5;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 0.06);
  for (int rep = 0; rep < 5; ++rep) {
    ZVector z(n);
    for (double& v : z.raw()) v = u(rng);
    std::map<std::string, double> best;
    for (const Cut& c : enumerate_family(n, CutFamily::kJ2)) {
      const double v = check_validity(c, z).violation;
      if (v <= 1e-6) continue;
      const std::string group = std::to_string(c.params[4]) + ":" + std::to_string(c.ads[0]) + ":" +
                                std::to_string(c.ads[1]);
      best[group] = std::max(best[group], v);
    }
    const std::vector<Cut> found = separate_j2(z, 1e-6, 100000);
    std::map<std::string, double> got;
    for (const Cut& c : found) {
      const std::string group = std::to_string(c.params[4]) + ":" + std::to_string(c.ads[0]) + ":" +
                                std::to_string(c.ads[1]);
      got[group] = std::max(got[group], check_validity(c, z).violation);
    }
    ASSERT_EQ(got.size(), best.size()) << rep;
    for (const auto& [g, v] : best) EXPECT_NEAR(got[g], v, 1e-12) << g;
    for (std::size_t k = 1; k < found.size(); ++k) {
      EXPECT_GE(check_validity(found[k - 1], z).violation, check_validity(found[k], z).violation - 1e-15);
    }
    const std::vector<Cut> top = separate_j2(z, 1e-6, 3);
    EXPECT_LE(top.size(), 3u);
  }
}

TEST(SeparateJ2, SerialReferenceAgrees) {
  const int n = 12;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 0.05);
  ZVector z(n);
  for (double& v : z.raw()) v = u(rng);
  const std::vector<Cut> ref = separate_j2_serial(z, 1e-6, 100000);
  ASSERT_FALSE(ref.empty());
  for (int w : {1, 2, 5}) {
    set_worker_count(w);
    const std::vector<Cut> par = separate_j2(z, 1e-6, 100000);
    ASSERT_EQ(par.size(), ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) EXPECT_EQ(par[k], ref[k]) << k;
  }
  set_worker_count(0);
}

TEST(StaticRelax, SingleEdge) {
  EXPECT_NEAR(solve_static_base(single_edge(2)).bound, 1.0, 1e-12);
  EXPECT_NEAR(solve_static_full(single_edge(2)).bound, 0.75, 1e-9);
}

TEST(StaticRelax, RegularGraphsClosedForm) {
  // Averaging an optimum over the n rotations keeps it optimal, so the
  // uniform point is optimal: each ad's k-star binds.
  for (auto [n, k] : {std::pair{6, 2}, {8, 3}, {12, 4}, {20, 3}}) {
    const Instance inst = gen_regular(n, k);
    EXPECT_NEAR(solve_static_base(inst).bound, n, 1e-8);
    const double closed = n * (1.0 - std::pow(1.0 - static_cast<double>(k) / n, n));
    EXPECT_NEAR(solve_static_full(inst).bound, closed, 1e-6) << n << "," << k;
  }
}

TEST(StaticRelax, AboveTheOptimum) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    const Instance inst = random_weighted(n, 300 + seed);
    const StaticResult full = solve_static_full(inst);
    EXPECT_GE(full.bound, solve_dp(inst).optimal_value - 1e-7);
    EXPECT_LE(full.bound, solve_static_base(inst).bound + 1e-9);
    for (std::size_t k = 1; k < full.history.size(); ++k) EXPECT_LE(full.history[k], full.history[k - 1] + 1e-9);
  }
}

TEST(StaticRelax, SeparationFindsGreedyPrefix) {
  StaticZ z(3);
  z.at(0, 1) = 0.5;
  z.at(2, 1) = 0.47;
  // {0}: 0.5 <= 19/27 holds; {0, 2}: 0.97 > 26/27 is cut.
  const std::vector<Cut> cuts = separate_right_star(z);
  ASSERT_EQ(cuts.size(), 1u);
  EXPECT_EQ(cuts[0].ads, std::vector<int>{1});
  EXPECT_EQ(cuts[0].blocks.size(), 3u);
  EXPECT_EQ(cuts[0].rhs, Rational(26, 27));
  EXPECT_TRUE(separate_right_star(StaticZ(3)).empty());
}

TEST(StaticRelax, RejectsTimeVaryingWeights) {
  const TimeWeight w{0, 0, 1, 1.0};
  const Instance inst = Instance::from_time(2, 2, 2, std::span(&w, 1));
  EXPECT_ANY_THROW(solve_static_base(inst));
  const StaticWeight s{0, 0, 1.0};
  EXPECT_THROW(solve_static_base(Instance::from_static(2, 3, 2, std::span(&s, 1))), std::invalid_argument);
}

}  // namespace
}  // namespace obm
