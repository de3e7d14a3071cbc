#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>

#include "obm/error.hpp"
#include "obm/exact_dp.hpp"
#include "obm/parallel.hpp"

namespace obm {
namespace {

// Plain expectimax recursion, no tables.
double brute(const Instance& inst, int t, AdMask s) {
  if (t == 0) return 0.0;
  double acc = 0.0;
  for (int i = 0; i < inst.n_impressions(); ++i) {
    double best = brute(inst, t - 1, s);
    for (int j = 0; j < inst.n_ads(); ++j) {
      if (contains(s, j)) best = std::max(best, inst.weight(i, j, t) + brute(inst, t - 1, s & ~(AdMask{1} << j)));
    }
    acc += best;
  }
  return acc / inst.n_impressions();
}

Instance random_time_instance(std::mt19937_64& rng, int n_imp, int n_ads, int horizon) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<TimeWeight> w;
  for (int t = 1; t <= horizon; ++t) {
    for (int i = 0; i < n_imp; ++i) {
      for (int j = 0; j < n_ads; ++j) {
        if (u(rng) < 0.6) w.push_back({i, j, t, std::floor(u(rng) * 5)});
      }
    }
  }
  return Instance::from_time(n_imp, n_ads, horizon, w);
}

TEST(ExactDp, MatchesExpectimax) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 15; ++rep) {
    const Instance inst = random_time_instance(rng, 1 + rep % 3, 1 + rep % 4, 1 + rep % 4);
    const double want = brute(inst, inst.horizon(), full_mask(inst.n_ads()));
    EXPECT_NEAR(solve_dp(inst).optimal_value, want, 1e-12);
    EXPECT_NEAR(solve_dp_serial(inst).optimal_value, want, 1e-12);
  }
}

TEST(ExactDp, SerialAndParallelTablesAgree) {
  std::mt19937_64 rng(5);
  const Instance inst = random_time_instance(rng, 5, 8, 6);
  const DpResult a = solve_dp(inst);
  const DpResult b = solve_dp_serial(inst);
  for (int t = 0; t <= inst.horizon(); ++t) {
    for (AdMask s = 0; s <= full_mask(8); ++s) {
      ASSERT_NEAR(a.values.expected(t, s), b.values.expected(t, s), 1e-12);
      for (int i = 0; i < 5; i += 2) ASSERT_NEAR(a.values.value(t, i, s), b.values.value(t, i, s), 1e-12);
    }
  }
}

TEST(ExactDp, WorkerCountDoesNotChangeValues) {
  std::mt19937_64 rng(6);
  const Instance inst = random_time_instance(rng, 4, 9, 5);
  set_worker_count(1);
  const double one = solve_dp(inst).optimal_value;
  set_worker_count(3);
  const double three = solve_dp(inst).optimal_value;
  set_worker_count(0);
  EXPECT_EQ(one, three);
}

TEST(ExactDp, PolicyAttainsOptimum) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 8; ++rep) {
    const Instance inst = random_time_instance(rng, 3, 4, 4);
    const DpResult dp = solve_dp(inst);
    const auto eval = eval_policy_exact(inst, dp.policy);
    EXPECT_NEAR(eval.value, dp.optimal_value, 1e-12);
  }
}

TEST(ExactDp, TiesPreferMatchingLowestAd) {
  const Instance inst = gen_regular(3, 3);
  const DpResult dp = solve_dp(inst);
  // With all ads available at the last stage every match is worth 1.
  EXPECT_EQ(dp.policy(1, 2, full_mask(3)), Action::match(0));
  EXPECT_EQ(dp.policy(1, 0, AdMask{0}), Action::discard());
}

TEST(ExactDp, GreedyRationalValue) {
  // Impression i only fits ad i: each ad is hit with probability 1 - (1/2)^2.
  const Instance inst = gen_regular(2, 1);
  const PolicyFn greedy = [&](int, int i, AdMask s) { return contains(s, i) ? Action::match(i) : Action::discard(); };
  const auto eval = eval_policy_exact_rational(inst, greedy);
  EXPECT_EQ(eval.value, Rational(3, 2));
  EXPECT_EQ(eval.z.at(0, 0, 2), Rational(1, 2));
  EXPECT_EQ(eval.z.at(0, 0, 1), Rational(1, 4));
}

TEST(ExactDp, Contracts) {
  const Instance inst = gen_regular(3, 1);
  const PolicyFn bad = [](int, int, AdMask) { return Action::match(0); };
  EXPECT_THROW(eval_policy_exact(inst, bad), ContractViolation);
  DpOptions small;
  small.cap = 2;
  EXPECT_THROW(solve_dp(inst, small), CapacityError);
  EXPECT_THROW(solve_dp(gen_regular(31, 1), DpOptions{40}), CapacityError);
}

TEST(ExactDp, WritesCsv) {
  const auto path = std::filesystem::temp_directory_path() / "obm_values.csv";
  solve_dp(gen_regular(2, 1)).values.write_csv(path);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "t,i,S,value");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace obm
