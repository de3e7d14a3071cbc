#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "obm/dynamic_relax.hpp"
#include "obm/error.hpp"
#include "obm/exact_dp.hpp"
#include "obm/matching.hpp"
#include "obm/parallel.hpp"
#include "obm/policy_sim.hpp"

namespace obm {
namespace {

Instance weighted(int n, std::uint64_t seed, double p = 0.5) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  std::uniform_real_distribution<double> w(0.2, 2.0);
  std::vector<StaticWeight> ws;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (edge(rng)) ws.push_back({i, j, w(rng)});
    }
  }
  return Instance::from_static(n, n, n, ws, "w" + std::to_string(seed));
}

std::vector<std::uint8_t> all_free(int n) { return std::vector<std::uint8_t>(n, 1); }

// Stages count down, so the last stage (t = 1) carries no later-stage prices.
TEST(Decide, LastStageHasNoAccumulatedPrices) {
  const int n = 3;
  const Instance inst = Instance::from_static(n, n, n, std::vector<StaticWeight>{{0, 0, 1.0}, {0, 2, 2.0}});
  DualPrices prices(n);
  for (double& m : prices.mu.raw()) m = 0.3;
  const PolicyContext ctx = PolicyContext::dual_price(inst, prices);
  std::vector<std::uint8_t> no2{1, 1, 0};
  EXPECT_EQ(ctx.decide(inst, 1, 0, all_free(n)), Action::match(2));
  // At stage 3 each ad carries (1/n) * n * 0.3 * 2 = 0.6.
  EXPECT_EQ(ctx.decide(inst, 3, 0, all_free(n)), Action::match(2));
  EXPECT_EQ(ctx.decide(inst, 3, 0, no2), Action::match(0));
  for (double& m : prices.mu.raw()) m = 1.0;
  const PolicyContext pricey = PolicyContext::dual_price(inst, prices);
  // Scores -1 and exactly 0: a zero score discards.
  EXPECT_EQ(pricey.decide(inst, 3, 0, all_free(n)), Action::discard());
  EXPECT_EQ(pricey.decide(inst, 1, 0, no2), Action::match(0));
}

TEST(Decide, ZeroPricesActLikeGreedy) {
  const Instance inst = weighted(5, 3);
  const PolicyContext dual = PolicyContext::dual_price(inst, DualPrices(5));
  const PolicyContext greedy = PolicyContext::greedy();
  std::mt19937_64 rng(1);
  std::bernoulli_distribution free(0.6);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<std::uint8_t> avail(5);
    for (auto& a : avail) a = free(rng);
    const int t = 1 + rep % 5;
    const int i = rep % 5;
    EXPECT_EQ(dual.decide(inst, t, i, avail), greedy.decide(inst, t, i, avail));
  }
}

TEST(Decide, TiesGoToLowestAd) {
  const Instance inst = Instance::from_static(3, 3, 3, std::vector<StaticWeight>{{1, 2, 1.0}, {1, 1, 1.0}});
  EXPECT_EQ(PolicyContext::greedy().decide(inst, 2, 1, all_free(3)), Action::match(1));
  EXPECT_EQ(PolicyContext::dual_price(inst, DualPrices(3)).decide(inst, 2, 1, all_free(3)), Action::match(1));
  EXPECT_EQ(PolicyContext::greedy().decide(inst, 2, 0, all_free(3)), Action::discard());
}

TEST(Decide, RejectsMalformedContexts) {
  const Instance inst = weighted(4, 1);
  EXPECT_THROW(PolicyContext::dual_price(inst, DualPrices(3)), std::invalid_argument);
  const Instance rect = Instance::from_static(2, 3, 3, std::vector<StaticWeight>{{0, 0, 1.0}});
  EXPECT_THROW(PolicyContext::dual_price(rect, DualPrices(3)), std::invalid_argument);
  EXPECT_THROW(PolicyContext::random_feasible().decide(inst, 1, 0, all_free(4)), std::invalid_argument);
  EXPECT_THROW(PolicyContext::greedy().decide(inst, 1, 0, all_free(3)), std::invalid_argument);
  EXPECT_THROW(PolicyContext::random_feasible().as_policy_fn(inst), std::invalid_argument);
  EXPECT_THROW(parse_policy("ranking"), std::invalid_argument);
  EXPECT_EQ(parse_policy("dual_price"), PolicyKind::kDualPrice);
}

TEST(DualPricePolicy, SingleEdgeIsOptimal) {
  const Instance inst = Instance::from_static(2, 2, 2, std::vector<StaticWeight>{{0, 0, 1.0}});
  const BoundReport r = solve_dynamic(inst, false);
  const PolicyContext ctx = PolicyContext::dual_price(inst, r.duals);
  EXPECT_NEAR(eval_policy_exact(inst, ctx.as_policy_fn(inst)).value, 0.75, 1e-12);
}

TEST(Simulate, AlwaysDiscardIsZero) {
  const Instance inst = weighted(4, 2);
  // No edges, so every policy discards.
  const Instance empty = Instance::from_static(4, 4, 4, std::vector<StaticWeight>{});
  const SimReport s = simulate(empty, PolicyContext::greedy(), 500, {1, 0});
  EXPECT_EQ(s.mean, 0.0);
  EXPECT_EQ(s.stddev, 0.0);
  EXPECT_EQ(s.samples, 500);
  EXPECT_THROW(simulate(inst, PolicyContext::greedy(), 0, {1, 0}), std::invalid_argument);
}

// Monte Carlo against exact forward evaluation of the same policy.
TEST(Simulate, AgreesWithExactEvaluation) {
  const long samples = 40000;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const int n = 3 + static_cast<int>(seed);
    const Instance inst = weighted(n, 20 + seed);
    const BoundReport r = solve_dynamic(inst, false);
    for (const PolicyContext& ctx :
         {PolicyContext::dual_price(inst, r.duals), PolicyContext::greedy(), PolicyContext::exact_dp(inst)}) {
      const double exact = eval_policy_exact(inst, ctx.as_policy_fn(inst)).value;
      const SimReport s = simulate(inst, ctx, samples, {seed, 0});
      EXPECT_NEAR(s.mean, exact, 4.0 * s.stddev / std::sqrt(double(samples)) + 1e-12)
          << policy_name(ctx.kind()) << " n=" << n;
    }
  }
}

TEST(Simulate, IndependentOfWorkerCount) {
  const Instance inst = weighted(6, 8);
  const PolicyContext ctx = PolicyContext::greedy();
  const SimReport serial = simulate_serial(inst, ctx, 3000, {11, 4});
  const SimReport off_serial = offline_matching_serial(inst, 3000, {11, 4});
  for (int w : {1, 2, 3, 7}) {
    set_worker_count(w);
    const SimReport s = simulate(inst, ctx, 3000, {11, 4});
    EXPECT_EQ(s.mean, serial.mean);
    EXPECT_EQ(s.stddev, serial.stddev);
    EXPECT_EQ(offline_matching(inst, 3000, {11, 4}).mean, off_serial.mean);
    const SimReport r = simulate(inst, PolicyContext::random_feasible(), 500, {2, 2});
    EXPECT_EQ(r.mean, simulate_serial(inst, PolicyContext::random_feasible(), 500, {2, 2}).mean);
  }
  set_worker_count(0);
  EXPECT_NE(simulate(inst, ctx, 3000, {12, 4}).mean, serial.mean);
}

TEST(Simulate, RandomFeasibleNeverBeatsOptimum) {
  const Instance inst = weighted(5, 31);
  const double opt = solve_dp(inst).optimal_value;
  const SimReport s = simulate(inst, PolicyContext::random_feasible(), 20000, {5, 0});
  EXPECT_LE(s.mean, opt + 4.0 * s.stddev / std::sqrt(20000.0));
}

// Exact hindsight value by enumerating all n^n arrival sequences.
double exact_offline(const Instance& inst) {
  const int n = inst.n_impressions();
  const int T = inst.horizon();
  const int m = inst.n_ads();
  std::vector<int> seq(T, 0);
  double total = 0.0;
  long count = 0;
  while (true) {
    std::vector<double> w(static_cast<std::size_t>(T) * m);
    for (int k = 0; k < T; ++k) {
      for (int j = 0; j < m; ++j) w[static_cast<std::size_t>(k) * m + j] = inst.weight(seq[k], j, T - k);
    }
    total += max_weight_matching(T, m, w).value;
    ++count;
    int pos = 0;
    while (pos < T && ++seq[pos] == n) seq[pos++] = 0;
    if (pos == T) break;
  }
  return total / count;
}

TEST(Offline, MatchesEnumeration) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Instance inst = weighted(4, 50 + seed, 0.4);
    const SimReport s = offline_matching(inst, 40000, {seed, 9});
    EXPECT_NEAR(s.mean, exact_offline(inst), 4.0 * s.stddev / std::sqrt(40000.0) + 1e-12);
    EXPECT_GE(s.mean, solve_dp(inst).optimal_value - 4.0 * s.stddev / std::sqrt(40000.0));
  }
  const Instance binary = gen_erdos(4, 0.4, {3, 0});
  const SimReport b = offline_matching(binary, 40000, {1, 9});
  EXPECT_NEAR(b.mean, exact_offline(binary), 4.0 * b.stddev / std::sqrt(40000.0) + 1e-12);
}

TEST(Offline, CompleteGraphAndSingleEdge) {
  const int n = 6;
  std::vector<StaticWeight> full;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) full.push_back({i, j, 1.0});
  }
  const SimReport c = offline_matching(Instance::from_static(n, n, n, full), 2000, {1, 0});
  EXPECT_EQ(c.mean, n);
  EXPECT_EQ(c.stddev, 0.0);
  const SimReport s = offline_matching(Instance::from_static(2, 2, 2, std::vector<StaticWeight>{{0, 0, 1.0}}), 40000, {1, 0});
  EXPECT_NEAR(s.mean, 0.75, 4.0 * s.stddev / std::sqrt(40000.0));
}

TEST(DualPricePolicy, SymmetricPricesTieWithGreedyOnRegularGraphs) {
  for (auto [n, k] : {std::pair{8, 2}, {10, 3}, {12, 4}}) {
    const Instance inst = gen_regular(n, k);
    const BoundReport r = solve_dynamic(inst, false);
    const DualPrices sym = symmetrize_cyclic(inst, r.duals);
    EXPECT_LE(dual_feasibility_gap(inst, sym), 1e-7);
    const std::vector<double> p = sym.ad_prices();
    for (int t = 1; t <= n; ++t) {
      for (int j = 1; j < n; ++j) EXPECT_NEAR(p[(t - 1) * n + j], p[(t - 1) * n], 1e-9);
    }
    const SimReport a = simulate(inst, PolicyContext::dual_price(inst, sym), 20000, {3, 1});
    const SimReport g = simulate(inst, PolicyContext::greedy(), 20000, {3, 1});
    EXPECT_NEAR(a.mean, g.mean, 4.0 * g.stddev / std::sqrt(20000.0)) << n << "," << k;
  }
  EXPECT_THROW(symmetrize_cyclic(weighted(4, 1), DualPrices(4)), std::invalid_argument);
}

TEST(DualPricePolicy, UniformTiesSplitEvenly) {
  const std::vector<StaticWeight> ws{{0, 0, 1.0}, {0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 0.5}};
  const Instance inst = Instance::from_static(3, 3, 3, ws);
  const PolicyContext ctx = PolicyContext::dual_price(inst, DualPrices(3), TieBreak::kUniform);
  Engine rng(21);
  std::vector<int> hits(3, 0);
  const std::vector<std::uint8_t> all{1, 1, 1};
  const int draws = 30000;
  for (int k = 0; k < draws; ++k) ++hits[ctx.decide(inst, 1, 0, all, &rng).ad];
  for (int h : hits) EXPECT_NEAR(h, draws / 3.0, 4.0 * std::sqrt(draws * (1.0 / 3) * (2.0 / 3)));
  const std::vector<std::uint8_t> two{0, 1, 1};
  for (int k = 0; k < 100; ++k) EXPECT_NE(ctx.decide(inst, 1, 0, two, &rng).ad, 0);
  // a unique best score is taken without drawing
  const Engine before = rng;
  EXPECT_EQ(ctx.decide(inst, 1, 1, all, &rng).ad, 2);
  EXPECT_TRUE(rng == before);
  EXPECT_THROW(ctx.decide(inst, 1, 0, all), std::invalid_argument);
  EXPECT_THROW(ctx.as_policy_fn(inst), std::invalid_argument);
}

TEST(DualPricePolicy, SymmetricPricesWithUniformTiesActLikeRandomChoice) {
  const Instance inst = gen_regular(10, 3);
  const DualPrices sym = symmetrize_cyclic(inst, solve_dynamic(inst, false).duals);
  const SimReport a = simulate(inst, PolicyContext::dual_price(inst, sym, TieBreak::kUniform), 20000, {6, 1});
  const SimReport r = simulate(inst, PolicyContext::random_feasible(), 20000, {6, 1});
  EXPECT_NEAR(a.mean, r.mean, 4.0 * r.stddev / std::sqrt(20000.0));
}

TEST(SimReportJson, RoundTrip) {
  SimReport r{1.5, 0.25, 10, 99, "greedy", "x"};
  const SimReport back = parse_sim_report(format_sim_report(r));
  EXPECT_EQ(back.mean, r.mean);
  EXPECT_EQ(back.stddev, r.stddev);
  EXPECT_EQ(back.samples, r.samples);
  EXPECT_EQ(back.seed, r.seed);
  EXPECT_EQ(back.policy, r.policy);
  EXPECT_EQ(back.instance_label, r.instance_label);
  EXPECT_THROW(parse_sim_report("{\"mean\": 1}"), ParseError);
}

}  // namespace
}  // namespace obm
