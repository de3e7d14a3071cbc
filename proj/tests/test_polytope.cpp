#include <gtest/gtest.h>

#include <random>

#include "obm/error.hpp"
#include "obm/exact_dp.hpp"
#include "obm/polytope_verify.hpp"

namespace obm {
namespace {

Instance random_square(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> w(0.0, 1.0);
  std::bernoulli_distribution keep(0.6);
  std::vector<TimeWeight> ws;
  for (int t = 1; t <= n; ++t) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (keep(rng)) ws.push_back({i, j, t, w(rng)});
      }
    }
  }
  return Instance::from_time(n, n, n, ws);
}

TEST(PolicyLp, ColumnCounts) {
  for (int n = 1; n <= 4; ++n) {
    const FullPolicyLp lp = build_policy_lp(n);
    EXPECT_EQ(lp.num_x, n * n * n * (1 << (n - 1)));
    EXPECT_EQ(lp.num_y, n * n * (1 << n));
    EXPECT_EQ(lp.model.num_vars(), lp.num_x + lp.num_y);
  }
  const FullPolicyLp three = build_policy_lp(3);
  EXPECT_EQ(three.num_x, 108);
  EXPECT_EQ(three.num_y, 72);
  EXPECT_THROW(build_policy_lp(5), CapacityError);
  EXPECT_THROW(three.x(0, 1, 1, 0b010), std::invalid_argument);
}

TEST(PolicyLp, RegularOneIsNineteenNinths) {
  const Instance inst = gen_regular(3, 1);
  EXPECT_NEAR(solve_policy_lp(inst), 19.0 / 9.0, 1e-10);
  EXPECT_NEAR(solve_dp(inst).optimal_value, 19.0 / 9.0, 1e-12);
  EXPECT_NEAR(solve_value_lp(inst), 19.0 / 9.0, 1e-10);
  const Instance empty = Instance::from_static(3, 3, 3, std::vector<StaticWeight>{});
  EXPECT_EQ(solve_policy_lp(empty), 0.0);
}

// Both LPs are exact reformulations of the DP.
TEST(PolicyLp, PolicyAndValueLpEqualDp) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2);
    const Instance inst = random_square(n, seed);
    const double dp = solve_dp(inst).optimal_value;
    EXPECT_NEAR(solve_policy_lp(inst), dp, 1e-8) << seed;
    EXPECT_NEAR(solve_value_lp(inst), dp, 1e-8) << seed;
  }
  const Instance four = random_square(4, 99);
  EXPECT_NEAR(solve_policy_lp(four), solve_dp(four).optimal_value, 1e-8);
}

TEST(MaxOverQ, KnownTightValues) {
  EXPECT_NEAR(max_over_Q(3, make_prob_bound(3, 1, 2)), 1.0 / 3.0, 1e-10);
  EXPECT_NEAR(max_over_Q(3, make_j1(3, 0, 2, 2)), 1.0, 1e-10);
  const std::vector<int> seq{0, 1};
  EXPECT_NEAR(max_over_Q(3, make_gen_h(3, {0, 1}, 1, seq)), 4.0, 1e-9);
}

TEST(Facet, ProbBoundAndOneAdRows) {
  const FacetCertificate p = facet_dimension(3, make_prob_bound(3, 0, 2), 400);
  EXPECT_EQ(p.affine_rank, 26);
  EXPECT_EQ(p.verdict, FacetVerdict::kValidAndFacet);
  EXPECT_EQ(facet_dimension(3, make_j1(3, 1, 0, 1), 400).verdict, FacetVerdict::kValidAndFacet);
  const FacetCertificate last = facet_dimension(3, make_j1(3, 1, 0, 3), 400);
  EXPECT_LT(last.affine_rank, 26);
  EXPECT_EQ(last.verdict, FacetVerdict::kValidNotCertified);
}

TEST(Facet, BadRightHandSides) {
  Cut low = make_j1(3, 0, 0, 2);
  low.rhs = Rational(9, 10);
  EXPECT_EQ(facet_dimension(3, low, 10).verdict, FacetVerdict::kInvalid);
  Cut high = make_j1(3, 0, 0, 2);
  high.rhs = 2;
  EXPECT_THROW(facet_dimension(3, high, 10), ContractViolation);
}

TEST(Achievable, SamplesAreValidAndFullDimensional) {
  const std::vector<ExactZVector> pts = sample_achievable(3, 300, {4, 0});
  EXPECT_EQ(affine_rank(pts), 27);
  for (CutFamily f : {CutFamily::kProbBound, CutFamily::kJ1, CutFamily::kJ2}) {
    for (const Cut& c : enumerate_family(3, f)) {
      for (const ExactZVector& z : pts) ASSERT_TRUE(check_validity(c, z).satisfied) << c.key();
    }
  }
  EXPECT_EQ(sample_achievable(3, 5, {4, 0}), sample_achievable(3, 5, {4, 0}));
}

TEST(Achievable, AffineRankBasics) {
  ExactZVector a(2), b(2), c(2);
  b.at(0, 0, 1) = 1;
  c.at(0, 0, 1) = 2;
  EXPECT_EQ(affine_rank({}), -1);
  EXPECT_EQ(affine_rank({a}), 0);
  EXPECT_EQ(affine_rank({a, b, c}), 1);
  c.at(1, 1, 2) = Rational(1, 3);
  EXPECT_EQ(affine_rank({a, b, c}), 2);
}

}  // namespace
}  // namespace obm
