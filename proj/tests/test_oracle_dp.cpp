#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <tuple>
#include <random>

#include "obm/error.hpp"
#include "obm/exact_dp.hpp"
#include "obm/oracle_dp.hpp"
#include "support/oracles.hpp"

namespace obm {
namespace {

Rational rhs_by_oracle(const Cut& c) { return oracle_R(c); }

TEST(OracleR, SingleStageProbability) {
  for (int n = 2; n <= 6; ++n) {
    for (int t = 1; t <= n; ++t) {
      std::vector<Rational> alpha(n, 0);
      std::vector<int> sizes(n, 0);
      alpha[t - 1] = 1;
      sizes[t - 1] = 1;
      EXPECT_EQ(oracle_R(n, alpha, sizes, n), Rational(1, n));
    }
  }
}

TEST(OracleR, J1AndJ2RightHandSides) {
  for (int n = 3; n <= 6; ++n) {
    for (int t = 1; t <= n; ++t) EXPECT_EQ(rhs_by_oracle(make_j1(n, 0, 1, t)), 1);
    for (int t = 1; t <= n - 2; ++t) EXPECT_EQ(rhs_by_oracle(make_j2(n, 0, 1, 0, 2, t)), 1 + n);
  }
}

TEST(OracleR, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 150; ++rep) {
    const int n = 2 + rep % 3;
    std::uniform_int_distribution<int> a(0, 12), s(0, n), j(1, n);
    std::vector<std::int64_t> alpha(n);
    std::vector<Rational> ralpha(n);
    std::vector<int> sizes(n);
    for (int t = 0; t < n; ++t) {
      alpha[t] = a(rng) < 3 ? 0 : a(rng);
      ralpha[t] = alpha[t];
      sizes[t] = s(rng);
    }
    const int js = j(rng);
    const Rational got = oracle_R(n, ralpha, sizes, js);
    const Rational want(testing::brute_force_R_scaled(n, alpha, sizes, js), ipow(n, n).convert_to<long long>());
    EXPECT_EQ(got, want) << "n=" << n << " rep=" << rep;
  }
}

TEST(OracleR, RejectsBadInput) {
  const std::vector<double> alpha{1.0, 1.0};
  const std::vector<int> sizes{1, 1};
  EXPECT_THROW(oracle_R(2, alpha, sizes, 3), std::invalid_argument);
  EXPECT_THROW(oracle_R(3, alpha, sizes, 1), std::invalid_argument);
  const std::vector<int> big{3, 1};
  EXPECT_THROW(oracle_R(2, alpha, big, 1), std::invalid_argument);
}

TEST(Cuts, FamilyRightHandSidesEqualOracle) {
  for (int n = 2; n <= 5; ++n) {
    for (CutFamily f : {CutFamily::kProbBound, CutFamily::kJ1, CutFamily::kJ2, CutFamily::kGenH, CutFamily::kGenIJ,
                        CutFamily::kGenQ}) {
      if (n == 5 && (f == CutFamily::kGenIJ || f == CutFamily::kGenQ || f == CutFamily::kGenH)) continue;
      for (const Cut& c : enumerate_family(n, f)) ASSERT_EQ(c.rhs, oracle_R(c)) << c.key();
    }
  }
  // Spot checks at n = 6 with the large powers.
  const std::vector<int> seq{0, 1, 2, 3, 4};
  EXPECT_EQ(make_gen_h(6, {0, 1, 2, 3, 4}, 1, seq).rhs, oracle_R(make_gen_h(6, {0, 1, 2, 3, 4}, 1, seq)));
  const std::vector<int> seq2{5, 5};
  const Cut g = make_general(6, {0, 1, 2, 3}, {1, 2, 4}, 2, 1, seq2);
  EXPECT_EQ(g.rhs, oracle_R(g));
}

TEST(Cuts, GeneralReducesToKnownCases) {
  const int n = 5;
  // q = 0, r = 1 with I = {i_{t+1}} is the two-ad cut.
  const std::vector<int> one{3};
  const Cut g = make_general(n, {1, 2}, {4}, 2, 0, one);
  const Cut j2 = make_j2(n, 3, 4, 1, 2, 2);
  EXPECT_EQ(g.rhs, j2.rhs);
  EXPECT_EQ(g.blocks.size(), j2.blocks.size());
  for (std::size_t k = 0; k < g.blocks.size(); ++k) {
    EXPECT_EQ(g.blocks[k].stage, j2.blocks[k].stage);
    EXPECT_EQ(g.blocks[k].alpha, j2.blocks[k].alpha);
    EXPECT_EQ(g.blocks[k].impressions, j2.blocks[k].impressions);
  }
  // Two ads with |I_1| = r: rhs r + n.
  EXPECT_EQ(make_general(n, {0, 3}, {0, 1, 2}, 1, 0, one).rhs, 3 + n);
  // h = n-1, t = 1, one impression everywhere: 1 + n + ... + n^(n-2).
  const std::vector<int> same(n - 1, 2);
  Rational want = 1;
  for (int k = 1; k <= n - 2; ++k) want += Rational(ipow(n, k));
  EXPECT_EQ(make_gen_h(n, {0, 1, 2, 3}, 1, same).rhs, want);
  // q = h-2 leaves weight n^2 on stage t and n on stage t+1.
  const std::vector<int> first{1};
  const Cut shifted = make_general(n, {0, 1, 2}, {0, 4}, 1, 1, first);
  EXPECT_EQ(shifted.rhs, 2 * 2 + n);
  EXPECT_EQ(shifted.blocks.back().stage, 1);
  EXPECT_EQ(shifted.blocks.back().alpha, n * n);
}

TEST(Cuts, ConstructorsValidate) {
  EXPECT_THROW(make_prob_bound(3, 3, 1), std::invalid_argument);
  EXPECT_THROW(make_j1(3, 0, 0, 0), std::invalid_argument);
  EXPECT_THROW(make_j2(4, 0, 0, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(make_j2(4, 0, 0, 1, 2, 3), std::invalid_argument);
  const std::vector<int> seq{0};
  EXPECT_THROW(make_general(4, {0, 1}, {0}, 1, 1, seq), std::invalid_argument);
  EXPECT_THROW(make_general(4, {0, 1}, {0, 1, 2, 3}, 1, 0, seq), std::invalid_argument);
  EXPECT_THROW(make_gen_h(4, {0, 0}, 1, seq), std::invalid_argument);
}

TEST(Cuts, ProbBoundShape) {
  const Cut c = make_prob_bound(3, 0, 2);
  EXPECT_EQ(c.terms().size(), 3u);
  EXPECT_EQ(c.rhs, Rational(1, 3));
}

TEST(Cuts, OptimalPolicyPointsSatisfyEveryCut) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0, 1);
  for (int n = 3; n <= 4; ++n) {
    std::vector<Cut> cuts;
    for (CutFamily f : {CutFamily::kProbBound, CutFamily::kJ1, CutFamily::kJ2, CutFamily::kGenH, CutFamily::kGenQ}) {
      const auto fam = enumerate_family(n, f);
      cuts.insert(cuts.end(), fam.begin(), fam.end());
    }
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<TimeWeight> w;
      for (int t = 1; t <= n; ++t)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) w.push_back({i, j, t, u(rng)});
      const Instance inst = Instance::from_time(n, n, n, w);
      const auto eval = eval_policy_exact_rational(inst, solve_dp(inst).policy);
      for (const Cut& c : cuts) ASSERT_TRUE(check_validity(c, eval.z).satisfied) << c.key();
    }
  }
}

TEST(Cuts, ValidityReportsViolation) {
  ExactZVector z(3);
  EXPECT_TRUE(check_validity(make_prob_bound(3, 0, 1), z).satisfied);
  z.at(0, 0, 1) = Rational(1, 3);
  z.at(0, 1, 1) = Rational(1, 6);
  const Validity v = check_validity(make_prob_bound(3, 0, 1), z);
  EXPECT_FALSE(v.satisfied);
  EXPECT_EQ(v.exact_violation, Rational(1, 6));
  const Validity d = check_validity(make_prob_bound(3, 0, 1), to_double(z));
  EXPECT_NEAR(d.violation, 1.0 / 6, 1e-12);
}

TEST(Cuts, CompiledMatchesExact) {
  ExactZVector z(3);
  z.at(1, 0, 2) = Rational(1, 3);
  z.at(2, 1, 1) = Rational(2, 9);
  const Cut c = make_j2(3, 2, 1, 0, 1, 1);
  std::vector<long long> scaled(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) scaled[k] = static_cast<long long>(numerator(Rational(z.raw()[k] * 27)));
  Rational lhs = 0;
  for (const CutTerm& t : c.terms()) lhs += t.coef * z.at(t.impression, t.ad, t.stage);
  EXPECT_EQ(Rational(CompiledCut(c).lhs_scaled(scaled), 27), lhs);
}

TEST(Cuts, RightStarRhsIsOracle) {
  for (int n = 1; n <= 8; ++n) {
    for (int r = 1; r <= n; ++r) {
      std::vector<int> imps(r);
      std::iota(imps.begin(), imps.end(), 0);
      const Cut c = make_right_star(n, 0, imps);
      EXPECT_EQ(c.rhs, oracle_R(c));
    }
  }
}

TEST(Cuts, JsonRoundTrip) {
  const std::vector<int> seq{1, 0};
  const Cut c = make_general(5, {0, 2, 4}, {1, 3}, 1, 0, seq);
  const Cut back = parse_cut(format_cut(c));
  EXPECT_EQ(c, back);
  EXPECT_THROW(parse_cut("{}"), ParseError);
  EXPECT_THROW(parse_cut(R"({"family":"nope","n":3,"ads":[0],"blocks":[],"rhs_exact":"1"})"), ParseError);
}

TEST(Cuts, EnumerationCounts) {
  EXPECT_EQ(enumerate_family(3, CutFamily::kProbBound).size(), 9u);
  EXPECT_EQ(enumerate_family(3, CutFamily::kJ1).size(), 27u);
  EXPECT_EQ(enumerate_family(3, CutFamily::kJ2).size(), 27u);
  EXPECT_EQ(enumerate_family(3, CutFamily::kGenH).size(), 3u * 2 * 3 + 3u * 9);
  // n = 3: h = 2, r in {1, 2}: 3 ad pairs x 6 sets x 3 sequences.
  EXPECT_EQ(enumerate_family(3, CutFamily::kGenIJ).size(), 54u);
  EXPECT_EQ(enumerate_family(3, CutFamily::kGenQ).size(), 54u);
  EXPECT_THROW(enumerate_family(3, CutFamily::kRightStar), std::invalid_argument);
}

}  // namespace
}  // namespace obm

namespace obm {
namespace {

// With one ad, the I-set form of the generalized family is just the sum of
// the one-ad rows over i in I, so it never adds anything (hence |J| >= 2).
TEST(Families, SingleAdSetFormIsSumOfOneAdRows) {
  for (int n = 3; n <= 5; ++n) {
    for (int t = 1; t <= n; ++t) {
      for (int r = 2; r <= n - 1; ++r) {
        std::vector<int> imps(r);
        std::iota(imps.begin(), imps.end(), 0);
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        std::vector<StageBlock> blocks{{t, Rational(n), imps}};
        for (int tau = t + 1; tau <= n; ++tau) blocks.push_back({tau, Rational(r), all});
        const Cut c = make_custom(n, {1}, blocks);
        EXPECT_EQ(c.rhs, r);
        std::map<std::tuple<int, int, int>, Rational> sum;
        for (int i : imps) {
          for (const CutTerm& term : make_j1(n, i, 1, t).terms()) sum[{term.impression, term.ad, term.stage}] += term.coef;
        }
        std::map<std::tuple<int, int, int>, Rational> mine;
        for (const CutTerm& term : c.terms()) mine[{term.impression, term.ad, term.stage}] += term.coef;
        EXPECT_EQ(mine, sum);
      }
    }
  }
}

}  // namespace
}  // namespace obm
