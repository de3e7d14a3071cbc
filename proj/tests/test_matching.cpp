#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "obm/matching.hpp"

namespace obm {
namespace {

// Best assignment by trying every injection of the smaller side.
double brute_force(int rows, int cols, const std::vector<double>& w) {
  std::vector<int> perm(std::max(rows, cols));
  std::iota(perm.begin(), perm.end(), 0);
  double best = 0.0;
  do {
    double v = 0.0;
    for (int r = 0; r < rows; ++r) {
      if (perm[r] < cols) v += w[static_cast<std::size_t>(r) * cols + perm[r]];
    }
    best = std::max(best, v);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

TEST(Matching, HungarianMatchesPermutations) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  std::bernoulli_distribution zero(0.3);
  for (int rep = 0; rep < 60; ++rep) {
    const int rows = 1 + rep % 6;
    const int cols = 1 + (rep / 6) % 6;
    std::vector<double> w(static_cast<std::size_t>(rows) * cols);
    for (double& x : w) x = zero(rng) ? 0.0 : u(rng);
    const MatchingResult r = max_weight_matching(rows, cols, w);
    EXPECT_NEAR(r.value, brute_force(rows, cols, w), 1e-9) << rows << "x" << cols;
    std::vector<int> seen(cols, 0);
    double again = 0.0;
    for (int i = 0; i < rows; ++i) {
      if (r.mate[i] < 0) continue;
      EXPECT_EQ(seen[r.mate[i]]++, 0);
      again += w[static_cast<std::size_t>(i) * cols + r.mate[i]];
    }
    EXPECT_NEAR(again, r.value, 1e-9);
  }
}

TEST(Matching, HopcroftKarpAgreesWithAssignment) {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 80; ++rep) {
    const int rows = 1 + rep % 7;
    const int cols = 1 + (rep / 7) % 7;
    std::bernoulli_distribution edge(0.1 + 0.1 * (rep % 5));
    std::vector<std::vector<int>> adj(rows);
    std::vector<double> w(static_cast<std::size_t>(rows) * cols, 0.0);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        if (edge(rng)) {
          adj[i].push_back(j);
          w[static_cast<std::size_t>(i) * cols + j] = 1.0;
        }
      }
    }
    const MatchingResult hk = max_cardinality_matching(cols, adj);
    EXPECT_EQ(hk.value, max_weight_matching(rows, cols, w).value);
    EXPECT_EQ(hk.value, brute_force(rows, cols, w));
    for (int i = 0; i < rows; ++i) {
      if (hk.mate[i] >= 0) EXPECT_EQ(w[static_cast<std::size_t>(i) * cols + hk.mate[i]], 1.0);
    }
  }
}

TEST(Matching, EdgeCasesAndErrors) {
  EXPECT_EQ(max_weight_matching(0, 3, {}).value, 0.0);
  EXPECT_EQ(max_cardinality_matching(2, {{}, {}}).value, 0.0);
  EXPECT_THROW(max_weight_matching(2, 2, {1.0}), std::invalid_argument);
  EXPECT_THROW(max_weight_matching(1, 1, {-1.0}), std::invalid_argument);
  EXPECT_THROW(max_cardinality_matching(1, {{1}}), std::invalid_argument);
}

}  // namespace
}  // namespace obm
