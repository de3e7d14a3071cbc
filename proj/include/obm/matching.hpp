#pragma once

#include <vector>

namespace obm {

struct MatchingResult {
  double value = 0.0;
  std::vector<int> mate;  // left vertex -> right vertex or -1
};

// Maximum-cardinality bipartite matching (Hopcroft-Karp). adj[u] lists the
// right vertices of left vertex u.
MatchingResult max_cardinality_matching(int n_right, const std::vector<std::vector<int>>& adj);

// Maximum-weight matching for nonnegative weights, weight[u][v] row-major
// (n_left x n_right). Shortest augmenting path assignment on the padded
// square problem; pairs of weight 0 are reported as unmatched.
MatchingResult max_weight_matching(int n_left, int n_right, const std::vector<double>& weight);

}  // namespace obm
