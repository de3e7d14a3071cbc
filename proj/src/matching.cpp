#include "obm/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace obm {
namespace {

constexpr int kFree = -1;

class HopcroftKarp {
 public:
  HopcroftKarp(int n_right, const std::vector<std::vector<int>>& adj)
      : adj_(adj), mate_l_(adj.size(), kFree), mate_r_(n_right, kFree), dist_(adj.size()) {}

  int run() {
    int size = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (mate_l_[u] == kFree && dfs(static_cast<int>(u))) ++size;
      }
    }
    return size;
  }

  const std::vector<int>& mates() const { return mate_l_; }

 private:
  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (mate_l_[u] == kFree) {
        dist_[u] = 0;
        q.push(static_cast<int>(u));
      } else {
        dist_[u] = -1;
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj_[u]) {
        const int w = mate_r_[v];
        if (w == kFree) {
          found = true;
        } else if (dist_[w] < 0) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : adj_[u]) {
      const int w = mate_r_[v];
      if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        mate_l_[u] = v;
        mate_r_[v] = u;
        return true;
      }
    }
    dist_[u] = -1;  // dead end for this phase
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<int> mate_l_;
  std::vector<int> mate_r_;
  std::vector<int> dist_;
};

}  // namespace

MatchingResult max_cardinality_matching(int n_right, const std::vector<std::vector<int>>& adj) {
  for (const auto& row : adj) {
    for (int v : row) {
      if (v < 0 || v >= n_right) throw std::invalid_argument("matching: right vertex out of range");
    }
  }
  HopcroftKarp hk(n_right, adj);
  MatchingResult res;
  res.value = hk.run();
  res.mate = hk.mates();
  return res;
}

MatchingResult max_weight_matching(int n_left, int n_right, const std::vector<double>& weight) {
  if (n_left < 0 || n_right < 0 || weight.size() != static_cast<std::size_t>(n_left) * n_right) {
    throw std::invalid_argument("matching: weight matrix has the wrong size");
  }
  for (double w : weight) {
    if (!(w >= 0.0) || w == std::numeric_limits<double>::infinity()) {
      throw std::invalid_argument("matching: weights must be finite and nonnegative");
    }
  }
  MatchingResult res;
  res.mate.assign(n_left, kFree);
  const int n = std::max(n_left, n_right);
  if (n == 0) return res;
  auto cost = [&](int r, int c) {
    return r < n_left && c < n_right ? -weight[static_cast<std::size_t>(r) * n_right + c] : 0.0;
  };
  // Potentials u (rows), v (cols); p[c] = row assigned to column c, 1-based.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int r = 1; r <= n; ++r) {
    p[0] = r;
    int c0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[c0] = 1;
      const int r0 = p[c0];
      double delta = inf;
      int c1 = 0;
      for (int c = 1; c <= n; ++c) {
        if (used[c]) continue;
        const double cur = cost(r0 - 1, c - 1) - u[r0] - v[c];
        if (cur < minv[c]) {
          minv[c] = cur;
          way[c] = c0;
        }
        if (minv[c] < delta) {
          delta = minv[c];
          c1 = c;
        }
      }
      for (int c = 0; c <= n; ++c) {
        if (used[c]) {
          u[p[c]] += delta;
          v[c] -= delta;
        } else {
          minv[c] -= delta;
        }
      }
      c0 = c1;
    } while (p[c0] != 0);
    do {
      const int c1 = way[c0];
      p[c0] = p[c1];
      c0 = c1;
    } while (c0 != 0);
  }
  for (int c = 1; c <= n; ++c) {
    const int r = p[c] - 1;
    if (r < n_left && c - 1 < n_right) {
      const double w = weight[static_cast<std::size_t>(r) * n_right + (c - 1)];
      if (w > 0.0) {
        res.mate[r] = c - 1;
        res.value += w;
      }
    }
  }
  return res;
}

}  // namespace obm
