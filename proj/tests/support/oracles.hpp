#pragma once

// Independent reference computations used by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "obm/rational.hpp"

namespace obm::testing {

// Max of sum_t alpha_t Z_{I_t,J}^t by enumerating every deterministic
// match/skip rule on (stage, ads of J left) and evaluating it forward.
// alpha entries are integers; the result is returned times n^n.
inline std::int64_t brute_force_R_scaled(int n, const std::vector<std::int64_t>& alpha,
                                         const std::vector<int>& i_sizes, int j_size) {
  const int cells = n * j_size;
  std::int64_t nn = 1;
  for (int k = 0; k < n; ++k) nn *= n;
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (std::uint64_t rule = 0; rule < (std::uint64_t{1} << cells); ++rule) {
    // mass[d] scaled by n^(n - stages processed)
    std::vector<std::int64_t> mass(j_size + 1, 0);
    mass[j_size] = 1;
    std::int64_t value = 0;  // scaled by n^n at the end
    std::int64_t scale_left = nn;
    for (int t = n; t >= 1; --t) {
      scale_left /= n;
      std::vector<std::int64_t> next(j_size + 1, 0);
      const int hit = i_sizes[t - 1];
      for (int d = 0; d <= j_size; ++d) {
        if (mass[d] == 0) continue;
        const bool take = d >= 1 && ((rule >> ((t - 1) * j_size + (d - 1))) & 1U);
        next[d] += mass[d] * (n - hit);
        if (take) {
          next[d - 1] += mass[d] * hit;
          value += alpha[t - 1] * mass[d] * hit * scale_left;
        } else {
          next[d] += mass[d] * hit;
        }
      }
      mass = std::move(next);
    }
    best = std::max(best, value);
  }
  return best;
}

// Same maximum, enumerating every deterministic rule on (stage, ads left,
// arrival in I_t or not). Two bits per cell, and only cells reachable from
// (n, j_size) are enumerated, since rules differing elsewhere act alike.
inline std::int64_t brute_force_R_tdp_scaled(int n, const std::vector<std::int64_t>& alpha,
                                             const std::vector<int>& i_sizes, int j_size) {
  std::vector<std::vector<int>> bit(n + 1, std::vector<int>(j_size + 1, -1));
  int bits = 0;
  for (int t = n; t >= 1; --t) {
    for (int d = std::max(1, j_size - (n - t)); d <= j_size; ++d) {
      bit[t][d] = bits;
      bits += 2;
    }
  }
  std::int64_t nn = 1;
  for (int k = 0; k < n; ++k) nn *= n;
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (std::uint64_t rule = 0; rule < (std::uint64_t{1} << bits); ++rule) {
    std::vector<std::int64_t> mass(j_size + 1, 0);
    mass[j_size] = 1;
    std::int64_t value = 0;
    std::int64_t scale_left = nn;
    for (int t = n; t >= 1; --t) {
      scale_left /= n;
      std::vector<std::int64_t> next(j_size + 1, 0);
      const int hit = i_sizes[t - 1];
      for (int d = 0; d <= j_size; ++d) {
        if (mass[d] == 0) continue;
        const bool take_in = d >= 1 && ((rule >> bit[t][d]) & 1U);
        const bool take_out = d >= 1 && ((rule >> (bit[t][d] + 1)) & 1U);
        if (take_in) {
          next[d - 1] += mass[d] * hit;
          value += alpha[t - 1] * mass[d] * hit * scale_left;
        } else {
          next[d] += mass[d] * hit;
        }
        // an arrival outside I_t earns nothing but may still use an ad
        next[take_out ? d - 1 : d] += mass[d] * (n - hit);
      }
      mass = std::move(next);
    }
    best = std::max(best, value);
  }
  return best;
}

}  // namespace obm::testing
