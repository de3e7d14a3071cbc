#pragma once

#include <vector>

#include "obm/instance.hpp"
#include "obm/oracle_dp.hpp"

namespace obm {

// z_ij = probability impression i is ever matched to ad j.
struct StaticZ {
  int n = 0;
  std::vector<double> z;  // row-major n x n

  StaticZ() = default;
  explicit StaticZ(int size) : n(size), z(static_cast<std::size_t>(size) * size, 0.0) {}
  double& at(int i, int j) { return z[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return z[static_cast<std::size_t>(i) * n + j]; }
};

struct StaticResult {
  double bound = 0.0;
  StaticZ z;
  int cuts_added = 0;
  int rounds = 0;
  std::vector<double> history;  // bound after each LP solve
};

struct StaticOptions {
  double violation_tol = 1e-6;
  int max_rounds = 200;
};

// Aggregated LP: per-impression and per-ad capacity 1. Requires a square
// instance (n = m = T) with weights constant over stages; only pairs with
// positive weight get a variable.
StaticResult solve_static_base(const Instance& inst);

// Greedy prefix separation of right-star cuts, at most one per (ad, prefix size).
std::vector<Cut> separate_right_star(const StaticZ& z, double violation_tol = 1e-6);

// Base LP plus right-star cuts until no cut is violated by more than the
// tolerance. Throws NonConvergenceError after max_rounds.
StaticResult solve_static_full(const Instance& inst, const StaticOptions& options = {});

}  // namespace obm
