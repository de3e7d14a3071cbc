#include "obm/static_relax.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "obm/error.hpp"
#include "obm/lp.hpp"
#include "obm/parallel.hpp"

namespace obm {
namespace {

struct StarCut {
  int ad;
  std::vector<int> imps;
  double rhs;
  double violation;
};

void check_static(const Instance& inst) {
  if (inst.n_impressions() != inst.n_ads() || inst.n_ads() != inst.horizon()) {
    throw std::invalid_argument("static relaxation needs a normalized instance (n = m = T)");
  }
  if (!inst.time_constant()) {
    throw UnsupportedModelError("static relaxation does not model time-varying weights");
  }
}

double star_rhs(int n, int size) { return 1.0 - std::pow(1.0 - static_cast<double>(size) / n, n); }

std::vector<StarCut> separate(const StaticZ& z, double tol) {
  const int n = z.n;
  std::vector<std::vector<StarCut>> per_ad(n);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
  for (int j = 0; j < n; ++j) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return z.at(a, j) > z.at(b, j); });
    double prefix = 0.0;
    for (int l = 1; l <= n; ++l) {
      const double v = z.at(order[l - 1], j);
      if (v <= 0.0) break;
      prefix += v;
      const double rhs = star_rhs(n, l);
      if (prefix > rhs + tol) {
        std::vector<int> imps(order.begin(), order.begin() + l);
        std::sort(imps.begin(), imps.end());
        per_ad[j].push_back({j, std::move(imps), rhs, prefix - rhs});
      }
    }
  }
  std::vector<StarCut> out;
  for (auto& v : per_ad) {
    for (auto& c : v) out.push_back(std::move(c));
  }
  return out;
}

struct StaticLp {
  LpModel model;
  std::vector<int> var_of_edge;  // edge index -> column
};

StaticLp build_base(const Instance& inst) {
  StaticLp lp;
  const int n = inst.n_ads();
  lp.model = LpModel(static_cast<int>(inst.edges().size()));
  for (std::size_t e = 0; e < inst.edges().size(); ++e) {
    lp.model.set_objective(static_cast<int>(e), inst.edge_weight(e, 1));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<SparseEntry> row;
    for (int e : inst.edges_of_impression(i)) row.push_back({e, 1.0});
    if (!row.empty()) lp.model.add_row(std::move(row), 1.0, "imp" + std::to_string(i));
  }
  for (int j = 0; j < n; ++j) {
    std::vector<SparseEntry> row;
    for (int e : inst.edges_of_ad(j)) row.push_back({e, 1.0});
    if (!row.empty()) lp.model.add_row(std::move(row), 1.0, "ad" + std::to_string(j));
  }
  return lp;
}

StaticZ extract(const Instance& inst, const LpSolution& sol) {
  StaticZ z(inst.n_ads());
  for (std::size_t e = 0; e < inst.edges().size(); ++e) {
    z.at(inst.edges()[e].impression, inst.edges()[e].ad) = sol.primal[e];
  }
  return z;
}

double objective(const Instance& inst, const StaticZ& z) {
  double v = 0.0;
  for (std::size_t e = 0; e < inst.edges().size(); ++e) {
    v += inst.edge_weight(e, 1) * z.at(inst.edges()[e].impression, inst.edges()[e].ad);
  }
  return v;
}

}  // namespace

StaticResult solve_static_base(const Instance& inst) {
  check_static(inst);
  StaticResult res;
  res.z = StaticZ(inst.n_ads());
  if (inst.edges().empty()) {
    res.history.push_back(0.0);
    return res;
  }
  StaticLp lp = build_base(inst);
  const LpSolution sol = solve(lp.model);
  if (sol.status != LpStatus::kOptimal) throw SolverError("static LP not optimal", sol.iterations);
  res.z = extract(inst, sol);
  res.bound = objective(inst, res.z);
  res.rounds = 1;
  res.history.push_back(res.bound);
  return res;
}

std::vector<Cut> separate_right_star(const StaticZ& z, double violation_tol) {
  std::vector<Cut> out;
  for (StarCut& c : separate(z, violation_tol)) out.push_back(make_right_star(z.n, c.ad, std::move(c.imps)));
  return out;
}

StaticResult solve_static_full(const Instance& inst, const StaticOptions& options) {
  check_static(inst);
  StaticResult res;
  res.z = StaticZ(inst.n_ads());
  if (inst.edges().empty()) {
    res.history.push_back(0.0);
    return res;
  }
  StaticLp lp = build_base(inst);
  LpSolver solver(lp.model);
  while (true) {
    const LpSolution& sol = solver.solve();
    if (sol.status != LpStatus::kOptimal) throw SolverError("static LP not optimal", sol.iterations);
    ++res.rounds;
    res.z = extract(inst, sol);
    res.bound = objective(inst, res.z);
    res.history.push_back(res.bound);
    const std::vector<StarCut> cuts = separate(res.z, options.violation_tol);
    if (cuts.empty()) return res;
    if (res.rounds >= options.max_rounds) {
      throw NonConvergenceError("right-star cut loop", res.bound, res.rounds);
    }
    std::vector<LpRow> rows;
    rows.reserve(cuts.size());
    for (const StarCut& c : cuts) {
      LpRow row;
      for (int i : c.imps) {
        const int e = inst.edge_index(i, c.ad);
        if (e >= 0) row.coeffs.push_back({e, 1.0});
      }
      row.rhs = c.rhs;
      row.tag = "star";
      rows.push_back(std::move(row));
    }
    solver.add_rows(rows);
    res.cuts_added += static_cast<int>(rows.size());
  }
}

}  // namespace obm
