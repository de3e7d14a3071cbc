#include "obm/dynamic_relax.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "json.hpp"
#include "obm/error.hpp"
#include "obm/lp.hpp"
#include "obm/parallel.hpp"

namespace obm {

std::vector<double> DualPrices::ad_prices() const {
  std::vector<double> prices(static_cast<std::size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    double acc = 0.0;
    for (int t = 1; t <= n; ++t) {
      prices[static_cast<std::size_t>(t - 1) * n + j] = acc;
      double stage_sum = 0.0;
      for (int k = 0; k < n; ++k) stage_sum += mu.at(k, j, t);
      acc += stage_sum / n;
    }
  }
  return prices;
}

double dual_feasibility_gap(const Instance& inst, const DualPrices& duals) {
  const int n = duals.n;
  const std::vector<double> prices = duals.ad_prices();
  double gap = 0.0;
  for (std::size_t e = 0; e < inst.edges().size(); ++e) {
    const auto [i, j] = inst.edges()[e];
    for (int t = 1; t <= n; ++t) {
      const double lhs = duals.lam(i, t) + duals.mu.at(i, j, t) + prices[static_cast<std::size_t>(t - 1) * n + j];
      gap = std::max(gap, inst.edge_weight(e, t) - lhs);
    }
  }
  for (double v : duals.lambda) gap = std::max(gap, -v);
  for (double v : duals.mu.raw()) gap = std::max(gap, -v);
  return gap;
}

DualPrices symmetrize_cyclic(const Instance& inst, const DualPrices& duals) {
  const int n = duals.n;
  if (inst.n_ads() != n || inst.n_impressions() != n || inst.horizon() != n) {
    throw std::invalid_argument("symmetrize_cyclic: instance and prices differ in size");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int t = 1; t <= n; ++t) {
        if (inst.weight(i, j, t) != inst.weight((i + 1) % n, (j + 1) % n, t)) {
          throw std::invalid_argument("symmetrize_cyclic: instance is not invariant under rotation");
        }
      }
    }
  }
  DualPrices out(n);
  for (int t = 1; t <= n; ++t) {
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int r = 0; r < n; ++r) acc += duals.lam((i + r) % n, t);
      out.lam(i, t) = acc / n;
      for (int j = 0; j < n; ++j) {
        double m = 0.0;
        for (int r = 0; r < n; ++r) m += duals.mu.at((i + r) % n, (j + r) % n, t);
        out.mu.at(i, j, t) = m / n;
      }
    }
  }
  return out;
}

namespace {

struct J2Spec {
  int t;
  int i_t;
  int i_t1;
  int j1;
  int j2;
  double violation;
};

// Per stage and ad: impressions with positive z, for sparse argmax scans.
std::vector<J2Spec> separate_specs(const ZVector& z, double tol, int top_k, bool parallel = true) {
  const int n = z.n_ads();
  if (z.n_impressions() != n || z.horizon() != n) throw std::invalid_argument("separate_j2: z must be square");
  if (n < 3) return {};
  // tail[(t-1)*n + j] = sum_{tau >= t} sum_k z_kj^tau
  std::vector<double> tail(static_cast<std::size_t>(n + 1) * n, 0.0);
  for (int t = n; t >= 1; --t) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += z.at(k, j, t);
      tail[static_cast<std::size_t>(t - 1) * n + j] = tail[static_cast<std::size_t>(t) * n + j] + s;
    }
  }
  std::vector<std::vector<std::vector<int>>> support(n + 1, std::vector<std::vector<int>>(n));
  for (int t = 1; t <= n; ++t) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (z.at(i, j, t) > 0.0) support[t][j].push_back(i);
      }
    }
  }
  auto best = [&](int t, int j1, int j2) {
    double v = 0.0;
    int arg = 0;
    for (int side = 0; side < 2; ++side) {
      for (int i : support[t][side == 0 ? j1 : j2]) {
        const double s = z.at(i, j1, t) + z.at(i, j2, t);
        if (s > v || (s == v && i < arg)) {
          v = s;
          arg = i;
        }
      }
    }
    return std::pair<double, int>{v, arg};
  };
  std::vector<std::vector<J2Spec>> per_stage(n);
  const double rhs = 1.0 + n;
#pragma omp parallel for schedule(dynamic) num_threads(worker_count()) if (parallel)
  for (int t = 1; t <= n - 2; ++t) {
    for (int j1 = 0; j1 < n; ++j1) {
      for (int j2 = j1 + 1; j2 < n; ++j2) {
        const double head = tail[static_cast<std::size_t>(t + 1) * n + j1] + tail[static_cast<std::size_t>(t + 1) * n + j2];
        const auto [b1, a1] = best(t + 1, j1, j2);
        const auto [b0, a0] = best(t, j1, j2);
        const double lhs = head + n * b1 + static_cast<double>(n) * n * b0;
        if (lhs > rhs + tol) per_stage[t].push_back({t, a0, a1, j1, j2, lhs - rhs});
      }
    }
  }
  std::vector<J2Spec> all;
  for (auto& v : per_stage) all.insert(all.end(), v.begin(), v.end());
  std::stable_sort(all.begin(), all.end(), [](const J2Spec& a, const J2Spec& b) { return a.violation > b.violation; });
  if (top_k > 0 && static_cast<int>(all.size()) > top_k) all.resize(top_k);
  return all;
}

class DynamicLp {
 public:
  DynamicLp(const Instance& inst, bool with_j1, bool aggregated)
      : inst_(inst), n_(inst.n_ads()), aggregated_(aggregated), with_j1_(with_j1) {
    const int n_edges = static_cast<int>(inst.edges().size());
    n_z_ = n_edges * n_;
    model_ = LpModel(n_z_);
    for (int e = 0; e < n_edges; ++e) {
      for (int t = 1; t <= n_; ++t) model_.set_objective(zvar(e, t), inst.edge_weight(e, t));
    }
    if (aggregated_) {
      u_base_.assign(n_, -1);
      for (int j = 0; j < n_; ++j) {
        if (inst.edges_of_ad(j).empty() || n_ == 1) continue;
        u_base_[j] = model_.num_vars();
        for (int t = 1; t < n_; ++t) model_.add_var(0.0);
      }
    }
    lambda_row_.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (int i = 0; i < n_; ++i) {
      if (inst.edges_of_impression(i).empty()) continue;
      for (int t = 1; t <= n_; ++t) {
        std::vector<SparseEntry> row;
        for (int e : inst.edges_of_impression(i)) row.push_back({zvar(e, t), 1.0});
        lambda_row_[static_cast<std::size_t>(t - 1) * n_ + i] = model_.add_row(std::move(row), 1.0 / n_, "prob");
      }
    }
    if (aggregated_) {
      for (int j = 0; j < n_; ++j) {
        if (u_base_[j] < 0) continue;
        for (int t = 1; t < n_; ++t) {
          std::vector<SparseEntry> row;
          if (t + 1 < n_) row.push_back({uvar(j, t + 1), 1.0});
          for (int e : inst.edges_of_ad(j)) row.push_back({zvar(e, t + 1), 1.0});
          row.push_back({uvar(j, t), -1.0});
          model_.add_row(std::move(row), 0.0, "link");
        }
      }
    }
    if (with_j1_) {
      j1_row_.assign(static_cast<std::size_t>(n_edges) * n_, -1);
      for (int e = 0; e < n_edges; ++e) {
        const int j = inst.edges()[e].ad;
        for (int t = 1; t <= n_; ++t) {
          std::vector<SparseEntry> row;
          add_tail(row, j, t, 1.0);
          row.push_back({zvar(e, t), static_cast<double>(n_)});
          j1_row_[static_cast<std::size_t>(e) * n_ + (t - 1)] = model_.add_row(std::move(row), 1.0, "j1");
        }
      }
    }
  }

  const LpModel& model() const { return model_; }

  LpRow j2_row(const J2Spec& c) const {
    LpRow row;
    for (int j : {c.j1, c.j2}) {
      add_tail(row.coeffs, j, c.t + 1, 1.0);
      const int e1 = inst_.edge_index(c.i_t1, j);
      if (e1 >= 0) row.coeffs.push_back({zvar(e1, c.t + 1), static_cast<double>(n_)});
      const int e0 = inst_.edge_index(c.i_t, j);
      if (e0 >= 0) row.coeffs.push_back({zvar(e0, c.t), static_cast<double>(n_) * n_});
    }
    row.rhs = 1.0 + n_;
    row.tag = "j2";
    return row;
  }

  ZVector z_of(const LpSolution& sol) const {
    ZVector z(n_);
    for (std::size_t e = 0; e < inst_.edges().size(); ++e) {
      const auto [i, j] = inst_.edges()[e];
      for (int t = 1; t <= n_; ++t) z.at(i, j, t) = sol.primal[zvar(static_cast<int>(e), t)];
    }
    return z;
  }

  DualPrices duals_of(const LpSolution& sol) const {
    DualPrices d(n_);
    for (int t = 1; t <= n_; ++t) {
      for (int i = 0; i < n_; ++i) {
        const int r = lambda_row_[static_cast<std::size_t>(t - 1) * n_ + i];
        if (r >= 0) d.lam(i, t) = sol.duals[r];
      }
    }
    if (with_j1_) {
      for (std::size_t e = 0; e < inst_.edges().size(); ++e) {
        const auto [i, j] = inst_.edges()[e];
        for (int t = 1; t <= n_; ++t) {
          d.mu.at(i, j, t) = n_ * sol.duals[j1_row_[e * n_ + (t - 1)]];
        }
      }
    }
    return d;
  }

 private:
  int zvar(int e, int t) const { return e * n_ + (t - 1); }
  int uvar(int j, int t) const { return u_base_[j] + (t - 1); }

  // Terms for sum_{tau > t} sum_k z_kj^tau.
  void add_tail(std::vector<SparseEntry>& row, int j, int t, double coef) const {
    if (t >= n_) return;
    if (aggregated_) {
      if (u_base_[j] >= 0) row.push_back({uvar(j, t), coef});
      return;
    }
    for (int e : inst_.edges_of_ad(j)) {
      for (int tau = t + 1; tau <= n_; ++tau) row.push_back({zvar(e, tau), coef});
    }
  }

  const Instance& inst_;
  int n_;
  bool aggregated_;
  bool with_j1_;
  int n_z_ = 0;
  LpModel model_;
  std::vector<int> u_base_;
  std::vector<int> lambda_row_;
  std::vector<int> j1_row_;
};

void check_square(const Instance& inst) {
  if (inst.n_impressions() != inst.n_ads() || inst.n_ads() != inst.horizon()) {
    throw std::invalid_argument("dynamic relaxation needs a normalized instance (n = m = T)");
  }
}

bool use_aggregated(const Instance& inst, DynamicFormulation f) {
  if (f == DynamicFormulation::kExplicit) return false;
  if (f == DynamicFormulation::kAggregated) return true;
  return inst.n_ads() > 12;
}

double weighted_value(const Instance& inst, const ZVector& z) {
  double v = 0.0;
  for (std::size_t e = 0; e < inst.edges().size(); ++e) {
    const auto [i, j] = inst.edges()[e];
    for (int t = 1; t <= inst.horizon(); ++t) v += inst.edge_weight(e, t) * z.at(i, j, t);
  }
  return v;
}

std::string j2_key(const J2Spec& c) {
  return std::to_string(c.t) + ":" + std::to_string(c.i_t) + ":" + std::to_string(c.i_t1) + ":" +
         std::to_string(c.j1) + ":" + std::to_string(c.j2);
}

BoundReport run(const Instance& inst, bool with_j1, bool enable_j2, const DynamicOptions& options) {
  check_square(inst);
  const auto start = std::chrono::steady_clock::now();
  const int n = inst.n_ads();
  BoundReport rep;
  rep.z = ZVector(n);
  rep.duals = DualPrices(n);
  rep.cuts_added["j2"] = 0;
  if (inst.edges().empty()) {
    rep.history.push_back(0.0);
    return rep;
  }
  DynamicLp lp(inst, with_j1, use_aggregated(inst, options.formulation));
  LpSolver solver(lp.model(), options.lp);
  std::set<std::string> pool;
  while (true) {
    const LpSolution& sol = solver.solve();
    if (sol.status != LpStatus::kOptimal) throw SolverError("dynamic LP not optimal", sol.iterations);
    ++rep.rounds;
    rep.z = lp.z_of(sol);
    rep.bound = weighted_value(inst, rep.z);
    rep.history.push_back(rep.bound);
    if (!enable_j2) break;
    std::vector<LpRow> rows;
    for (const J2Spec& c : separate_specs(rep.z, options.violation_tol, options.top_k)) {
      if (pool.insert(j2_key(c)).second) rows.push_back(lp.j2_row(c));
    }
    if (rows.empty()) break;
    if (rep.rounds > options.max_rounds) {
      throw NonConvergenceError("two-ad constraint generation", rep.bound, rep.rounds);
    }
    solver.add_rows(rows);
    rep.cuts_added["j2"] += static_cast<int>(rows.size());
  }
  rep.duals = lp.duals_of(solver.solution());
  rep.solve_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

BoundReport solve_dynamic(const Instance& inst, bool enable_j2, const DynamicOptions& options) {
  return run(inst, true, enable_j2, options);
}

BoundReport bound_prob_j2_only(const Instance& inst, const DynamicOptions& options) {
  return run(inst, false, true, options);
}

std::vector<Cut> separate_j2(const ZVector& z, double violation_tol, int top_k) {
  std::vector<Cut> out;
  for (const J2Spec& c : separate_specs(z, violation_tol, top_k)) {
    out.push_back(make_j2(z.n_ads(), c.i_t, c.i_t1, c.j1, c.j2, c.t));
  }
  return out;
}

std::vector<Cut> separate_j2_serial(const ZVector& z, double violation_tol, int top_k) {
  std::vector<Cut> out;
  for (const J2Spec& c : separate_specs(z, violation_tol, top_k, false)) {
    out.push_back(make_j2(z.n_ads(), c.i_t, c.i_t1, c.j1, c.j2, c.t));
  }
  return out;
}

std::string format_bound_report(const BoundReport& report, const std::string& label) {
  using nlohmann::json;
  json doc;
  doc["instance_label"] = label;
  doc["bound"] = report.bound;
  doc["rounds"] = report.rounds;
  doc["solve_seconds"] = report.solve_seconds;
  doc["cuts_added"] = report.cuts_added;
  doc["history"] = report.history;
  const int n = report.z.n_ads();
  doc["n"] = n;
  json z = json::array();
  json mu = json::array();
  for (int t = 1; t <= n; ++t) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (std::abs(report.z.at(i, j, t)) > 1e-12) z.push_back({i, j, t, report.z.at(i, j, t)});
        if (report.duals.n == n && std::abs(report.duals.mu.at(i, j, t)) > 1e-12) {
          mu.push_back({i, j, t, report.duals.mu.at(i, j, t)});
        }
      }
    }
  }
  json lambda = json::array();
  if (report.duals.n == n) {
    for (int t = 1; t <= n; ++t) {
      for (int i = 0; i < n; ++i) {
        if (std::abs(report.duals.lam(i, t)) > 1e-12) lambda.push_back({i, t, report.duals.lam(i, t)});
      }
    }
  }
  doc["z"] = z;
  doc["lambda"] = lambda;
  doc["mu"] = mu;
  return doc.dump();
}

}  // namespace obm
