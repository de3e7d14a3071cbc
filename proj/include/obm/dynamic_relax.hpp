#pragma once

#include <map>
#include <string>
#include <vector>

#include "obm/instance.hpp"
#include "obm/lp.hpp"
#include "obm/oracle_dp.hpp"
#include "obm/zvector.hpp"

namespace obm {

// lambda_i^t for the per-stage impression rows and mu_ij^t for the one-ad
// rows, scaled so that the dual constraint reads
//   lambda_i^t + mu_ij^t + sum_{tau < t} (1/n) sum_k mu_kj^tau >= w_ij^t.
struct DualPrices {
  int n = 0;
  std::vector<double> lambda;  // index (t-1) * n + i
  ZVector mu;

  DualPrices() = default;
  explicit DualPrices(int size) : n(size), lambda(static_cast<std::size_t>(size) * size, 0.0), mu(size) {}
  double& lam(int i, int t) { return lambda[static_cast<std::size_t>(t - 1) * n + i]; }
  double lam(int i, int t) const { return lambda[static_cast<std::size_t>(t - 1) * n + i]; }

  // prices[(t-1) * n + j] = sum_{tau < t} (1/n) sum_k mu_kj^tau
  std::vector<double> ad_prices() const;
};

// Largest violation of the dual constraint over pairs with a variable.
double dual_feasibility_gap(const Instance& inst, const DualPrices& duals);

// Average of the prices over the n simultaneous rotations i -> i+1, j -> j+1.
// For a rotation-invariant instance (gen_regular) this is again an optimal
// dual of the one-ad LP, with ad prices equal across ads at every stage.
DualPrices symmetrize_cyclic(const Instance& inst, const DualPrices& duals);

struct BoundReport {
  double bound = 0.0;
  ZVector z;
  DualPrices duals;
  std::map<std::string, int> cuts_added;  // by family name
  int rounds = 0;
  double solve_seconds = 0.0;
  std::vector<double> history;
};

enum class DynamicFormulation {
  kAuto,
  kExplicit,    // one-ad rows written out term by term
  kAggregated,  // running-sum variables u_j^t replace the stage tails
};

struct DynamicOptions {
  DynamicFormulation formulation = DynamicFormulation::kAuto;
  double violation_tol = 1e-6;
  int max_rounds = 50;   // j2 constraint generation
  int top_k = 500;       // cuts added per round
  // Simplex stalls on the large stage LPs; ipm with crossover keeps a vertex.
  LpOptions lp = [] {
    LpOptions o;
    o.highs_solver = "ipm";
    return o;
  }();
};

// Stage-indexed LP over the per-stage impression rows and the one-ad rows,
// optionally with constraint generation for the two-ad family. Requires a
// square instance. Only (i, j) pairs with some positive weight get
// variables; cut terms on other pairs are dropped.
BoundReport solve_dynamic(const Instance& inst, bool enable_j2, const DynamicOptions& options = {});

// Per-stage impression rows plus generated two-ad cuts, no one-ad rows.
BoundReport bound_prob_j2_only(const Instance& inst, const DynamicOptions& options = {});

// Exact separation of the two-ad family: for each stage t in [1, n-2] and
// ad pair, the best impressions at t and t+1 are independent argmaxes.
// Returns at most top_k cuts, most violated first.
std::vector<Cut> separate_j2(const ZVector& z, double violation_tol = 1e-6, int top_k = 500);
std::vector<Cut> separate_j2_serial(const ZVector& z, double violation_tol = 1e-6, int top_k = 500);

std::string format_bound_report(const BoundReport& report, const std::string& label);

}  // namespace obm
