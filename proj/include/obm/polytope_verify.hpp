#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "obm/exact_dp.hpp"
#include "obm/instance.hpp"
#include "obm/lp.hpp"
#include "obm/oracle_dp.hpp"
#include "obm/rng.hpp"
#include "obm/zvector.hpp"

namespace obm {

// State-action occupancy LP over every (stage, impression, available set).
// x(i, j, t, S): match i to j in state (t, i, S + j), S a subset of V - j.
// y(i, t, S): discard in state (t, i, S). Objective is left at zero.
struct FullPolicyLp {
  int n = 0;
  LpModel model;
  int num_x = 0;
  int num_y = 0;

  int x(int i, int j, int t, AdMask s) const;
  int y(int i, int t, AdMask s) const;

  // Sum of x over S for each (i, j, t).
  ZVector project(const std::vector<double>& primal) const;
  // Column objective that puts coefficient c(i, j, t) on every x(i, j, t, .).
  std::vector<double> lift(const ZVector& c) const;
};

// Default cap on n; the model has n^3 2^(n-1) + n^2 2^n columns.
inline constexpr int kPolicyLpCap = 4;

// Columns x(i, j, t, S) with |S + j| < t belong to no flow row; one extra
// row pins their sum to zero so that positive weights stay bounded.
FullPolicyLp build_policy_lp(int n, int cap = kPolicyLpCap);

// Optimum of the occupancy LP for a square instance.
double solve_policy_lp(const Instance& inst, int cap = kPolicyLpCap);

// Optimum of the value-function LP (min E v_n(eta, V) over
// v_t(i, S + j) - E v_{t-1}(eta, S) >= w and v_t(i, S) - E v_{t-1}(eta, S) >= 0).
double solve_value_lp(const Instance& inst, int cap = kPolicyLpCap);

// max of the cut's left-hand side over the achievable set.
double max_over_Q(int n, const Cut& cut, int cap = kPolicyLpCap);

enum class FacetVerdict { kValidAndFacet, kValidNotCertified, kInvalid };
const char* verdict_name(FacetVerdict v);

struct FacetCertificate {
  Cut cut;
  double face_max = 0.0;
  int affine_rank = -1;
  int target_rank = 0;  // n^3 - 1
  int points_used = 0;
  int trials = 0;
  FacetVerdict verdict = FacetVerdict::kValidNotCertified;
};

// Maximizes random objectives (uniform in [-1, 1] per coordinate) over the
// face LHS = rhs and ranks the optimal points exactly: every vertex of the
// face is a deterministic policy, so n^n z is integral and is rounded
// before the rank computation. Stops early once the rank reaches n^3 - 1.
// Throws ContractViolation when the face is empty (max < rhs).
FacetCertificate facet_dimension(int n, const Cut& cut, int trials, std::uint64_t seed = 1,
                                 int cap = kPolicyLpCap);

// Exact z of random deterministic Markov policies (each state picks uniformly
// among discard and the available ads, by hashing the state).
std::vector<ExactZVector> sample_achievable(int n, int count, const RngSpec& rng);

// Dimension of the affine hull, exact.
int affine_rank(const std::vector<ExactZVector>& points);

std::string format_certificate(const FacetCertificate& cert);

}  // namespace obm
