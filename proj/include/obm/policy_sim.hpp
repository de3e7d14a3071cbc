#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "obm/dynamic_relax.hpp"
#include "obm/exact_dp.hpp"
#include "obm/instance.hpp"
#include "obm/rng.hpp"

namespace obm {

enum class PolicyKind { kDualPrice, kGreedy, kRandomFeasible, kExactDp };

const char* policy_name(PolicyKind kind);
PolicyKind parse_policy(const std::string& name);

// How the dual-price policy picks among equal best scores.
enum class TieBreak {
  kLowestIndex,
  kUniform,  // scores within 1e-9 relative of the best count as equal
};

// A decision rule for the simulator. Ties go to the lowest ad index unless
// a dual-price context was built with TieBreak::kUniform.
class PolicyContext {
 public:
  // Score w_ij^t minus the ad's accumulated one-ad prices; matches the best
  // available ad only when the best score is strictly positive.
  static PolicyContext dual_price(const Instance& inst, const DualPrices& prices,
                                  TieBreak ties = TieBreak::kLowestIndex);
  // Largest available weight; discards only when every weight is 0.
  static PolicyContext greedy();
  // Uniform over available ads with positive weight, discard if none.
  static PolicyContext random_feasible();
  // The optimal Markov policy; needs n_ads <= options.cap.
  static PolicyContext exact_dp(const Instance& inst, const DpOptions& options = {});

  PolicyKind kind() const { return kind_; }

  // available[j] != 0 marks ad j as still free. rng is only drawn from by
  // random_feasible and uniform tie-breaking, which require it.
  Action decide(const Instance& inst, int stage, int impression, std::span<const std::uint8_t> available,
                Engine* rng = nullptr) const;

  // Adapter for exact evaluation. Not available for randomized rules.
  PolicyFn as_policy_fn(const Instance& inst) const;

 private:
  PolicyKind kind_ = PolicyKind::kGreedy;
  TieBreak ties_ = TieBreak::kLowestIndex;
  int n_ = 0;
  std::vector<double> prices_;  // (t-1) * n + j
  std::shared_ptr<const ExactPolicy> exact_;
};

struct SimReport {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation of the per-sample totals
  long samples = 0;
  std::uint64_t seed = 0;
  std::string policy;
  std::string instance_label;
};

// Runs the policy on n_samples i.i.d. arrival sequences. Sample k uses the
// engine make_engine(rng, k), so the result does not depend on the worker count.
SimReport simulate(const Instance& inst, const PolicyContext& ctx, long n_samples, const RngSpec& rng);
SimReport simulate_serial(const Instance& inst, const PolicyContext& ctx, long n_samples, const RngSpec& rng);

// Expected hindsight optimum: per sample, a max-weight matching of the
// realized arrivals to the ads. 0/1 weights go through Hopcroft-Karp.
SimReport offline_matching(const Instance& inst, long n_samples, const RngSpec& rng);
SimReport offline_matching_serial(const Instance& inst, long n_samples, const RngSpec& rng);

// Arrival sequence for one sample: entry k is the impression at stage T - k.
std::vector<int> draw_arrivals(const Instance& inst, Engine& engine);

std::string format_sim_report(const SimReport& report);
SimReport parse_sim_report(const std::string& text);

}  // namespace obm
