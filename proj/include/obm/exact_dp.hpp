#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <vector>

#include "obm/instance.hpp"
#include "obm/zvector.hpp"

namespace obm {

using AdMask = std::uint32_t;

inline AdMask full_mask(int n_ads) { return n_ads >= 32 ? ~AdMask{0} : (AdMask{1} << n_ads) - 1; }
inline bool contains(AdMask s, int ad) { return (s >> ad) & 1U; }

struct Action {
  int ad = -1;  // -1 discards

  static constexpr Action discard() { return {}; }
  static constexpr Action match(int ad) { return {ad}; }
  bool is_match() const { return ad >= 0; }
  friend bool operator==(const Action&, const Action&) = default;
};

// A non-anticipative Markov policy: action for impression i arriving at
// stage t while ads S are still available.
using PolicyFn = std::function<Action(int stage, int impression, AdMask available)>;

struct DpOptions {
  int cap = 20;  // largest number of ads; memory grows as horizon * 2^ads
};

namespace detail {
struct DpLayers;
}

// Optimal values v*_t(i, S). Only the arrival-averaged layers
// E[v*_t(eta, S)] are stored; v*_t(i, S) is rebuilt from layer t-1 on demand.
class ValueTable {
 public:
  int n_impressions() const;
  int n_ads() const;
  int horizon() const;

  double expected(int stage, AdMask available) const;
  double value(int stage, int impression, AdMask available) const;

  void write_csv(const std::filesystem::path& path) const;

 private:
  friend class ExactPolicy;
  friend struct DpAccess;
  std::shared_ptr<const detail::DpLayers> layers_;
};

// Argmax of the recursion; ties go to matching, then to the smallest ad index.
class ExactPolicy {
 public:
  Action action(int stage, int impression, AdMask available) const;
  Action operator()(int stage, int impression, AdMask available) const {
    return action(stage, impression, available);
  }

 private:
  friend struct DpAccess;
  std::shared_ptr<const detail::DpLayers> layers_;
};

struct DpResult {
  ValueTable values;
  ExactPolicy policy;
  double optimal_value = 0.0;
};

// Works on any shape (n_impressions, n_ads, horizon); the process starts at
// stage `horizon` with every ad available. OpenMP-parallel over ad subsets.
DpResult solve_dp(const Instance& inst, const DpOptions& options = {});
// Straight-line reference kernel kept for testing and benchmarking.
DpResult solve_dp_serial(const Instance& inst, const DpOptions& options = {});

template <class T>
struct PolicyEvaluation {
  T value{};
  BasicZVector<T> z;
};

// Exact expected value and matching probabilities of `policy`, by forward
// propagation of the distribution over (stage, available ads).
PolicyEvaluation<double> eval_policy_exact(const Instance& inst, const PolicyFn& policy,
                                           const DpOptions& options = {});
PolicyEvaluation<Rational> eval_policy_exact_rational(const Instance& inst, const PolicyFn& policy,
                                                      const DpOptions& options = {});

}  // namespace obm
