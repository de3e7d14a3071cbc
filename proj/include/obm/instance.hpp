#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "obm/rng.hpp"

namespace obm {

struct StaticWeight {
  int impression;
  int ad;
  double weight;
};

struct TimeWeight {
  int impression;
  int ad;
  int stage;  // 1-based countdown: stage t has t arrivals left, including this one
  double weight;
};

struct Edge {
  int impression;
  int ad;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// An i.i.d. online bipartite matching instance. Impression types arrive
// uniformly at random over `horizon` stages; ads are fixed. Only pairs with
// some positive weight are stored; every other (i, j, t) has weight 0.
// Immutable once built.
class Instance {
 public:
  Instance() = default;

  static Instance from_static(int n_impressions, int n_ads, int horizon,
                              std::span<const StaticWeight> weights, std::string label = {});
  static Instance from_time(int n_impressions, int n_ads, int horizon,
                            std::span<const TimeWeight> weights, std::string label = {});

  int n_impressions() const { return n_impressions_; }
  int n_ads() const { return n_ads_; }
  int horizon() const { return horizon_; }
  const std::string& label() const { return label_; }
  bool time_constant() const { return time_constant_; }

  double weight(int impression, int ad, int stage) const;

  // Pairs with some positive weight, sorted by (impression, ad).
  const std::vector<Edge>& edges() const { return edges_; }
  // Weight of edge e at `stage`.
  double edge_weight(std::size_t e, int stage) const {
    return time_constant_ ? weights_[e] : weights_[e * horizon_ + (stage - 1)];
  }
  // Index into edges() or -1.
  int edge_index(int impression, int ad) const { return index_[impression * n_ads_ + ad]; }
  std::span<const int> edges_of_impression(int impression) const;
  std::span<const int> edges_of_ad(int ad) const;

  bool binary_weights() const;

  Instance with_label(std::string label) const;

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  void build_indices();

  int n_impressions_ = 0;
  int n_ads_ = 0;
  int horizon_ = 0;
  bool time_constant_ = true;
  std::string label_;
  std::vector<Edge> edges_;
  std::vector<double> weights_;  // per edge; stride 1 or horizon
  std::vector<int> index_;
  std::vector<int> by_impression_;
  std::vector<int> by_impression_start_;
  std::vector<int> by_ad_;
  std::vector<int> by_ad_start_;
};

// An instance with n_impressions = n_ads = horizon = n, produced by normalize().
class NormalizedInstance {
 public:
  const Instance& instance() const { return instance_; }
  int n() const { return instance_.n_ads(); }
  int copy_factor() const { return copy_factor_; }
  const std::string& label() const { return instance_.label(); }

  operator const Instance&() const { return instance_; }  // NOLINT

 private:
  friend NormalizedInstance normalize(const Instance& inst);
  NormalizedInstance(Instance inst, int copy_factor)
      : instance_(std::move(inst)), copy_factor_(copy_factor) {}

  Instance instance_;
  int copy_factor_ = 1;
};

// Reduces to n = m = T without changing the optimal value: pads ads or
// stages with zero weight, and when there are fewer impression types than
// ads, replicates every type kappa times (smallest kappa with kappa*n >= m)
// before padding. Zero-weight padded stages make static weights time-varying.
NormalizedInstance normalize(const Instance& inst);

// Each (i, j) pair is an edge of weight 1 (all stages) with probability edge_prob.
Instance gen_erdos(int n, double edge_prob, const RngSpec& rng);

// Impression i is adjacent to ads (i + s) mod n, s in [0, k).
Instance gen_regular(int n, int k);

Instance read_instance(const std::filesystem::path& path);
Instance parse_instance(const std::string& text);
void write_instance(const Instance& inst, const std::filesystem::path& path);
std::string format_instance(const Instance& inst);

}  // namespace obm
