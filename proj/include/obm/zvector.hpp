#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "obm/rational.hpp"

namespace obm {

// Time-indexed matching probabilities z[i][j][t]: the probability that
// impression type i is matched to ad j at stage t (1-based countdown).
template <class T>
class BasicZVector {
 public:
  BasicZVector() = default;
  BasicZVector(int n_impressions, int n_ads, int horizon)
      : n_impressions_(n_impressions),
        n_ads_(n_ads),
        horizon_(horizon),
        data_(static_cast<std::size_t>(n_impressions) * n_ads * horizon, T(0)) {}

  // Square shape used throughout the relaxations (n = m = T).
  explicit BasicZVector(int n) : BasicZVector(n, n, n) {}

  int n_impressions() const { return n_impressions_; }
  int n_ads() const { return n_ads_; }
  int horizon() const { return horizon_; }
  std::size_t size() const { return data_.size(); }

  T& at(int i, int j, int t) { return data_[offset(i, j, t)]; }
  const T& at(int i, int j, int t) const { return data_[offset(i, j, t)]; }

  const std::vector<T>& raw() const { return data_; }
  std::vector<T>& raw() { return data_; }

  std::size_t offset(int i, int j, int t) const {
    return (static_cast<std::size_t>(t - 1) * n_impressions_ + i) * n_ads_ + j;
  }

  friend bool operator==(const BasicZVector&, const BasicZVector&) = default;

 private:
  int n_impressions_ = 0;
  int n_ads_ = 0;
  int horizon_ = 0;
  std::vector<T> data_;
};

using ZVector = BasicZVector<double>;
using ExactZVector = BasicZVector<Rational>;

inline ZVector to_double(const ExactZVector& z) {
  ZVector out(z.n_impressions(), z.n_ads(), z.horizon());
  for (std::size_t k = 0; k < z.size(); ++k) out.raw()[k] = z.raw()[k].template convert_to<double>();
  return out;
}

}  // namespace obm
