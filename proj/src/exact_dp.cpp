#include "obm/exact_dp.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "obm/error.hpp"
#include "obm/parallel.hpp"

namespace obm {
namespace detail {

struct DpLayers {
  Instance inst;
  // expected[t][S] = E[v*_t(eta, S)], t in [0, horizon]
  std::vector<std::vector<double>> expected;
};

}  // namespace detail

struct DpAccess {
  static DpResult make(std::shared_ptr<const detail::DpLayers> layers) {
    DpResult r;
    r.values.layers_ = layers;
    r.policy.layers_ = layers;
    const int horizon = layers->inst.horizon();
    r.optimal_value = layers->expected[horizon][full_mask(layers->inst.n_ads())];
    return r;
  }
};

namespace {

constexpr int kHardAdLimit = 30;

void check_cap(const Instance& inst, const DpOptions& options) {
  const int cap = std::min(options.cap, kHardAdLimit);
  if (inst.n_ads() > cap) {
    throw CapacityError("exact DP: " + std::to_string(inst.n_ads()) + " ads exceed the cap", cap);
  }
}

bool tie(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

}  // namespace

int ValueTable::n_impressions() const { return layers_->inst.n_impressions(); }
int ValueTable::n_ads() const { return layers_->inst.n_ads(); }
int ValueTable::horizon() const { return layers_->inst.horizon(); }

double ValueTable::expected(int stage, AdMask available) const {
  return layers_->expected.at(stage).at(available);
}

double ValueTable::value(int stage, int impression, AdMask available) const {
  if (stage == 0) return 0.0;
  const auto& inst = layers_->inst;
  const auto& prev = layers_->expected.at(stage - 1);
  double best = prev[available];
  for (int e : inst.edges_of_impression(impression)) {
    const int j = inst.edges()[e].ad;
    if (contains(available, j)) {
      best = std::max(best, inst.edge_weight(e, stage) + prev[available & ~(AdMask{1} << j)]);
    }
  }
  return best;
}

void ValueTable::write_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.precision(17);
  out << "t,i,S,value\n";
  const AdMask states = full_mask(n_ads()) + AdMask{1};
  for (int t = 0; t <= horizon(); ++t) {
    for (int i = 0; i < n_impressions(); ++i) {
      for (AdMask s = 0; s < states; ++s) out << t << ',' << i << ',' << s << ',' << value(t, i, s) << '\n';
    }
  }
}

Action ExactPolicy::action(int stage, int impression, AdMask available) const {
  const auto& inst = layers_->inst;
  const auto& prev = layers_->expected.at(stage - 1);
  const double discard_value = prev[available];
  double best = discard_value;
  for (int e : inst.edges_of_impression(impression)) {
    const int j = inst.edges()[e].ad;
    if (contains(available, j)) {
      best = std::max(best, inst.edge_weight(e, stage) + prev[available & ~(AdMask{1} << j)]);
    }
  }
  for (int j = 0; j < inst.n_ads(); ++j) {
    if (!contains(available, j)) continue;
    const int e = inst.edge_index(impression, j);
    const double w = e < 0 ? 0.0 : inst.edge_weight(e, stage);
    if (tie(w + prev[available & ~(AdMask{1} << j)], best)) return Action::match(j);
  }
  return Action::discard();
}

DpResult solve_dp(const Instance& inst, const DpOptions& options) {
  check_cap(inst, options);
  auto layers = std::make_shared<detail::DpLayers>();
  layers->inst = inst;
  const int n_types = inst.n_impressions();
  const std::int64_t states = std::int64_t{1} << inst.n_ads();
  const double inv_types = 1.0 / n_types;
  layers->expected.assign(inst.horizon() + 1, std::vector<double>(states, 0.0));

  for (int t = 1; t <= inst.horizon(); ++t) {
    const std::vector<double>& prev = layers->expected[t - 1];
    std::vector<double>& cur = layers->expected[t];
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (std::int64_t s = 0; s < states; ++s) {
      const AdMask avail = static_cast<AdMask>(s);
      double acc = 0.0;
      for (int i = 0; i < n_types; ++i) {
        double best = prev[avail];
        for (int e : inst.edges_of_impression(i)) {
          const int j = inst.edges()[e].ad;
          if (contains(avail, j)) {
            best = std::max(best, inst.edge_weight(e, t) + prev[avail & ~(AdMask{1} << j)]);
          }
        }
        acc += best;
      }
      cur[s] = acc * inv_types;
    }
  }
  return DpAccess::make(std::move(layers));
}

DpResult solve_dp_serial(const Instance& inst, const DpOptions& options) {
  check_cap(inst, options);
  auto layers = std::make_shared<detail::DpLayers>();
  layers->inst = inst;
  const int n_types = inst.n_impressions();
  const int m = inst.n_ads();
  const std::size_t states = std::size_t{1} << m;
  layers->expected.assign(inst.horizon() + 1, std::vector<double>(states, 0.0));

  // Full v_t(i, S) layer, every j in S tried (zero weight included).
  std::vector<double> v(static_cast<std::size_t>(n_types) * states);
  for (int t = 1; t <= inst.horizon(); ++t) {
    const std::vector<double>& prev = layers->expected[t - 1];
    for (int i = 0; i < n_types; ++i) {
      for (std::size_t s = 0; s < states; ++s) {
        double best = prev[s];
        for (int j = 0; j < m; ++j) {
          if ((s >> j) & 1U) {
            best = std::max(best, inst.weight(i, j, t) + prev[s & ~(std::size_t{1} << j)]);
          }
        }
        v[i * states + s] = best;
      }
    }
    std::vector<double>& cur = layers->expected[t];
    for (std::size_t s = 0; s < states; ++s) {
      double acc = 0.0;
      for (int i = 0; i < n_types; ++i) acc += v[i * states + s];
      cur[s] = acc / n_types;
    }
  }
  return DpAccess::make(std::move(layers));
}

namespace {

template <class T>
T weight_as(const Instance& inst, int i, int j, int t) {
  return T(inst.weight(i, j, t));
}

template <class T>
PolicyEvaluation<T> eval_policy_impl(const Instance& inst, const PolicyFn& policy,
                                     const DpOptions& options) {
  check_cap(inst, options);
  const int n_types = inst.n_impressions();
  const int m = inst.n_ads();
  const std::size_t states = std::size_t{1} << m;
  const T arrival = T(1) / T(n_types);

  PolicyEvaluation<T> out;
  out.z = BasicZVector<T>(n_types, m, inst.horizon());
  std::vector<T> prob(states, T(0));
  std::vector<T> next(states, T(0));
  prob[full_mask(m)] = T(1);
  for (int t = inst.horizon(); t >= 1; --t) {
    std::fill(next.begin(), next.end(), T(0));
    for (std::size_t s = 0; s < states; ++s) {
      if (prob[s] == T(0)) continue;
      const T mass = prob[s] * arrival;
      const AdMask avail = static_cast<AdMask>(s);
      for (int i = 0; i < n_types; ++i) {
        const Action a = policy(t, i, avail);
        if (!a.is_match()) {
          next[s] += mass;
          continue;
        }
        if (a.ad >= m || !contains(avail, a.ad)) {
          throw ContractViolation("policy matched ad " + std::to_string(a.ad) +
                                  " which is not available at stage " + std::to_string(t));
        }
        out.z.at(i, a.ad, t) += mass;
        out.value += mass * weight_as<T>(inst, i, a.ad, t);
        next[s & ~(std::size_t{1} << a.ad)] += mass;
      }
    }
    std::swap(prob, next);
  }
  return out;
}

}  // namespace

PolicyEvaluation<double> eval_policy_exact(const Instance& inst, const PolicyFn& policy,
                                           const DpOptions& options) {
  return eval_policy_impl<double>(inst, policy, options);
}

PolicyEvaluation<Rational> eval_policy_exact_rational(const Instance& inst, const PolicyFn& policy,
                                                      const DpOptions& options) {
  return eval_policy_impl<Rational>(inst, policy, options);
}

}  // namespace obm
