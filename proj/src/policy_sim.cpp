#include "obm/policy_sim.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "obm/error.hpp"
#include "obm/matching.hpp"
#include "obm/parallel.hpp"

namespace obm {
namespace {

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;
};

// Two passes in sample order, so the result is independent of how the
// samples were spread over workers.
Stats summarize(const std::vector<double>& v) {
  Stats s;
  if (v.empty()) return s;
  double sum = 0.0;
  for (double x : v) sum += x;
  s.mean = sum / static_cast<double>(v.size());
  if (v.size() > 1) {
    double sq = 0.0;
    for (double x : v) sq += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(v.size() - 1));
  }
  return s;
}

void check_samples(long n_samples) {
  if (n_samples < 1) throw std::invalid_argument("simulation needs at least one sample");
}

double run_policy(const Instance& inst, const PolicyContext& ctx, Engine& engine) {
  const std::vector<int> arrivals = draw_arrivals(inst, engine);
  std::vector<std::uint8_t> avail(inst.n_ads(), 1);
  double total = 0.0;
  const int horizon = inst.horizon();
  for (int k = 0; k < horizon; ++k) {
    const int stage = horizon - k;
    const int i = arrivals[k];
    const Action a = ctx.decide(inst, stage, i, avail, &engine);
    if (!a.is_match()) continue;
    total += inst.weight(i, a.ad, stage);
    avail[a.ad] = 0;
  }
  return total;
}

double hindsight(const Instance& inst, Engine& engine) {
  const std::vector<int> arrivals = draw_arrivals(inst, engine);
  const int horizon = inst.horizon();
  if (inst.binary_weights() && inst.time_constant()) {
    std::vector<std::vector<int>> adj(horizon);
    for (int k = 0; k < horizon; ++k) {
      for (int e : inst.edges_of_impression(arrivals[k])) adj[k].push_back(inst.edges()[e].ad);
    }
    return max_cardinality_matching(inst.n_ads(), adj).value;
  }
  std::vector<double> w(static_cast<std::size_t>(horizon) * inst.n_ads(), 0.0);
  for (int k = 0; k < horizon; ++k) {
    for (int e : inst.edges_of_impression(arrivals[k])) {
      w[static_cast<std::size_t>(k) * inst.n_ads() + inst.edges()[e].ad] = inst.edge_weight(e, horizon - k);
    }
  }
  return max_weight_matching(horizon, inst.n_ads(), w).value;
}

template <class F>
SimReport run_samples(long n_samples, const RngSpec& rng, bool parallel, F&& one) {
  check_samples(n_samples);
  std::vector<double> values(n_samples);
  if (parallel) {
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (long k = 0; k < n_samples; ++k) {
      Engine engine = make_engine(rng, static_cast<std::uint64_t>(k));
      values[k] = one(engine);
    }
  } else {
    for (long k = 0; k < n_samples; ++k) {
      Engine engine = make_engine(rng, static_cast<std::uint64_t>(k));
      values[k] = one(engine);
    }
  }
  const Stats s = summarize(values);
  SimReport r;
  r.mean = s.mean;
  r.stddev = s.stddev;
  r.samples = n_samples;
  r.seed = rng.master_seed;
  return r;
}

}  // namespace

const char* policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kDualPrice: return "dual_price";
    case PolicyKind::kGreedy: return "greedy";
    case PolicyKind::kRandomFeasible: return "random_feasible";
    case PolicyKind::kExactDp: return "exact_dp";
  }
  return "?";
}

PolicyKind parse_policy(const std::string& name) {
  for (PolicyKind k : {PolicyKind::kDualPrice, PolicyKind::kGreedy, PolicyKind::kRandomFeasible, PolicyKind::kExactDp}) {
    if (name == policy_name(k)) return k;
  }
  throw std::invalid_argument("unknown policy '" + name + "'");
}

PolicyContext PolicyContext::dual_price(const Instance& inst, const DualPrices& prices, TieBreak ties) {
  const int n = inst.n_ads();
  if (inst.n_impressions() != n || inst.horizon() != n) {
    throw std::invalid_argument("dual_price policy needs a normalized instance (n = m = T)");
  }
  if (prices.n != n || prices.lambda.size() != static_cast<std::size_t>(n) * n || prices.mu.n_ads() != n ||
      prices.mu.n_impressions() != n || prices.mu.horizon() != n) {
    throw std::invalid_argument("dual_price policy: prices do not match the instance size");
  }
  PolicyContext ctx;
  ctx.kind_ = PolicyKind::kDualPrice;
  ctx.ties_ = ties;
  ctx.n_ = n;
  ctx.prices_ = prices.ad_prices();
  return ctx;
}

PolicyContext PolicyContext::greedy() { return {}; }

PolicyContext PolicyContext::random_feasible() {
  PolicyContext ctx;
  ctx.kind_ = PolicyKind::kRandomFeasible;
  return ctx;
}

PolicyContext PolicyContext::exact_dp(const Instance& inst, const DpOptions& options) {
  PolicyContext ctx;
  ctx.kind_ = PolicyKind::kExactDp;
  ctx.n_ = inst.n_ads();
  ctx.exact_ = std::make_shared<const ExactPolicy>(solve_dp(inst, options).policy);
  return ctx;
}

Action PolicyContext::decide(const Instance& inst, int stage, int impression, std::span<const std::uint8_t> available,
                             Engine* rng) const {
  if (available.size() != static_cast<std::size_t>(inst.n_ads())) {
    throw std::invalid_argument("decide: availability vector has the wrong length");
  }
  switch (kind_) {
    case PolicyKind::kDualPrice: {
      if (inst.n_ads() != n_) throw std::invalid_argument("decide: instance does not match the prices");
      Action best;
      double best_score = 0.0;
      const double* p = prices_.data() + static_cast<std::size_t>(stage - 1) * n_;
      if (ties_ == TieBreak::kUniform) {
        if (rng == nullptr) throw std::invalid_argument("uniform tie-breaking needs an engine");
        std::vector<std::pair<double, int>> scored;
        for (int e : inst.edges_of_impression(impression)) {
          const int j = inst.edges()[e].ad;
          if (available[j]) scored.emplace_back(inst.edge_weight(e, stage) - p[j], j);
        }
        for (const auto& [score, j] : scored) best_score = std::max(best_score, score);
        if (best_score <= 0.0) return best;
        const double cut = best_score - 1e-9 * std::max(1.0, best_score);
        std::vector<int> top;
        for (const auto& [score, j] : scored) {
          if (score >= cut) top.push_back(j);
        }
        if (top.size() == 1) return Action::match(top[0]);
        std::uniform_int_distribution<std::size_t> pick(0, top.size() - 1);
        return Action::match(top[pick(*rng)]);
      }
      for (int e : inst.edges_of_impression(impression)) {
        const int j = inst.edges()[e].ad;
        if (!available[j]) continue;
        const double score = inst.edge_weight(e, stage) - p[j];
        if (score > best_score) {
          best_score = score;
          best = Action::match(j);
        }
      }
      return best;
    }
    case PolicyKind::kGreedy: {
      Action best;
      double best_w = 0.0;
      for (int e : inst.edges_of_impression(impression)) {
        const int j = inst.edges()[e].ad;
        const double w = inst.edge_weight(e, stage);
        if (available[j] && w > best_w) {
          best_w = w;
          best = Action::match(j);
        }
      }
      return best;
    }
    case PolicyKind::kRandomFeasible: {
      if (rng == nullptr) throw std::invalid_argument("random_feasible policy needs an engine");
      std::vector<int> options;
      for (int e : inst.edges_of_impression(impression)) {
        const int j = inst.edges()[e].ad;
        if (available[j] && inst.edge_weight(e, stage) > 0.0) options.push_back(j);
      }
      if (options.empty()) return Action::discard();
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      return Action::match(options[pick(*rng)]);
    }
    case PolicyKind::kExactDp: {
      if (inst.n_ads() != n_) throw std::invalid_argument("decide: instance does not match the DP policy");
      AdMask mask = 0;
      for (int j = 0; j < n_; ++j) {
        if (available[j]) mask |= AdMask{1} << j;
      }
      return exact_->action(stage, impression, mask);
    }
  }
  throw std::invalid_argument("decide: unknown policy kind");
}

PolicyFn PolicyContext::as_policy_fn(const Instance& inst) const {
  if (kind_ == PolicyKind::kRandomFeasible || (kind_ == PolicyKind::kDualPrice && ties_ == TieBreak::kUniform)) {
    throw std::invalid_argument(std::string(policy_name(kind_)) + " with random choices is not a deterministic policy");
  }
  const int m = inst.n_ads();
  if (m > 32) throw CapacityError("policy adapter uses 32-bit ad sets", 32);
  return [this, &inst, m](int stage, int impression, AdMask s) {
    std::vector<std::uint8_t> avail(m);
    for (int j = 0; j < m; ++j) avail[j] = contains(s, j) ? 1 : 0;
    return decide(inst, stage, impression, avail);
  };
}

std::vector<int> draw_arrivals(const Instance& inst, Engine& engine) {
  std::uniform_int_distribution<int> type(0, inst.n_impressions() - 1);
  std::vector<int> out(inst.horizon());
  for (int& i : out) i = type(engine);
  return out;
}

SimReport simulate(const Instance& inst, const PolicyContext& ctx, long n_samples, const RngSpec& rng) {
  SimReport r = run_samples(n_samples, rng, true, [&](Engine& e) { return run_policy(inst, ctx, e); });
  r.policy = policy_name(ctx.kind());
  r.instance_label = inst.label();
  return r;
}

SimReport simulate_serial(const Instance& inst, const PolicyContext& ctx, long n_samples, const RngSpec& rng) {
  SimReport r = run_samples(n_samples, rng, false, [&](Engine& e) { return run_policy(inst, ctx, e); });
  r.policy = policy_name(ctx.kind());
  r.instance_label = inst.label();
  return r;
}

SimReport offline_matching(const Instance& inst, long n_samples, const RngSpec& rng) {
  SimReport r = run_samples(n_samples, rng, true, [&](Engine& e) { return hindsight(inst, e); });
  r.policy = "offline";
  r.instance_label = inst.label();
  return r;
}

SimReport offline_matching_serial(const Instance& inst, long n_samples, const RngSpec& rng) {
  SimReport r = run_samples(n_samples, rng, false, [&](Engine& e) { return hindsight(inst, e); });
  r.policy = "offline";
  r.instance_label = inst.label();
  return r;
}

std::string format_sim_report(const SimReport& report) {
  nlohmann::ordered_json j;
  j["mean"] = report.mean;
  j["stddev"] = report.stddev;
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["policy"] = report.policy;
  j["instance_label"] = report.instance_label;
  return j.dump(2);
}

SimReport parse_sim_report(const std::string& text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    SimReport r;
    r.mean = j.at("mean").get<double>();
    r.stddev = j.at("stddev").get<double>();
    r.samples = j.at("samples").get<long>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.policy = j.at("policy").get<std::string>();
    r.instance_label = j.at("instance_label").get<std::string>();
    if (r.samples < 1 || r.stddev < 0.0) throw ParseError("sim report: samples must be >= 1 and stddev >= 0");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("sim report: ") + e.what());
  }
}

}  // namespace obm
