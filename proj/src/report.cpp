#include "obm/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "obm/dynamic_relax.hpp"
#include "obm/error.hpp"
#include "obm/exact_dp.hpp"
#include "obm/parallel.hpp"
#include "obm/static_relax.hpp"

namespace obm {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::vector<std::string>& bound_order() {
  static const std::vector<std::string> v{"static_full", "dynamic", "dynamic_j2", "prob_j2_only"};
  return v;
}

const std::vector<std::string>& policy_order() {
  static const std::vector<std::string> v{"dual_price", "greedy", "random_feasible", "exact_dp"};
  return v;
}

double mc_slack(const SimReport& r) { return 4.0 * r.stddev / std::sqrt(static_cast<double>(r.samples)) + 1e-9; }

double lp_slack(double v) { return 1e-6 * std::max(1.0, std::abs(v)); }

nlohmann::ordered_json sim_json(const SimReport& r) { return nlohmann::ordered_json::parse(format_sim_report(r)); }

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

const char* bound_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::kStaticFull: return "static_full";
    case BoundKind::kDynamic: return "dynamic";
    case BoundKind::kDynamicJ2: return "dynamic_j2";
    case BoundKind::kProbJ2Only: return "prob_j2_only";
  }
  return "?";
}

BoundKind parse_bound(const std::string& name) {
  for (BoundKind k : {BoundKind::kStaticFull, BoundKind::kDynamic, BoundKind::kDynamicJ2, BoundKind::kProbJ2Only}) {
    if (name == bound_name(k)) return k;
  }
  throw std::invalid_argument("unknown bound '" + name + "'");
}

ReportRow run_experiment(const Instance& inst, const ExperimentConfig& config) {
  if (config.samples < 1) throw std::invalid_argument("samples must be >= 1");
  const auto t_all = Clock::now();
  const NormalizedInstance norm = normalize(inst);
  const Instance& w = norm.instance();
  ReportRow row;
  row.label = inst.label();
  row.n = norm.n();
  row.edges = static_cast<int>(w.edges().size());

  std::optional<BoundReport> one_ad;
  for (BoundKind b : config.bounds) {
    const auto t0 = Clock::now();
    double value = 0.0;
    switch (b) {
      case BoundKind::kStaticFull:
        if (!w.time_constant()) {
          throw UnsupportedModelError(inst.time_constant()
                                          ? "static_full needs stage-constant weights; normalizing " + inst.label() +
                                                " added stages"
                                          : "static_full needs stage-constant weights; " + inst.label() +
                                                " has stage-dependent weights");
        }
        value = solve_static_full(w).bound;
        break;
      case BoundKind::kDynamic:
        one_ad = solve_dynamic(w, false);
        value = one_ad->bound;
        break;
      case BoundKind::kDynamicJ2:
        value = solve_dynamic(w, true).bound;
        break;
      case BoundKind::kProbJ2Only:
        value = bound_prob_j2_only(w).bound;
        break;
    }
    row.bounds[bound_name(b)] = value;
    row.bound_seconds[bound_name(b)] = since(t0);
  }
  if (row.n <= config.dp_cap) {
    DpOptions opt;
    opt.cap = config.dp_cap;
    row.dp_value = solve_dp(w, opt).optimal_value;
  }

  const RngSpec rng{config.seed, 0};  // same arrivals for every policy and the offline benchmark
  for (PolicyKind p : config.policies) {
    std::optional<PolicyContext> ctx;
    switch (p) {
      case PolicyKind::kDualPrice: {
        if (!one_ad) one_ad = solve_dynamic(w, false);
        const DualPrices prices = config.symmetrize ? symmetrize_cyclic(w, one_ad->duals) : one_ad->duals;
        ctx = PolicyContext::dual_price(w, prices, config.random_ties ? TieBreak::kUniform : TieBreak::kLowestIndex);
        break;
      }
      case PolicyKind::kGreedy: ctx = PolicyContext::greedy(); break;
      case PolicyKind::kRandomFeasible: ctx = PolicyContext::random_feasible(); break;
      case PolicyKind::kExactDp: {
        DpOptions opt;
        opt.cap = config.dp_cap;
        ctx = PolicyContext::exact_dp(w, opt);
        break;
      }
    }
    SimReport r = simulate(w, *ctx, config.samples, rng);
    r.instance_label = row.label;
    row.policies[policy_name(p)] = r;
  }
  if (config.offline) {
    SimReport r = offline_matching(w, config.samples, rng);
    r.instance_label = row.label;
    row.offline = r;
  }
  row.seconds = since(t_all);
  return row;
}

ReportRow merge_rows(const ReportRow& a, const ReportRow& b) {
  if (a.label != b.label) throw std::invalid_argument("merge_rows: labels differ ('" + a.label + "', '" + b.label + "')");
  if (a.n != b.n) throw std::invalid_argument("merge_rows: sizes differ for '" + a.label + "'");
  ReportRow out = a;
  for (const auto& [k, v] : b.bounds) out.bounds[k] = v;
  for (const auto& [k, v] : b.bound_seconds) out.bound_seconds[k] = v;
  for (const auto& [k, v] : b.policies) out.policies[k] = v;
  if (b.offline) out.offline = b.offline;
  if (b.dp_value) out.dp_value = b.dp_value;
  out.edges = std::max(a.edges, b.edges);
  out.seconds = a.seconds + b.seconds;
  return out;
}

std::optional<double> benchmark_value(const ReportRow& row) {
  if (row.dp_value) return row.dp_value;
  if (row.offline) return row.offline->mean;
  return std::nullopt;
}

const char* benchmark_name(const ReportRow& row) {
  if (row.dp_value) return "dp";
  if (row.offline) return "offline";
  return "none";
}

std::map<std::string, double> ratios(const ReportRow& row) {
  std::map<std::string, double> out;
  const std::optional<double> bench = benchmark_value(row);
  if (!bench || *bench <= 0.0) return out;
  for (const auto& [k, v] : row.bounds) out[k] = v / *bench;
  for (const auto& [k, r] : row.policies) out[k] = r.mean / *bench;
  if (row.offline) out["offline"] = row.offline->mean / *bench;
  if (row.dp_value) out["dp"] = *row.dp_value / *bench;
  return out;
}

std::vector<std::string> sandwich_violations(const ReportRow& row) {
  std::vector<std::string> out;
  auto bound = [&](const char* k) -> std::optional<double> {
    auto it = row.bounds.find(k);
    return it == row.bounds.end() ? std::nullopt : std::optional<double>(it->second);
  };
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) out.push_back(row.label + ": " + what);
  };
  const auto st = bound("static_full");
  const auto dy = bound("dynamic");
  const auto j2 = bound("dynamic_j2");
  const auto pj = bound("prob_j2_only");
  if (dy && st) require(*dy <= *st + lp_slack(*st), "dynamic " + fixed(*dy) + " > static_full " + fixed(*st));
  if (j2 && dy) require(*j2 <= *dy + lp_slack(*dy), "dynamic_j2 " + fixed(*j2) + " > dynamic " + fixed(*dy));
  if (pj && j2) require(*pj >= *j2 - lp_slack(*j2), "prob_j2_only " + fixed(*pj) + " < dynamic_j2 " + fixed(*j2));
  if (row.dp_value) {
    const double dp = *row.dp_value;
    for (const auto& [k, v] : row.bounds) require(dp <= v + lp_slack(v), k + " " + fixed(v) + " < dp " + fixed(dp));
    for (const auto& [k, r] : row.policies) {
      require(r.mean <= dp + mc_slack(r), k + " mean " + fixed(r.mean) + " > dp " + fixed(dp));
    }
    if (row.offline) {
      require(row.offline->mean >= dp - mc_slack(*row.offline),
              "offline " + fixed(row.offline->mean) + " < dp " + fixed(dp));
    }
  }
  for (const auto& [k, r] : row.policies) {
    for (const auto& [b, v] : row.bounds) {
      require(r.mean <= v + lp_slack(v) + mc_slack(r), k + " mean " + fixed(r.mean) + " > " + b + " " + fixed(v));
    }
  }
  return out;
}

std::vector<Instance> rubric_instances(const std::string& rubric, int count, std::uint64_t seed) {
  struct Rubric {
    const char* name;
    int n;
    double p;
  };
  static constexpr Rubric kRubrics[] = {{"small", 10, 0.25}, {"dense", 100, 0.10}, {"sparse", 100, 0.025}};
  if (count < 0) throw std::invalid_argument("rubric count must be nonnegative");
  for (std::size_t r = 0; r < std::size(kRubrics); ++r) {
    if (rubric != kRubrics[r].name) continue;
    std::vector<Instance> out;
    for (int k = 1; k <= count; ++k) {
      char label[64];
      std::snprintf(label, sizeof label, "%s-%02d", kRubrics[r].name, k);
      const RngSpec rng{seed, r * 1000 + static_cast<std::uint64_t>(k)};
      out.push_back(gen_erdos(kRubrics[r].n, kRubrics[r].p, rng).with_label(label));
    }
    return out;
  }
  throw std::invalid_argument("unknown rubric '" + rubric + "' (small, dense, sparse)");
}

std::string instance_class(const std::string& label) {
  const auto pos = label.rfind('-');
  return pos == std::string::npos ? label : label.substr(0, pos);
}

std::map<std::string, std::map<std::string, SummaryCell>> summarize(const std::vector<ReportRow>& rows) {
  std::map<std::string, std::map<std::string, std::vector<double>>> acc;
  for (const ReportRow& row : rows) {
    for (const auto& [k, r] : ratios(row)) acc[instance_class(row.label)][k].push_back(r);
  }
  std::map<std::string, std::map<std::string, SummaryCell>> out;
  for (const auto& [cls, cols] : acc) {
    for (const auto& [k, v] : cols) {
      SummaryCell c;
      c.count = static_cast<int>(v.size());
      double logs = 0.0;
      double sum = 0.0;
      for (double r : v) {
        logs += std::log(r);
        sum += r;
      }
      c.geo_mean = std::exp(logs / c.count);
      if (c.count > 1) {
        const double mean = sum / c.count;
        double sq = 0.0;
        for (double r : v) sq += (r - mean) * (r - mean);
        c.stddev = std::sqrt(sq / (c.count - 1));
      }
      out[cls][k] = c;
    }
  }
  return out;
}

std::string format_row(const ReportRow& row, bool with_timing) {
  nlohmann::ordered_json j;
  j["label"] = row.label;
  j["n"] = row.n;
  j["edges"] = row.edges;
  j["bounds"] = row.bounds;
  if (with_timing) j["bound_seconds"] = row.bound_seconds;
  nlohmann::ordered_json pol = nlohmann::ordered_json::object();
  for (const auto& [k, r] : row.policies) pol[k] = sim_json(r);
  j["policies"] = pol;
  j["offline"] = row.offline ? sim_json(*row.offline) : nlohmann::ordered_json(nullptr);
  j["dp_value"] = row.dp_value ? nlohmann::ordered_json(*row.dp_value) : nlohmann::ordered_json(nullptr);
  j["benchmark"] = benchmark_name(row);
  j["ratios"] = ratios(row);
  if (with_timing) j["seconds"] = row.seconds;
  return j.dump(2);
}

ReportRow parse_row(const std::string& text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    ReportRow row;
    row.label = j.at("label").get<std::string>();
    row.n = j.at("n").get<int>();
    row.edges = j.value("edges", 0);
    row.bounds = j.at("bounds").get<std::map<std::string, double>>();
    if (j.contains("bound_seconds")) row.bound_seconds = j["bound_seconds"].get<std::map<std::string, double>>();
    for (const auto& [k, v] : j.at("policies").items()) row.policies[k] = parse_sim_report(v.dump());
    if (j.contains("offline") && !j["offline"].is_null()) row.offline = parse_sim_report(j["offline"].dump());
    if (j.contains("dp_value") && !j["dp_value"].is_null()) row.dp_value = j["dp_value"].get<double>();
    row.seconds = j.value("seconds", 0.0);
    return row;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report row: ") + e.what());
  }
}

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "label,class,n,edges,benchmark,benchmark_value";
  for (const std::string& b : bound_order()) out << ',' << b;
  out << ",dp,offline_mean,offline_std";
  for (const std::string& p : policy_order()) out << ',' << p << "_mean," << p << "_std";
  out << ",samples\n";
  for (const ReportRow& row : rows) {
    const std::optional<double> bench = benchmark_value(row);
    out << row.label << ',' << instance_class(row.label) << ',' << row.n << ',' << row.edges << ','
        << benchmark_name(row) << ',' << (bench ? fixed(*bench) : "");
    for (const std::string& b : bound_order()) {
      auto it = row.bounds.find(b);
      out << ',' << (it == row.bounds.end() ? "" : fixed(it->second));
    }
    out << ',' << (row.dp_value ? fixed(*row.dp_value) : "");
    out << ',' << (row.offline ? fixed(row.offline->mean) : "") << ',' << (row.offline ? fixed(row.offline->stddev) : "");
    long samples = row.offline ? row.offline->samples : 0;
    for (const std::string& p : policy_order()) {
      auto it = row.policies.find(p);
      if (it == row.policies.end()) {
        out << ",,";
      } else {
        out << ',' << fixed(it->second.mean) << ',' << fixed(it->second.stddev);
        samples = it->second.samples;
      }
    }
    out << ',' << samples << '\n';
  }
  return out.str();
}

std::string rows_timing_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "label";
  for (const std::string& b : bound_order()) out << ',' << b << "_seconds";
  out << ",total_seconds\n";
  for (const ReportRow& row : rows) {
    out << row.label;
    for (const std::string& b : bound_order()) {
      auto it = row.bound_seconds.find(b);
      out << ',' << (it == row.bound_seconds.end() ? "" : fixed(it->second));
    }
    out << ',' << fixed(row.seconds) << '\n';
  }
  return out.str();
}

std::vector<ReportRow> run_batch(const std::vector<Instance>& instances, const ExperimentConfig& config,
                                 const std::function<void(const ReportRow&)>& on_done) {
  std::vector<ReportRow> rows(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  const int count = static_cast<int>(instances.size());
  // Kernels inside each instance run on the calling thread when nested.
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, std::min(worker_count(), count)))
  for (int k = 0; k < count; ++k) {
    try {
      rows[k] = run_experiment(instances[k], config);
      if (on_done) {
#pragma omp critical(obm_batch_callback)
        on_done(rows[k]);
      }
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string format_summary(const std::vector<ReportRow>& rows) {
  const auto cells = summarize(rows);
  std::vector<std::string> order = bound_order();
  order.push_back("offline");
  order.push_back("dp");
  for (const std::string& p : policy_order()) order.push_back(p);
  std::ostringstream out;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-16s", "ratio");
  out << buf;
  for (const auto& [cls, _] : cells) {
    std::snprintf(buf, sizeof buf, " | %-21s", cls.c_str());
    out << buf;
  }
  out << '\n';
  for (const std::string& k : order) {
    bool any = false;
    for (const auto& [cls, cols] : cells) any = any || cols.count(k) > 0;
    if (!any) continue;
    std::snprintf(buf, sizeof buf, "%-16s", k.c_str());
    out << buf;
    for (const auto& [cls, cols] : cells) {
      auto it = cols.find(k);
      if (it == cols.end()) {
        std::snprintf(buf, sizeof buf, " | %-21s", "-");
      } else {
        std::snprintf(buf, sizeof buf, " | %.4f (%.4f) n=%-3d", it->second.geo_mean, it->second.stddev, it->second.count);
      }
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace obm
