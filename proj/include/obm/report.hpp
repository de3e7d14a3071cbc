#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "obm/instance.hpp"
#include "obm/policy_sim.hpp"

namespace obm {

enum class BoundKind { kStaticFull, kDynamic, kDynamicJ2, kProbJ2Only };
const char* bound_name(BoundKind kind);
BoundKind parse_bound(const std::string& name);

struct ExperimentConfig {
  std::set<BoundKind> bounds;
  std::set<PolicyKind> policies;  // dual_price, greedy, random_feasible
  bool offline = false;           // expected hindsight matching
  long samples = 20000;
  std::uint64_t seed = 1;
  int dp_cap = 16;                // exact DP when n <= dp_cap
  bool symmetrize = false;        // rotation-averaged prices for the dual-price policy
  bool random_ties = false;       // dual-price policy picks uniformly among equal best scores
};

// One instance's numbers. Every map is keyed by bound or policy name.
struct ReportRow {
  std::string label;
  int n = 0;
  int edges = 0;
  std::map<std::string, double> bounds;
  std::map<std::string, double> bound_seconds;
  std::map<std::string, SimReport> policies;
  std::optional<SimReport> offline;
  std::optional<double> dp_value;
  double seconds = 0.0;
};

// Normalizes, then computes what the config asks for. The dual-price policy
// takes its prices from the one-ad LP, solving it if no bound asked for it.
ReportRow run_experiment(const Instance& inst, const ExperimentConfig& config);

// Instances run concurrently on worker_count() threads, rows in input order.
// on_done is called once per finished row, never concurrently.
std::vector<ReportRow> run_batch(const std::vector<Instance>& instances, const ExperimentConfig& config,
                                 const std::function<void(const ReportRow&)>& on_done = {});

// Combines rows of the same instance (e.g. from separate bound and policy runs).
ReportRow merge_rows(const ReportRow& a, const ReportRow& b);

// DP when present, otherwise the offline mean; nullopt if neither.
std::optional<double> benchmark_value(const ReportRow& row);
const char* benchmark_name(const ReportRow& row);

// Value / benchmark for every bound, policy mean, offline mean and DP.
std::map<std::string, double> ratios(const ReportRow& row);

// Ordering checks: policy means <= DP <= dynamic <= static_full, offline >= DP,
// with Monte Carlo slack of 4 standard errors and LP slack 1e-6.
std::vector<std::string> sandwich_violations(const ReportRow& row);

struct SummaryCell {
  double geo_mean = 0.0;
  double stddev = 0.0;  // sample standard deviation of the ratios
  int count = 0;
};

// Instance class = label up to its last '-'.
std::string instance_class(const std::string& label);

// class -> column -> cell
std::map<std::string, std::map<std::string, SummaryCell>> summarize(const std::vector<ReportRow>& rows);

// Erdos rubrics: small (n=10, p=0.25), dense (100, 0.10), sparse (100, 0.025).
// Labels are "<rubric>-NN"; instance k uses stream rubric_index * 1000 + k.
std::vector<Instance> rubric_instances(const std::string& rubric, int count, std::uint64_t seed);

// Wall-clock fields are left out when with_timing is false, so that
// rerunning from the same files and seeds reproduces the text exactly.
std::string format_row(const ReportRow& row, bool with_timing = true);
ReportRow parse_row(const std::string& text);

// Fixed columns, no timing; see README for the list.
std::string rows_to_csv(const std::vector<ReportRow>& rows);
// label, seconds per bound, total seconds.
std::string rows_timing_csv(const std::vector<ReportRow>& rows);
// Plain-text table: one line per bound/policy, one column per class.
std::string format_summary(const std::vector<ReportRow>& rows);

}  // namespace obm
