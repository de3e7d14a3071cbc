#include <gtest/gtest.h>

#include <cmath>

#include "obm/error.hpp"
#include "obm/exact_dp.hpp"
#include "obm/parallel.hpp"
#include "obm/report.hpp"

namespace obm {
namespace {

SimReport sim(double mean, double sd, long samples) {
  SimReport r;
  r.mean = mean;
  r.stddev = sd;
  r.samples = samples;
  return r;
}

ReportRow row_with(const std::string& label, double dp, double dynamic, double greedy) {
  ReportRow row;
  row.label = label;
  row.n = 4;
  row.dp_value = dp;
  row.bounds["dynamic"] = dynamic;
  row.policies["greedy"] = sim(greedy, 0.0, 100);
  return row;
}

TEST(Report, NamesRoundTrip) {
  for (BoundKind b : {BoundKind::kStaticFull, BoundKind::kDynamic, BoundKind::kDynamicJ2, BoundKind::kProbJ2Only}) {
    EXPECT_EQ(parse_bound(bound_name(b)), b);
  }
  EXPECT_THROW(parse_bound("lp"), std::invalid_argument);
}

TEST(Report, BenchmarkPrefersDp) {
  ReportRow row;
  EXPECT_FALSE(benchmark_value(row));
  EXPECT_TRUE(ratios(row).empty());
  row.offline = sim(5.0, 1.0, 10);
  EXPECT_DOUBLE_EQ(*benchmark_value(row), 5.0);
  EXPECT_STREQ(benchmark_name(row), "offline");
  row.dp_value = 4.0;
  EXPECT_DOUBLE_EQ(*benchmark_value(row), 4.0);
  EXPECT_STREQ(benchmark_name(row), "dp");
  row.bounds["dynamic"] = 4.4;
  const auto r = ratios(row);
  EXPECT_DOUBLE_EQ(r.at("dynamic"), 1.1);
  EXPECT_DOUBLE_EQ(r.at("offline"), 1.25);
  EXPECT_DOUBLE_EQ(r.at("dp"), 1.0);
}

TEST(Report, SummaryIsGeometricMeanPerClass) {
  // dynamic ratios 1.1 and 1.4 in class "a"; one row in class "b-x"
  const std::vector<ReportRow> rows{row_with("a-01", 2.0, 2.2, 1.0), row_with("a-02", 1.0, 1.4, 1.0),
                                    row_with("b-x-01", 3.0, 3.3, 3.0)};
  const auto cells = summarize(rows);
  ASSERT_EQ(cells.size(), 2u);
  const SummaryCell& a = cells.at("a").at("dynamic");
  EXPECT_EQ(a.count, 2);
  EXPECT_NEAR(a.geo_mean, std::sqrt(1.1 * 1.4), 1e-12);
  EXPECT_NEAR(a.stddev, std::sqrt(2 * 0.15 * 0.15), 1e-12);
  EXPECT_NEAR(cells.at("a").at("greedy").geo_mean, std::sqrt(0.5 * 1.0), 1e-12);
  EXPECT_EQ(cells.at("b-x").at("dynamic").count, 1);
  EXPECT_EQ(cells.at("b-x").at("dynamic").stddev, 0.0);
  EXPECT_EQ(instance_class("nodash"), "nodash");
  const std::string text = format_summary(rows);
  EXPECT_NE(text.find("dynamic"), std::string::npos);
  EXPECT_NE(text.find("b-x"), std::string::npos);
}

TEST(Report, SandwichFlagsEachBrokenOrdering) {
  ReportRow ok = row_with("r-1", 2.0, 2.2, 1.9);
  ok.bounds["static_full"] = 2.5;
  ok.offline = sim(2.1, 1.0, 100);
  EXPECT_TRUE(sandwich_violations(ok).empty());

  ReportRow bad = ok;
  bad.bounds["dynamic"] = 2.6;  // above static
  EXPECT_EQ(sandwich_violations(bad).size(), 1u);
  bad = ok;
  bad.bounds["dynamic"] = 1.9;  // below dp
  EXPECT_EQ(sandwich_violations(bad).size(), 1u);
  bad = ok;
  bad.policies["greedy"] = sim(2.5, 0.1, 10000);  // beats dp and dynamic
  EXPECT_EQ(sandwich_violations(bad).size(), 2u);
  bad = ok;
  bad.offline = sim(1.5, 0.1, 10000);
  EXPECT_EQ(sandwich_violations(bad).size(), 1u);

  // Monte Carlo noise within 4 standard errors is tolerated.
  ReportRow noisy = ok;
  noisy.policies["greedy"] = sim(2.0 + 3.0 * 1.0 / std::sqrt(100.0), 1.0, 100);
  EXPECT_TRUE(sandwich_violations(noisy).empty());
}

TEST(Report, MergeKeepsBothSides) {
  ReportRow a = row_with("x-1", 2.0, 2.2, 1.9);
  ReportRow b;
  b.label = "x-1";
  b.n = 4;
  b.bounds["static_full"] = 2.5;
  b.offline = sim(2.1, 1.0, 100);
  const ReportRow m = merge_rows(a, b);
  EXPECT_EQ(m.bounds.size(), 2u);
  ASSERT_TRUE(m.offline);
  ASSERT_TRUE(m.dp_value);
  EXPECT_EQ(m.policies.count("greedy"), 1u);
  b.label = "x-2";
  EXPECT_ANY_THROW(merge_rows(a, b));
}

TEST(Report, RowJsonRoundTrip) {
  ReportRow row = row_with("y-7", 2.0, 2.2, 1.9);
  row.edges = 9;
  row.bound_seconds["dynamic"] = 0.25;
  row.offline = sim(2.1, 0.5, 100);
  row.seconds = 1.5;
  const ReportRow back = parse_row(format_row(row));
  EXPECT_EQ(back.label, row.label);
  EXPECT_EQ(back.edges, 9);
  EXPECT_EQ(back.bounds, row.bounds);
  EXPECT_EQ(back.bound_seconds, row.bound_seconds);
  EXPECT_DOUBLE_EQ(back.policies.at("greedy").mean, 1.9);
  EXPECT_DOUBLE_EQ(back.offline->stddev, 0.5);
  EXPECT_DOUBLE_EQ(*back.dp_value, 2.0);
  EXPECT_THROW(parse_row("{\"label\": 3}"), ParseError);
  EXPECT_THROW(parse_row("not json"), ParseError);
}

TEST(Report, CsvHasFixedColumns) {
  ReportRow row = row_with("z-1", 2.0, 2.2, 1.9);
  const std::string csv = rows_to_csv({row});
  const std::string header = csv.substr(0, csv.find('\n'));
  EXPECT_EQ(header.rfind("label,class,n,edges,benchmark,benchmark_value,static_full,dynamic,", 0), 0u);
  int commas_header = 0, commas_line = 0;
  for (char ch : header) commas_header += ch == ',';
  const std::string line = csv.substr(header.size() + 1);
  for (char ch : line) commas_line += ch == ',';
  EXPECT_EQ(commas_header, commas_line);
  EXPECT_NE(line.find("z-1,z,4,"), std::string::npos);
}

TEST(Report, RunExperimentOnSmallGraph) {
  const Instance inst = gen_regular(6, 2).with_label("ring-1");
  ExperimentConfig cfg;
  cfg.bounds = {BoundKind::kStaticFull, BoundKind::kDynamic};
  cfg.policies = {PolicyKind::kDualPrice, PolicyKind::kGreedy};
  cfg.offline = true;
  cfg.samples = 4000;
  const ReportRow row = run_experiment(inst, cfg);
  ASSERT_TRUE(row.dp_value);
  EXPECT_NEAR(*row.dp_value, solve_dp(inst).optimal_value, 1e-12);
  EXPECT_TRUE(sandwich_violations(row).empty());
  EXPECT_EQ(row.policies.size(), 2u);
  EXPECT_EQ(row.edges, 12);

  // the dual-price policy still works when no bound was requested
  cfg.bounds.clear();
  const ReportRow only = run_experiment(inst, cfg);
  EXPECT_TRUE(only.bounds.empty());
  EXPECT_DOUBLE_EQ(only.policies.at("dual_price").mean, row.policies.at("dual_price").mean);
}

TEST(Report, BatchIsReproducibleAndOrdered) {
  std::vector<Instance> batch = rubric_instances("small", 4, 9);
  batch.push_back(gen_regular(12, 3).with_label("ring-2"));
  ExperimentConfig cfg;
  cfg.bounds = {BoundKind::kStaticFull, BoundKind::kDynamic};
  cfg.policies = {PolicyKind::kDualPrice, PolicyKind::kGreedy};
  cfg.offline = true;
  cfg.samples = 1000;
  std::vector<ReportRow> one_by_one;
  for (const Instance& inst : batch) one_by_one.push_back(run_experiment(inst, cfg));
  for (int w : {1, 3}) {
    set_worker_count(w);
    int callbacks = 0;
    const std::vector<ReportRow> rows = run_batch(batch, cfg, [&](const ReportRow&) { ++callbacks; });
    EXPECT_EQ(callbacks, 5);
    ASSERT_EQ(rows.size(), batch.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      EXPECT_EQ(format_row(rows[k], false), format_row(one_by_one[k], false)) << k;
    }
    EXPECT_EQ(rows_to_csv(rows), rows_to_csv(one_by_one));
  }
  set_worker_count(0);
  EXPECT_EQ(format_row(one_by_one[0], false).find("seconds"), std::string::npos);
  EXPECT_NE(rows_timing_csv(one_by_one).find("small-01,"), std::string::npos);
}

TEST(Report, BatchRethrowsInstanceErrors) {
  const std::vector<TimeWeight> ws{{0, 0, 1, 1.0}, {0, 0, 2, 0.5}};
  const std::vector<Instance> batch{gen_regular(4, 2).with_label("ok-1"), Instance::from_time(2, 2, 2, ws, "tv-1")};
  ExperimentConfig cfg;
  cfg.bounds = {BoundKind::kStaticFull};
  EXPECT_THROW(run_batch(batch, cfg), UnsupportedModelError);
}

TEST(Report, RubricsAreDeterministic) {
  const std::vector<Instance> a = rubric_instances("sparse", 2, 4);
  const std::vector<Instance> b = rubric_instances("sparse", 2, 4);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], b[0]);
  EXPECT_EQ(a[1].label(), "sparse-02");
  EXPECT_EQ(a[0].n_ads(), 100);
  EXPECT_FALSE(a[0] == a[1]);
  EXPECT_THROW(rubric_instances("huge", 1, 1), std::invalid_argument);
}

TEST(Report, StaticRejectsStageWeights) {
  const std::vector<TimeWeight> ws{{0, 0, 1, 1.0}, {0, 0, 2, 0.5}};
  const Instance inst = Instance::from_time(2, 2, 2, ws, "tv-1");
  ExperimentConfig cfg;
  cfg.bounds = {BoundKind::kStaticFull};
  EXPECT_THROW(run_experiment(inst, cfg), UnsupportedModelError);
  cfg.bounds = {BoundKind::kDynamic};
  EXPECT_NO_THROW(run_experiment(inst, cfg));
}

}  // namespace
}  // namespace obm
