#include <gtest/gtest.h>

#include <filesystem>

#include "obm/error.hpp"
#include "obm/exact_dp.hpp"
#include "obm/instance.hpp"

namespace obm {
namespace {

TEST(Instance, StaticWeightsAndIndices) {
  const std::vector<StaticWeight> w{{0, 1, 2.0}, {1, 0, 0.5}, {1, 1, 0.0}};
  const Instance inst = Instance::from_static(2, 2, 3, w);
  EXPECT_EQ(inst.edges().size(), 2u);
  EXPECT_DOUBLE_EQ(inst.weight(0, 1, 3), 2.0);
  EXPECT_DOUBLE_EQ(inst.weight(1, 1, 1), 0.0);
  EXPECT_EQ(inst.edge_index(0, 0), -1);
  EXPECT_EQ(inst.edges_of_ad(1).size(), 1u);
  EXPECT_FALSE(inst.binary_weights());
}

TEST(Instance, RejectsBadWeights) {
  const std::vector<StaticWeight> neg{{0, 0, -1.0}};
  EXPECT_THROW(Instance::from_static(1, 1, 1, neg), std::invalid_argument);
  const std::vector<StaticWeight> dup{{0, 0, 1.0}, {0, 0, 2.0}};
  EXPECT_THROW(Instance::from_static(1, 1, 1, dup), std::invalid_argument);
  const std::vector<TimeWeight> stage{{0, 0, 2, 1.0}};
  EXPECT_THROW(Instance::from_time(1, 1, 1, stage), std::invalid_argument);
  EXPECT_THROW(gen_regular(3, 4), std::invalid_argument);
  EXPECT_THROW(gen_erdos(3, 1.5, {}), std::invalid_argument);
}

TEST(Instance, RegularGraphShape) {
  const Instance inst = gen_regular(5, 2);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(inst.edges_of_impression(i).size(), 2u);
    EXPECT_DOUBLE_EQ(inst.weight(i, (i + 1) % 5, 1), 1.0);
    EXPECT_DOUBLE_EQ(inst.weight(i, (i + 2) % 5, 1), 0.0);
  }
  for (int j = 0; j < 5; ++j) EXPECT_EQ(inst.edges_of_ad(j).size(), 2u);
  EXPECT_TRUE(inst.binary_weights());
}

TEST(Instance, ErdosIsSeeded) {
  const Instance a = gen_erdos(10, 0.3, {5, 1});
  const Instance b = gen_erdos(10, 0.3, {5, 1});
  const Instance c = gen_erdos(10, 0.3, {5, 2});
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a == c);
  EXPECT_EQ(gen_erdos(6, 1.0, {1, 0}).edges().size(), 36u);
  EXPECT_TRUE(gen_erdos(6, 0.0, {1, 0}).edges().empty());
}

TEST(Instance, JsonRoundTrip) {
  const std::vector<TimeWeight> w{{0, 0, 1, 1.5}, {1, 0, 2, 0.25}};
  const Instance inst = Instance::from_time(2, 1, 2, w, "tiny");
  const Instance back = parse_instance(format_instance(inst));
  EXPECT_EQ(inst, back);
  const auto path = std::filesystem::temp_directory_path() / "obm_instance_roundtrip.json";
  write_instance(gen_regular(4, 2), path);
  EXPECT_EQ(read_instance(path), gen_regular(4, 2));
  std::filesystem::remove(path);
}

TEST(Instance, ParseErrorsNameTheField) {
  try {
    parse_instance(R"({"n_impressions":2,"n_ads":2,"horizon":2,"static_weights":[[0,1,1.0],[0,5,1.0]]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("static_weights[1][1]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_instance("{"), ParseError);
  EXPECT_THROW(parse_instance(R"({"n_impressions":1,"n_ads":1,"horizon":1})"), ParseError);
  EXPECT_THROW(read_instance("/nonexistent/instance.json"), ParseError);
}

TEST(Normalize, PadsAdsAndStages) {
  const std::vector<StaticWeight> w{{0, 0, 1.0}, {1, 1, 2.0}, {2, 0, 1.0}};
  const NormalizedInstance norm = normalize(Instance::from_static(3, 2, 2, w));
  EXPECT_EQ(norm.n(), 3);
  EXPECT_EQ(norm.instance().n_impressions(), 3);
  EXPECT_EQ(norm.instance().horizon(), 3);
  EXPECT_EQ(norm.copy_factor(), 1);
  EXPECT_DOUBLE_EQ(norm.instance().weight(1, 1, 2), 2.0);
  EXPECT_DOUBLE_EQ(norm.instance().weight(1, 1, 3), 0.0);
}

TEST(Normalize, ReplicatesImpressionTypes) {
  // 2 types, 3 ads, 3 stages: two copies of each type, then a fourth ad.
  const std::vector<StaticWeight> w{{0, 0, 1.0}, {0, 2, 3.0}, {1, 1, 2.0}};
  const NormalizedInstance norm = normalize(Instance::from_static(2, 3, 3, w));
  EXPECT_EQ(norm.n(), 4);
  EXPECT_EQ(norm.copy_factor(), 2);
  EXPECT_DOUBLE_EQ(norm.instance().weight(2, 2, 1), 3.0);
  EXPECT_DOUBLE_EQ(norm.instance().weight(3, 1, 1), 2.0);
  EXPECT_DOUBLE_EQ(norm.instance().weight(3, 3, 1), 0.0);
}

TEST(Normalize, KeepsOptimalValue) {
  const std::vector<StaticWeight> w{{0, 0, 1.0}, {0, 2, 3.0}, {1, 1, 2.0}, {1, 2, 0.5}};
  const Instance raw = Instance::from_static(2, 3, 3, w);
  const double before = solve_dp(raw).optimal_value;
  const double after = solve_dp(normalize(raw).instance()).optimal_value;
  EXPECT_NEAR(before, after, 1e-12);

  const std::vector<TimeWeight> tw{{0, 0, 1, 1.0}, {1, 0, 2, 4.0}, {2, 1, 1, 0.5}};
  const Instance timed = Instance::from_time(3, 2, 2, tw);
  EXPECT_NEAR(solve_dp(timed).optimal_value, solve_dp(normalize(timed).instance()).optimal_value, 1e-12);
}

}  // namespace
}  // namespace obm
