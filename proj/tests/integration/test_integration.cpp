#include <gtest/gtest.h>

#include "tmac/experiments/experiments.hpp"

using namespace tmac::experiments;

namespace {

Report run(const std::string& name, std::uint64_t seed = 1) {
  ExperimentConfig cfg;
  cfg.experiment = name;
  cfg.seed = seed;
  return run_experiment(cfg);
}

void expect_all_pass(const Report& r) {
  ASSERT_FALSE(r.thresholds.empty()) << r.experiment;
  for (const auto& t : r.thresholds) EXPECT_TRUE(t.pass) << r.experiment << ": " << t.name << " observed " << t.observed;
}

}  // namespace

TEST(Experiment, NoiseSweepDefaults) {
  const Report r = run("noise-sweep");
  expect_all_pass(r);
  EXPECT_EQ(r.rows.size(), 10u);
  EXPECT_EQ(r.rows[0][2].get<double>(), 1.0);
}

TEST(Experiment, ForgeSimDefaults) { expect_all_pass(run("forge-sim")); }

TEST(Experiment, SdpValueDefaults) {
  const Report r = run("sdp-value");
  expect_all_pass(r);
  EXPECT_EQ(r.rows.size(), 4u);
}

TEST(Experiment, BoundTableDefaults) { expect_all_pass(run("bound-table")); }
TEST(Experiment, MoneyDemoDefaults) { expect_all_pass(run("money-demo")); }
TEST(Experiment, OtmDemoDefaults) { expect_all_pass(run("otm-demo")); }

TEST(Experiment, SeedChangesStochasticReports) {
  ExperimentConfig cfg;
  cfg.experiment = "forge-sim";
  cfg.adversaries = {"measure-then-perturb"};
  cfg.trials = 2000;
  cfg.seed = 1;
  const auto a = to_json(run_experiment(cfg)).dump();
  cfg.seed = 2;
  EXPECT_NE(a, to_json(run_experiment(cfg)).dump());
}

TEST(Experiment, CsvIsByteIdentical) {
  ExperimentConfig cfg;
  cfg.experiment = "noise-sweep";
  cfg.trials = 50;
  cfg.seed = 5;
  EXPECT_EQ(to_csv(run_experiment(cfg)), to_csv(run_experiment(cfg)));
}
