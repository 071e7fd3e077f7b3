#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tmac/core/error.hpp"
#include "tmac/experiments/experiments.hpp"

using namespace tmac;
using namespace tmac::experiments;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(BoundRow, HandValues) {
  const double a = std::pow(std::cos(M_PI / 8), 2);
  const BoundRow r0 = bound_row(0.0, a, 1000);
  EXPECT_NEAR(r0.k, (1 + a) / (2 * a), 1e-15);
  EXPECT_EQ(r0.z, 1.0);
  EXPECT_EQ(r0.eta, 0.0);
  EXPECT_EQ(r0.noise_factor, 1.0);
  EXPECT_NEAR(r0.decay, 1.0858, 5e-5);
  const BoundRow r5 = bound_row(0.5, a, 1000);
  EXPECT_NEAR(r5.k, 1.0429, 5e-5);
  EXPECT_NEAR(r5.z, 1.0 / 3, 1e-15);
  EXPECT_NEAR(r5.decay, 1.0141, 5e-5);
  EXPECT_EQ(r5.f, 333u);
  EXPECT_NEAR(r5.noise_factor, std::pow(1 - 2 * r5.eta * 1000 / 667, 333), 1e-12);
  EXPECT_FALSE(r5.vacuous);
  EXPECT_TRUE(bound_row(0.9999, a, 1000).vacuous);
  EXPECT_THROW(bound_row(1.0, a, 10), Error);
  EXPECT_THROW(bound_row(-0.1, a, 10), Error);
}

TEST(BoundRow, SolverAlpha) { EXPECT_NEAR(solver_alpha(), std::pow(std::cos(M_PI / 8), 2), 1e-5); }

TEST(Report, ChecksAndSerialization) {
  Report r;
  r.experiment = "x";
  r.config = {{"experiment", "x"}, {"seed", 3}};
  r.columns = {"a", "b"};
  r.rows = {{1, 0.5}, {"s", 1e-12}};
  r.check("one", "a == 1", 1, true);
  EXPECT_TRUE(r.all_pass());
  r.check("two", "b < 0", 0.5, false);
  EXPECT_FALSE(r.all_pass());
  r.wall_seconds = 12.5;
  const auto j = to_json(r);
  EXPECT_EQ(j["thresholds"].size(), 2u);
  EXPECT_FALSE(j.contains("wall_seconds"));
  const std::string csv = to_csv(r);
  EXPECT_EQ(csv.rfind("# ", 0), 0u);
  EXPECT_NE(csv.find("\na,b\n1,0.5\ns,1e-12\n"), std::string::npos);
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0 / 3), "0.3333333333");
}

TEST(Report, WriteByExtension) {
  Report r;
  r.experiment = "x";
  r.columns = {"a"};
  r.rows = {{1}};
  const auto dir = std::filesystem::temp_directory_path();
  const std::string csv = (dir / "tmac_report_test.csv").string(), json = (dir / "tmac_report_test.json").string();
  write_report(r, csv);
  write_report(r, json);
  EXPECT_EQ(slurp(csv), to_csv(r));
  EXPECT_EQ(nlohmann::ordered_json::parse(slurp(json)), to_json(r));
  std::filesystem::remove(csv);
  std::filesystem::remove(json);
}

TEST(Experiments, Dispatch) {
  EXPECT_EQ(experiment_names().size(), 6u);
  ExperimentConfig cfg;
  cfg.experiment = "nope";
  EXPECT_THROW(run_experiment(cfg), Error);
  cfg.experiment = "forge-sim";
  cfg.adversaries = {"nobody"};
  try {
    run_experiment(cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownAdversary);
  }
  cfg.experiment = "sdp-value";
  cfg.adversaries.clear();
  cfg.m = 3;
  EXPECT_THROW(run_experiment(cfg), Error);
}

TEST(Experiments, ConfigIsEchoed) {
  ExperimentConfig cfg;
  cfg.experiment = "noise-sweep";
  cfg.seed = 9;
  cfg.trials = 20;
  cfg.lambda = 500;
  cfg.grid = {0.0, 0.3};
  const Report r = run_experiment(cfg);
  EXPECT_EQ(r.config["seed"], 9);
  EXPECT_EQ(r.config["trials"], 20);
  EXPECT_EQ(r.config["lambda"], 500);
  EXPECT_EQ(r.config["grid"].size(), 2u);
  EXPECT_EQ(r.config["noise_map"], "Y");
}

TEST(Experiments, NoiseHelpersSplitStreams) {
  const bb84::NoiseSpec n{0.12, bb84::NoiseMap::PauliY};
  const auto a = ctmac_noise_acceptance(1000, 0.07, n, 50, Rng(1));
  const auto b = ctmac_noise_acceptance(1000, 0.07, n, 50, Rng(1));
  EXPECT_EQ(a.hits, b.hits);
  const auto full = lifts::full_ctmac({16, 64, 64, 0.07});
  EXPECT_EQ(scheme_noise_acceptance(*full, 32, {}, 10, Rng(2)).hits, 10u);
}
