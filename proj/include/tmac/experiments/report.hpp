#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tmac/bb84/qubit.hpp"
#include "tmac/games/stats.hpp"

namespace tmac::experiments {

/// Command-line overrides; unset fields fall back to per-experiment defaults,
/// and the resolved values are echoed in every report.
struct ExperimentConfig {
  std::string experiment;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> trials;
  std::optional<std::size_t> lambda;
  std::optional<std::size_t> sub_lambda;
  std::optional<double> eta;
  std::optional<bb84::NoiseSpec> noise;
  std::optional<int> m;
  std::vector<double> grid;
  std::vector<std::string> adversaries;
  std::string out;
};

struct Threshold {
  std::string name;
  std::string rule;  // human-readable acceptance rule
  double observed = 0;
  bool pass = false;
};

struct Report {
  std::string experiment;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<std::string> columns;  // table form, used for CSV
  std::vector<std::vector<nlohmann::ordered_json>> rows;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<Threshold> thresholds;
  double wall_seconds = 0;  // not serialized: reports must be reproducible

  bool all_pass() const;
  void check(std::string name, std::string rule, double observed, bool pass);
};

nlohmann::ordered_json estimate_json(const games::Estimate& e);

nlohmann::ordered_json to_json(const Report& r);
/// Config and thresholds as leading '#' lines, then a header and the rows.
std::string to_csv(const Report& r);
/// ".csv" selects CSV, anything else JSON. Empty path writes JSON to stdout.
void write_report(const Report& r, const std::string& path);

std::string format_number(double v);

}  // namespace tmac::experiments
