#include <chrono>
#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "tmac/core/error.hpp"
#include "tmac/experiments/experiments.hpp"

int main(int argc, char** argv) {
  using namespace tmac;
  experiments::ExperimentConfig cfg;
  std::optional<std::uint64_t> trials;
  std::optional<std::size_t> lambda, sub_lambda;
  std::optional<double> eta;
  std::optional<int> m;
  std::string noise;

  CLI::App app{"tokenized MAC experiment runner"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "master seed");
  app.add_option("--trials", trials, "trial count");
  app.add_option("--lambda", lambda, "security parameter");
  app.add_option("--sub-lambda", sub_lambda, "qubits per document bit (full_ctmac)");
  app.add_option("--eta", eta, "noise threshold");
  app.add_option("--noise", noise, "noise channel as kind:p, e.g. Y:0.1");
  app.add_option("--out", cfg.out, "report path; .csv for CSV, otherwise JSON; default stdout");
  app.add_option("--grid", cfg.grid, "comma-separated grid (noise p or eps)")->delimiter(',');
  app.add_option("--adversary", cfg.adversaries, "adversary names")->delimiter(',');
  app.add_option("--m", m, "SDP instance (0 or 1)");
  for (const auto& name : experiments::experiment_names()) app.add_subcommand(name);

  CLI11_PARSE(app, argc, argv);
  cfg.experiment = app.get_subcommands().front()->get_name();
  cfg.trials = trials;
  cfg.lambda = lambda;
  cfg.sub_lambda = sub_lambda;
  cfg.eta = eta;
  cfg.m = m;

  try {
    if (!noise.empty()) cfg.noise = bb84::parse_noise(noise);
    const auto t0 = std::chrono::steady_clock::now();
    experiments::Report r = experiments::run_experiment(cfg);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    experiments::write_report(r, cfg.out);
    for (const auto& t : r.thresholds)
      std::fprintf(stderr, "%s %s: %s (observed %s)\n", t.pass ? "PASS" : "FAIL", t.name.c_str(), t.rule.c_str(),
                   experiments::format_number(t.observed).c_str());
    std::fprintf(stderr, "wall time %.2f s\n", r.wall_seconds);
    return r.all_pass() ? 0 : 1;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
