#pragma once

#include "tmac/experiments/report.hpp"
#include "tmac/lifts/lifts.hpp"

namespace tmac::experiments {

Report cmd_noise_sweep(const ExperimentConfig& cfg);
Report cmd_forge_sim(const ExperimentConfig& cfg);
Report cmd_sdp_value(const ExperimentConfig& cfg);
Report cmd_bound_table(const ExperimentConfig& cfg);
Report cmd_money_demo(const ExperimentConfig& cfg);
Report cmd_otm_demo(const ExperimentConfig& cfg);

/// Dispatch on cfg.experiment; InvalidArgument for unknown names.
Report run_experiment(const ExperimentConfig& cfg);
std::vector<std::string> experiment_names();

// Building blocks shared with the tests ------------------------------------

/// Sign-after-noise acceptance of CTMAC^eta; trial i uses stream split(i) of `stream`.
games::Estimate ctmac_noise_acceptance(std::size_t lambda, double eta, const bb84::NoiseSpec& noise,
                                       std::uint64_t trials, const Rng& stream);
games::Estimate scheme_noise_acceptance(const lifts::TmacScheme& scheme, std::size_t doc_bits,
                                        const bb84::NoiseSpec& noise, std::uint64_t trials, const Rng& stream);

/// Win rate of a deletion adversary in WEAK-DEL-IND against E_m.
games::Estimate weak_del_rate(const std::string& adversary, bool m, std::size_t lambda, std::uint64_t trials,
                              const Rng& stream);

struct BoundRow {
  double eps = 0, eta = 0, k = 0, z = 0, decay = 0;
  bool vacuous = false;
  std::size_t f = 0;            // floor(z * lambda)
  double noise_factor = 0;      // (1 - 2 eta lambda / (lambda - f))^f
};

/// k = ((1+a) - e(1-a)) / (2a), z = (1-e)/(1+e), eta = e(1-a)/2, decay k^z.
BoundRow bound_row(double eps, double alpha, std::size_t lambda);

/// Value of the lambda = 1 game, computed by the SDP solver (m = 1).
double solver_alpha();

}  // namespace tmac::experiments
