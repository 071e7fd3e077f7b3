#include <algorithm>

#include "tmac/core/error.hpp"
#include "tmac/experiments/experiments.hpp"

namespace tmac::experiments {

games::Estimate ctmac_noise_acceptance(std::size_t lambda, double eta, const bb84::NoiseSpec& noise,
                                       std::uint64_t trials, const Rng& stream) {
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng = stream.split(i);
    const ctmac::SecretKey k = ctmac::key_gen(lambda, rng);
    ctmac::Token t = ctmac::token_gen(k);
    bb84::apply_noise(t.qubits_mut(), noise, rng);
    const bool m = rng.bit();
    const BitString sigma = ctmac::sign(t, m, rng);
    hits += ctmac::accepts(k, m, sigma, eta);
  }
  return games::wilson(hits, trials);
}

games::Estimate scheme_noise_acceptance(const lifts::TmacScheme& scheme, std::size_t doc_bits,
                                        const bb84::NoiseSpec& noise, std::uint64_t trials, const Rng& stream) {
  std::uint64_t hits = 0;
  const lifts::Domain d = scheme.domain();
  const std::size_t bits = d.kind == lifts::Domain::Unrestricted ? doc_bits : d.length;
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng = stream.split(i);
    lifts::Key key = scheme.key_gen(rng);
    lifts::SchemeToken t = scheme.token_gen(key, rng);
    lifts::apply_noise(t, noise, rng);
    const lifts::Document m = BitString::random(bits, rng);
    const lifts::SchemeSignature sig = scheme.sign(t, m, rng);
    hits += scheme.verify(key, m, sig);
  }
  return games::wilson(hits, trials);
}

Report cmd_noise_sweep(const ExperimentConfig& cfg) {
  const std::size_t lambda = cfg.lambda.value_or(10000);
  const double eta = cfg.eta.value_or(0.07);
  const std::uint64_t trials = cfg.trials.value_or(1000);
  const std::size_t sub_lambda = cfg.sub_lambda.value_or(1024);
  const std::uint64_t full_trials = std::min<std::uint64_t>(trials, 100);
  const bb84::NoiseMap map = cfg.noise ? cfg.noise->map : bb84::NoiseMap::PauliY;
  std::vector<double> grid = cfg.grid;
  if (grid.empty()) grid = cfg.noise ? std::vector<double>{cfg.noise->p} : std::vector<double>{0, 0.05, 0.10, 0.14, 0.20};
  for (double p : grid)
    if (!(p >= 0 && p <= 1)) fail(Errc::InvalidArgument, "noise rates must lie in [0, 1]");

  Report r;
  r.experiment = "noise-sweep";
  r.config = {{"experiment", r.experiment}, {"seed", cfg.seed},        {"lambda", lambda},
              {"eta", eta},                 {"trials", trials},        {"noise_map", bb84::to_string(map)},
              {"grid", grid},               {"full_sub_lambda", sub_lambda}, {"full_trials", full_trials}};
  r.columns = {"scheme", "p", "accept_rate", "ci_lo", "ci_hi"};

  lifts::FullParams fp;
  fp.sub_lambda = sub_lambda;
  fp.eta = eta;
  const lifts::SchemePtr full = lifts::full_ctmac(fp);
  const Rng master(cfg.seed);
  std::vector<double> rates;
  for (std::size_t row = 0; row < grid.size(); ++row) {
    const bb84::NoiseSpec spec{grid[row], map};
    const auto e = ctmac_noise_acceptance(lambda, eta, spec, trials, master.split(2 * row));
    rates.push_back(e.rate);
    r.rows.push_back({"ctmac-eta", grid[row], e.rate, e.lo, e.hi});
  }
  for (std::size_t row = 0; row < grid.size(); ++row) {
    const bb84::NoiseSpec spec{grid[row], map};
    const auto e = scheme_noise_acceptance(*full, 64, spec, full_trials, master.split(2 * row + 1));
    r.rows.push_back({"full-ctmac", grid[row], e.rate, e.lo, e.hi});
  }

  bool monotone = true;
  for (std::size_t i = 1; i < rates.size(); ++i)
    if (grid[i] >= grid[i - 1] && rates[i] > rates[i - 1]) monotone = false;
  r.check("ctmac-eta monotone", "acceptance non-increasing in p", monotone ? 1 : 0, monotone);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] == 0) r.check("p=0 exact", "acceptance == 1.0 at p = 0", rates[i], rates[i] == 1.0);
    if (std::abs(grid[i] - 0.10) < 1e-12)
      r.check("accept at p=0.10", "acceptance >= 0.999 at p = 0.10", rates[i], rates[i] >= 0.999);
    if (std::abs(grid[i] - 0.20) < 1e-12)
      r.check("reject at p=0.20", "acceptance <= 0.001 at p = 0.20", rates[i], rates[i] <= 0.001);
  }
  return r;
}

}  // namespace tmac::experiments
