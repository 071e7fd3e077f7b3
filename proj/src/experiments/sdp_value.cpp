#include <cmath>
#include <mutex>

#include "tmac/core/error.hpp"
#include "tmac/experiments/experiments.hpp"
#include "tmac/sdp/dump.hpp"

namespace tmac::experiments {

double solver_alpha() {
  static std::once_flag once;
  static double alpha = 0;
  std::call_once(once, [] { alpha = sdp::solve_sdp(sdp::build_weak_del_sdp(1)).value; });
  return alpha;
}

Report cmd_sdp_value(const ExperimentConfig& cfg) {
  std::vector<int> ms = {0, 1};
  std::vector<int> lambdas = {1, 2};
  if (cfg.m) {
    if (*cfg.m != 0 && *cfg.m != 1) fail(Errc::InvalidArgument, "m must be 0 or 1");
    ms = {*cfg.m};
  }
  if (cfg.lambda) {
    if (*cfg.lambda != 1 && *cfg.lambda != 2) fail(Errc::InvalidArgument, "sdp-value supports lambda 1 or 2");
    lambdas = {static_cast<int>(*cfg.lambda)};
  }
  const sdp::SolverOptions opt;

  Report r;
  r.experiment = "sdp-value";
  r.config = {{"experiment", r.experiment}, {"seed", cfg.seed}, {"m", ms}, {"lambda", lambdas},
              {"tol", opt.tol}, {"max_iterations", opt.max_iterations}};
  r.columns = {"m", "lambda", "value", "dual_value", "dual_slack", "gap", "certified", "target"};

  const double alpha = std::pow(std::cos(M_PI / 8), 2);
  for (int m : ms) {
    const sdp::SdpProblem p = sdp::build_weak_del_sdp(m);
    const sdp::SdpSolution sol = sdp::solve_sdp(p, opt);
    const sdp::CertificateReport cert = sdp::check_dual_certificate(p, sol.Y, 1e-4);
    const std::string tag = "m=" + std::to_string(m);
    nlohmann::ordered_json res;
    res["dump"] = sdp::dump(p, sol);
    for (int lam : lambdas) {
      if (lam == 1) {
        r.rows.push_back({m, 1, sol.value, sol.dual_value, sol.dual_slack, sol.gap, cert.bound, alpha});
        r.check(tag + " value", "|value - 0.853553| <= 1e-3", sol.value, std::abs(sol.value - 0.853553) <= 1e-3);
        r.check(tag + " dual slack", "slack >= -1e-4", sol.dual_slack, sol.dual_slack >= -1e-4);
        r.check(tag + " certified bound", "bound <= 0.853553 + 1e-3", cert.bound, cert.bound <= 0.853553 + 1e-3);
        res["lambda1"] = {{"value", sol.value}, {"dual_value", sol.dual_value}, {"dual_slack", sol.dual_slack},
                          {"gap", sol.gap}, {"certified", cert.bound}, {"cos2_pi_8", alpha},
                          {"difference", sol.value - alpha}};
      } else {
        const sdp::TensorReport t = sdp::tensor_power_check(p, sol, 2);
        const double target = alpha * alpha;
        r.rows.push_back({m, 2, t.objective, t.dual_value, t.dual_slack, std::abs(t.dual_value - t.objective),
                          t.certified, target});
        r.check(tag + " tensored certificate", "|certified - alpha^2| <= 2e-3", t.certified,
                std::abs(t.certified - target) <= 2e-3);
        r.check(tag + " tensored primal residual", "residual <= 1e-6", t.primal_residual, t.primal_residual <= 1e-6);
        res["lambda2"] = sdp::to_json(t);
      }
    }
    r.results[tag] = res;
  }
  return r;
}

}  // namespace tmac::experiments
