#include <cmath>

#include "tmac/core/error.hpp"
#include "tmac/experiments/experiments.hpp"

namespace tmac::experiments {

BoundRow bound_row(double eps, double alpha, std::size_t lambda) {
  if (!(eps >= 0 && eps < 1)) fail(Errc::InvalidArgument, "eps must lie in [0, 1)");
  BoundRow b;
  b.eps = eps;
  b.eta = eps * (1 - alpha) / 2;
  b.k = ((1 + alpha) - eps * (1 - alpha)) / (2 * alpha);
  b.z = (1 - eps) / (1 + eps);
  b.decay = std::pow(b.k, b.z);
  b.vacuous = b.decay - 1 < 1e-4;
  b.f = static_cast<std::size_t>(std::floor(b.z * static_cast<double>(lambda)));
  const double l = static_cast<double>(lambda), f = static_cast<double>(b.f);
  b.noise_factor = b.eta == 0 ? 1.0 : std::pow(1 - 2 * b.eta * l / (l - f), f);
  return b;
}

Report cmd_bound_table(const ExperimentConfig& cfg) {
  const std::vector<double> grid =
      cfg.grid.empty() ? std::vector<double>{0, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.9999} : cfg.grid;
  const std::size_t lambda = cfg.lambda.value_or(1000);
  const double alpha = solver_alpha();

  Report r;
  r.experiment = "bound-table";
  r.config = {{"experiment", r.experiment}, {"seed", cfg.seed}, {"grid", grid}, {"lambda", lambda}, {"alpha", alpha}};
  r.columns = {"eps", "eta", "k", "z", "decay", "vacuous", "f", "noise_factor"};

  // Hand-evaluated at alpha = cos^2(pi/8), compared after rounding to 4 places.
  auto near4 = [](double x, double h) { return std::abs(x - h) < 5e-5; };
  for (double e : grid) {
    const BoundRow b = bound_row(e, alpha, lambda);
    r.rows.push_back({b.eps, b.eta, b.k, b.z, b.decay, b.vacuous, b.f, b.noise_factor});
    if (e == 0) {
      r.check("eps=0 k", "k = 1.0858 (4 d.p.)", b.k, near4(b.k, 1.0858));
      r.check("eps=0 decay", "k^z = 1.0858 (4 d.p.)", b.decay, near4(b.decay, 1.0858));
    } else if (e == 0.5) {
      r.check("eps=0.5 k", "k = 1.0429 (4 d.p.)", b.k, near4(b.k, 1.0429));
      r.check("eps=0.5 z", "z = 0.3333 (4 d.p.)", b.z, near4(b.z, 1.0 / 3));
      r.check("eps=0.5 decay", "k^z = 1.0141 (4 d.p.)", b.decay, near4(b.decay, 1.0141));
    } else if (e >= 0.999) {
      r.check("eps=" + format_number(e) + " vacuous", "decay - 1 < 1e-4", b.decay - 1, b.vacuous);
    }
  }
  return r;
}

}  // namespace tmac::experiments
