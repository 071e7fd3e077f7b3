#include "tmac/games/stats.hpp"

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "tmac/core/error.hpp"

namespace tmac::games {

double Estimate::sigma() const {
  if (trials == 0) return 0;
  return std::sqrt(rate * (1 - rate) / static_cast<double>(trials));
}

Estimate wilson(std::uint64_t hits, std::uint64_t trials, double z) {
  Estimate e;
  e.hits = hits;
  e.trials = trials;
  if (trials == 0) return e;
  const double n = static_cast<double>(trials), p = static_cast<double>(hits) / n;
  e.rate = p;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  e.lo = std::max(0.0, centre - half);
  e.hi = std::min(1.0, centre + half);
  return e;
}

double binomial_cdf(std::uint64_t k, std::uint64_t n, double p) {
  if (k >= n) return 1.0;
  boost::math::binomial_distribution<double> d(static_cast<double>(n), p);
  return boost::math::cdf(d, static_cast<double>(k));
}

double chi_square_pvalue(const std::vector<std::uint64_t>& observed, const std::vector<double>& probs) {
  if (observed.size() != probs.size() || observed.size() < 2) fail(Errc::LengthMismatch, "chi-square needs matching bins");
  double total = 0;
  for (auto o : observed) total += static_cast<double>(o);
  double stat = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = total * probs[i];
    const double d = static_cast<double>(observed[i]) - e;
    stat += d * d / e;
  }
  boost::math::chi_squared_distribution<double> chi(static_cast<double>(observed.size() - 1));
  return boost::math::cdf(boost::math::complement(chi, stat));
}

double random_signature_acceptance(std::uint64_t lambda, double eta) {
  const double bound = eta * static_cast<double>(lambda);
  return binomial_cdf(static_cast<std::uint64_t>(std::floor(bound)), lambda, 0.25);
}

}  // namespace tmac::games
