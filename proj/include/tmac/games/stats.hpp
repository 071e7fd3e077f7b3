#pragma once

#include <cstdint>
#include <vector>

namespace tmac::games {

inline constexpr double kZ99 = 2.5758293035489004;

struct Estimate {
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  double rate = 0;
  double lo = 0;  // Wilson score interval
  double hi = 0;

  double sigma() const;  // binomial standard error at the point estimate
};

Estimate wilson(std::uint64_t hits, std::uint64_t trials, double z = kZ99);

/// P[Bin(n, p) <= k]
double binomial_cdf(std::uint64_t k, std::uint64_t n, double p);

/// Upper-tail p-value of Pearson's chi-square for observed counts vs expected probabilities.
double chi_square_pvalue(const std::vector<std::uint64_t>& observed, const std::vector<double>& probs);

/// Acceptance mass of a uniformly random signature against CTMAC^eta:
/// each coordinate is a checked mismatch with probability 1/4.
double random_signature_acceptance(std::uint64_t lambda, double eta);

}  // namespace tmac::games
