#pragma once

#include <cstdint>
#include <vector>

namespace geodlab::rmt {

/// Radial CDF of the Brown measure of a free sum of k Haar unitaries:
/// F(r) = (k-1) r^2 / (k^2 - r^2) on [0, sqrt k], clamped outside.
double brown_radial_cdf(int k, double r);

/// (1/2) log(k ((k-1)/k)^(k-1)), the mean of log|z| under that measure.
double brown_mean_log_target(int k);

struct BrownSample {
  std::vector<double> radii;             ///< pooled |eigenvalue|, sorted
  std::vector<double> trial_mean_logs;   ///< (1/n) sum log|lambda_i| per trial
  double mean_log = 0.0;                 ///< average of trial_mean_logs
};

/// For each trial draw U_1..U_k Haar on U(n), form S = sum U_i, and compute
/// all eigenvalues of S with the general complex eigensolver.
BrownSample brown_sum_experiment(int k, int n, int trials, std::uint64_t master_seed,
                                 unsigned workers = 0);

}  // namespace geodlab::rmt
