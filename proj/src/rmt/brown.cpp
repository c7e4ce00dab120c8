#include "geodlab/rmt/brown.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "geodlab/error.hpp"
#include "geodlab/rmt/parallel.hpp"
#include "geodlab/rmt/unitary.hpp"

namespace geodlab::rmt {

double brown_radial_cdf(int k, double r) {
  if (k < 2) throw ArgumentError("brown_radial_cdf: k must be >= 2");
  if (r <= 0.0) return 0.0;
  const double kk = static_cast<double>(k);
  if (r >= std::sqrt(kk)) return 1.0;
  return (kk - 1.0) * r * r / (kk * kk - r * r);
}

double brown_mean_log_target(int k) {
  if (k < 2) throw ArgumentError("brown_mean_log_target: k must be >= 2");
  const double kk = static_cast<double>(k);
  return 0.5 * (std::log(kk) + (kk - 1.0) * std::log((kk - 1.0) / kk));
}

BrownSample brown_sum_experiment(int k, int n, int trials, std::uint64_t master_seed,
                                 unsigned workers) {
  if (k < 2) throw ArgumentError("brown_sum_experiment: k must be >= 2");
  if (n < 2) throw ArgumentError("brown_sum_experiment: n must be >= 2");
  if (trials < 1) throw ArgumentError("brown_sum_experiment: trials must be >= 1");
  const std::string tag = "brown/k=" + std::to_string(k) + "/n=" + std::to_string(n);
  std::vector<std::vector<double>> radii(trials);
  std::vector<double> mean_logs(trials);
  parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t t) {
    auto tuple = sample_rep(k, n, RngStream::for_trial(master_seed, tag, t));
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& u : tuple.matrices()) s += u.matrix();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(s, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw NumericError("brown_sum_experiment: eigensolver failed");
    double acc = 0.0;
    radii[t].reserve(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double r = std::abs(es.eigenvalues()(i));
      radii[t].push_back(r);
      acc += std::log(r);
    }
    mean_logs[t] = acc / n;
  });
  BrownSample out;
  for (auto& r : radii) out.radii.insert(out.radii.end(), r.begin(), r.end());
  std::sort(out.radii.begin(), out.radii.end());
  out.trial_mean_logs = mean_logs;
  double acc = 0.0;
  for (double v : mean_logs) acc += v;
  out.mean_log = acc / trials;
  return out;
}

}  // namespace geodlab::rmt
