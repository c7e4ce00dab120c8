#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "geodlab/geodesics/enumerate.hpp"
#include "geodlab/lab/config.hpp"
#include "geodlab/lab/report.hpp"
#include "geodlab/repr/signature.hpp"
#include "geodlab/zeta/decay.hpp"
#include "geodlab/zeta/zeta.hpp"

namespace geodlab::lab {

using Complex = std::complex<double>;

/// pi_X(T) T e^{-T}; the prime geodesic theorem predicts 1 as T grows.
double pgt_ratio(const geodesics::GeodesicTable& table, double T);

struct CharSumRun {
  zeta::CharSumSeries series;
  zeta::DecayFit fit;
  Complex s_at_tstar;
};

/// Normalized character sums for `samples` Haar rank-2 representations.
/// Sample i draws chi from RngStream::for_trial(seed, tag, i).
std::vector<CharSumRun> char_sum_runs(const geodesics::GeodesicTable& table, int n,
                                      const repr::Signature& lambda,
                                      std::span<const double> grid, int samples,
                                      std::uint64_t seed, std::string_view tag,
                                      unsigned workers = 0);

/// Relative deviations of Psi and Psi_1 at x for the trivial rank-n
/// representation from dim V_lambda times the rank-1 trivial values.
struct ScalingCheck {
  double psi_rel = 0.0;
  double psi1_rel = 0.0;
};
ScalingCheck psi_scaling_check(const geodesics::GeodesicTable& table,
                               const repr::Signature& lambda, double x);

struct ZetaPoint {
  double s = 0.0;
  Complex dlogz;  ///< central difference of log Z_partial
  Complex d;      ///< D_partial
  double diff = 0.0;
  double bound = 0.0;  ///< truncation tail bound
};

/// Central-difference step used for d/ds log Z.
inline constexpr double kZetaStep = 1e-4;
/// Slack added to the tail bound for the finite-difference error.
inline constexpr double kZetaSlack = 1e-6;

std::vector<ZetaPoint> zeta_consistency(const zeta::ClassCharacters& data,
                                        std::span<const double> s_points, int k_max, double x);

/// Cutoff just below e^{T*}: every class with N(P) < e^{T*} and all its
/// prime powers below the cutoff are in the table.
double zeta_cutoff(const geodesics::GeodesicTable& table);

/// Runs one experiment described by a resolved config (not `accept`).
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Writes <out_dir>/<experiment>.csv and <out_dir>/<experiment>.json.
void write_outputs(const ExperimentReport& report);

}  // namespace geodlab::lab
