#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "geodlab/zeta/zeta.hpp"

namespace geodlab::zeta {

struct CharSumSeries {
  std::vector<double> grid;
  std::vector<std::int64_t> counts;
  std::vector<Complex> sums;
  int n = 0;
  std::vector<int> lambda;
  std::uint64_t seed = 0;
};

/// S(T) = (1/pi_X(T)) sum_{length <= T} chi_lambda(chi(P)) / dim V_lambda
/// on an ascending grid. Throws CompletenessError above T* and
/// ArgumentError if pi_X vanishes at the first grid point.
CharSumSeries char_sum_series(const ClassCharacters& data, std::span<const double> grid);

/// T_0, T_0 + step, ... <= T*, where T_0 is the first length at which
/// pi_X reaches min_count.
std::vector<double> decay_grid(const GeodesicTable& table, std::int64_t min_count = 50,
                               double step = 0.5);

struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  ///< residual sum of squares
  int points = 0;
};

/// Ordinary least squares y = intercept + slope x; needs >= 2 points with
/// distinct x.
DecayFit fit_line(std::span<const double> x, std::span<const double> y);

/// Fit of log|S(T)| against T over grid points with S != 0 (at least 3).
DecayFit decay_fit(const CharSumSeries& series);

}  // namespace geodlab::zeta
