#include "geodlab/zeta/decay.hpp"

#include <cmath>
#include <string>

#include "geodlab/error.hpp"
#include "geodlab/format.hpp"

namespace geodlab::zeta {

CharSumSeries char_sum_series(const ClassCharacters& data, std::span<const double> grid) {
  const auto& table = data.table();
  if (grid.empty()) throw ArgumentError("empty T grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw ArgumentError("T grid must be strictly ascending");
  }
  CharSumSeries out;
  out.n = data.n();
  out.lambda.assign(data.lambda().entries().begin(), data.lambda().entries().end());
  const double dim = static_cast<double>(data.dim());
  Complex running = 0.0;
  std::size_t next = 0;
  for (double T : grid) {
    const std::int64_t count = geodesics::count_geodesics(table, T);
    if (count == 0) {
      const double shortest = table.classes.empty() ? table.tstar : table.classes.front().length;
      throw ArgumentError("no geodesics of length <= " + fmt15(T) +
                          "; the minimal achievable cutoff is " + fmt15(shortest));
    }
    for (; next < static_cast<std::size_t>(count); ++next) running += data.trace(next) / dim;
    out.grid.push_back(T);
    out.counts.push_back(count);
    out.sums.push_back(running / static_cast<double>(count));
  }
  return out;
}

std::vector<double> decay_grid(const GeodesicTable& table, std::int64_t min_count, double step) {
  if (min_count < 1 || !(step > 0.0)) throw ArgumentError("decay_grid: bad count or step");
  if (static_cast<std::int64_t>(table.classes.size()) < min_count) {
    throw ArgumentError("table holds " + std::to_string(table.classes.size()) +
                        " classes below T* = " + fmt15(table.tstar) + ", fewer than " +
                        std::to_string(min_count) + "; increase L");
  }
  const double start = table.classes[static_cast<std::size_t>(min_count - 1)].length;
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double T = start + step * i;
    if (T > table.tstar) break;
    grid.push_back(T);
  }
  return grid;
}

DecayFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ArgumentError("fit_line: x and y differ in length");
  const std::size_t n = x.size();
  if (n < 2) throw ArgumentError("fit_line needs at least 2 points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw ArgumentError("fit_line: x values are all equal");
  DecayFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    fit.residual += r * r;
  }
  fit.points = static_cast<int>(n);
  return fit;
}

DecayFit decay_fit(const CharSumSeries& series) {
  std::vector<double> x, y;
  for (std::size_t i = 0; i < series.grid.size(); ++i) {
    const double a = std::abs(series.sums[i]);
    if (a > 0.0) {
      x.push_back(series.grid[i]);
      y.push_back(std::log(a));
    }
  }
  if (x.size() < 3) {
    throw ArgumentError("decay_fit needs at least 3 grid points with S != 0 (have " +
                        std::to_string(x.size()) + ")");
  }
  return fit_line(x, y);
}

}  // namespace geodlab::zeta
