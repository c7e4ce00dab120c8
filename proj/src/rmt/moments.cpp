#include "geodlab/rmt/moments.hpp"

#include <cmath>
#include <numbers>

#include "geodlab/error.hpp"
#include "geodlab/repr/characters.hpp"
#include "geodlab/rmt/parallel.hpp"
#include "geodlab/rmt/unitary.hpp"

namespace geodlab::rmt {

MomentEstimate summarize(std::span<const Complex> values) {
  MomentEstimate est;
  est.trials = static_cast<std::int64_t>(values.size());
  if (values.empty()) return est;
  Complex sum = 0.0;
  for (const auto& v : values) sum += v;
  est.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return est;
  double ss = 0.0;
  for (const auto& v : values) ss += std::norm(v - est.mean);
  const double var = ss / static_cast<double>(values.size() - 1);
  est.stderr_ = std::sqrt(var / static_cast<double>(values.size()));
  return est;
}

MomentEstimate mc_class_expectation(const ClassFunction& f, int n, std::int64_t trials,
                                    std::uint64_t master_seed, std::string_view tag,
                                    unsigned workers) {
  if (trials < 2) throw ArgumentError("mc_class_expectation: trials must be >= 2");
  if (n < 1) throw ArgumentError("mc_class_expectation: n must be >= 1");
  std::vector<Complex> values(static_cast<std::size_t>(trials));
  parallel_for(values.size(), workers, [&](std::size_t i) {
    auto u = haar_unitary(n, RngStream::for_trial(master_seed, tag, i));
    values[i] = f(eig_phases(u));
  });
  return summarize(values);
}

std::vector<MomentEstimate> mc_class_expectations(std::span<const ClassFunction> fs, int n,
                                                  std::int64_t trials, std::uint64_t master_seed,
                                                  std::string_view tag, unsigned workers) {
  if (trials < 2) throw ArgumentError("mc_class_expectations: trials must be >= 2");
  if (n < 1) throw ArgumentError("mc_class_expectations: n must be >= 1");
  const std::size_t count = static_cast<std::size_t>(trials);
  std::vector<std::vector<Complex>> values(fs.size(), std::vector<Complex>(count));
  parallel_for(count, workers, [&](std::size_t i) {
    const auto phases = eig_phases(haar_unitary(n, RngStream::for_trial(master_seed, tag, i)));
    for (std::size_t f = 0; f < fs.size(); ++f) values[f][i] = fs[f](phases);
  });
  std::vector<MomentEstimate> out;
  for (const auto& v : values) out.push_back(summarize(v));
  return out;
}

Complex weyl_quadrature_expectation(const ClassFunction& f, int n, int grid) {
  if (n < 1) throw ArgumentError("weyl_quadrature_expectation: n must be >= 1");
  if (n > 3) {
    throw UnsupportedSizeError("weyl_quadrature_expectation supports n <= 3 (cost grows as grid^n)");
  }
  if (grid < 1) throw ArgumentError("weyl_quadrature_expectation: grid must be >= 1");
  const double h = 2.0 * std::numbers::pi / grid;
  std::vector<double> theta(n);
  std::vector<int> idx(n, 0);
  Complex sum = 0.0;
  double factorial = 1.0;
  for (int i = 2; i <= n; ++i) factorial *= i;
  while (true) {
    for (int i = 0; i < n; ++i) theta[i] = h * idx[i];
    double vandermonde = 1.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        vandermonde *= std::norm(std::polar(1.0, theta[i]) - std::polar(1.0, theta[j]));
      }
    }
    if (vandermonde != 0.0) sum += vandermonde * f(theta);
    int k = 0;
    while (k < n && ++idx[k] == grid) idx[k++] = 0;
    if (k == n) break;
  }
  return sum / (factorial * std::pow(static_cast<double>(grid), n));
}

ClassFunction trace_power_product(std::vector<int> a, std::vector<int> b) {
  if (a.size() != b.size()) throw ArgumentError("trace_power_product: length mismatch");
  return [a = std::move(a), b = std::move(b)](std::span<const double> phases) {
    Complex v = 1.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] == 0 && b[j] == 0) continue;
      const Complex p = repr::power_sum_eval(static_cast<int>(j + 1), phases);
      for (int t = 0; t < a[j]; ++t) v *= p;
      for (int t = 0; t < b[j]; ++t) v *= std::conj(p);
    }
    return v;
  };
}

}  // namespace geodlab::rmt
