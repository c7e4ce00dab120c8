#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "geodlab/rmt/rng.hpp"

namespace geodlab::rmt {

using Complex = std::complex<double>;

/// A class function on U(n), given as a function of the eigenphases.
using ClassFunction = std::function<Complex(std::span<const double> phases)>;

struct MomentEstimate {
  Complex mean;
  double stderr_ = 0.0;  ///< sample standard deviation / sqrt(trials)
  std::int64_t trials = 0;
};

/// Mean and standard error of a complex sample (sample deviation uses
/// the |x - mean|^2 estimator with N - 1 degrees of freedom).
MomentEstimate summarize(std::span<const Complex> values);

/// Monte Carlo estimate of E f(U), U Haar on U(n). Trial i draws from
/// RngStream::for_trial(master_seed, tag, i); `workers` = 0 picks the
/// hardware concurrency. The result does not depend on `workers`.
MomentEstimate mc_class_expectation(const ClassFunction& f, int n, std::int64_t trials,
                                    std::uint64_t master_seed,
                                    std::string_view tag = "mc_class_expectation",
                                    unsigned workers = 0);

/// Several class functions evaluated on one shared Haar sample; entry f of
/// the result equals mc_class_expectation(fs[f], ...) with the same tag.
std::vector<MomentEstimate> mc_class_expectations(std::span<const ClassFunction> fs, int n,
                                                  std::int64_t trials, std::uint64_t master_seed,
                                                  std::string_view tag = "mc_class_expectation",
                                                  unsigned workers = 0);

/// Weyl integration: (1/n!) * mean over a uniform grid on the torus of
/// f(theta) prod_{i<j} |e^{i theta_i} - e^{i theta_j}|^2. Exact for
/// trigonometric polynomials of degree below the grid resolution.
/// Supports n <= 3.
Complex weyl_quadrature_expectation(const ClassFunction& f, int n, int grid_points_per_dim);

/// prod_j tr(U^j)^{a_j} conj(tr(U^j))^{b_j} as a class function.
ClassFunction trace_power_product(std::vector<int> a, std::vector<int> b);

}  // namespace geodlab::rmt
