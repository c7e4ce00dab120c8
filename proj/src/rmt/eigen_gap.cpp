#include "geodlab/rmt/eigen_gap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "geodlab/error.hpp"
#include "geodlab/repr/characters.hpp"

namespace geodlab::rmt {

namespace {

void check_length(const repr::Signature& lambda, const UnitaryMatrix& u) {
  if (lambda.size() != u.n()) {
    throw ArgumentError("signature length " + std::to_string(lambda.size()) +
                        " does not match matrix dimension " + std::to_string(u.n()));
  }
}

// <w, theta> reduced to [-pi, pi).
double reduced_angle(std::span<const int> w, const std::vector<double>& theta) {
  double a = 0.0;
  for (std::size_t j = 0; j < theta.size(); ++j) a += w[j] * theta[j];
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a >= std::numbers::pi) a -= two_pi;
  if (a < -std::numbers::pi) a += two_pi;
  return a;
}

}  // namespace

GapToOne min_gap_to_one(const repr::Signature& lambda, const UnitaryMatrix& u) {
  check_length(lambda, u);
  auto spectrum = repr::weight_spectrum(lambda, lambda.size());
  const auto theta = eig_phases(u);
  GapToOne result{std::numeric_limits<double>::infinity(), false};
  for (std::size_t i = 0; i < spectrum->size(); ++i) {
    auto w = spectrum->weight(i);
    if (std::all_of(w.begin(), w.end(), [](int v) { return v == 0; })) {
      result.forced_one = true;
      continue;
    }
    const double a = reduced_angle(w, theta);
    result.gap = std::min(result.gap, 2.0 * std::abs(std::sin(0.5 * a)));
  }
  return result;
}

std::uint64_t cusp_multiplicity(const repr::Signature& lambda, const UnitaryMatrix& u) {
  check_length(lambda, u);
  auto spectrum = repr::weight_spectrum(lambda, lambda.size());
  const auto theta = eig_phases(u);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < spectrum->size(); ++i) {
    if (std::abs(reduced_angle(spectrum->weight(i), theta)) <= kCuspPhaseTolerance) {
      count += spectrum->multiplicity(i);
    }
  }
  return count;
}

}  // namespace geodlab::rmt
