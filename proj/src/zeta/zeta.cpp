#include "geodlab/zeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geodlab/error.hpp"
#include "geodlab/geodesics/holonomy.hpp"
#include "geodlab/repr/characters.hpp"

namespace geodlab::zeta {

namespace {

void check_half_plane(Complex s) {
  if (!(s.real() > 1.0)) {
    throw ArgumentError("Re s must exceed 1 (got " + std::to_string(s.real()) + ")");
  }
}

}  // namespace

ClassCharacters::ClassCharacters(const GeodesicTable& table, const rmt::UnitaryTuple& chi,
                                 const repr::Signature& lambda, unsigned workers)
    : table_(&table), lambda_(lambda) {
  if (lambda.size() != chi.n()) {
    throw ArgumentError("signature " + lambda.to_string() + " does not match U(" +
                        std::to_string(chi.n()) + ")");
  }
  dim_ = repr::dim_irrep(lambda, lambda.size());
  phases_ = geodesics::holonomy_phase_table(table, chi, workers);
  traces_.reserve(phases_.size());
  for (const auto& p : phases_) traces_.push_back(repr::schur_eval(lambda, p));
}

std::vector<Complex> ClassCharacters::rep_eigenvalues(std::size_t i) const {
  const int n = lambda_.size();
  auto spectrum = repr::weight_spectrum(lambda_, n);
  const auto& theta = phases_[i];
  std::vector<Complex> out;
  out.reserve(dim_);
  for (std::size_t j = 0; j < spectrum->size(); ++j) {
    auto w = spectrum->weight(j);
    double angle = 0.0;
    for (int t = 0; t < n; ++t) angle += w[t] * theta[t];
    const Complex alpha = std::polar(1.0, angle);
    for (std::uint64_t m = 0; m < spectrum->multiplicity(j); ++m) out.push_back(alpha);
  }
  return out;
}

std::size_t ClassCharacters::classes_up_to(double x) const {
  if (std::isnan(x)) throw ArgumentError("cutoff x is NaN");
  const double limit = std::exp(table_->tstar);
  if (x > limit * (1.0 + 1e-12)) {
    throw CompletenessError("cutoff x = " + std::to_string(x) + " exceeds e^{T*} = " +
                            std::to_string(limit) + " of the table (L = " +
                            std::to_string(table_->max_word_len) + ")");
  }
  const auto& cls = table_->classes;
  auto it = std::upper_bound(cls.begin(), cls.end(), x, [](double v, const auto& c) {
    return v < c.norm;
  });
  return static_cast<std::size_t>(it - cls.begin());
}

Complex dirichlet_series_annulus(const ClassCharacters& data, Complex s, double x1, double x2) {
  check_half_plane(s);
  const std::size_t lo = x1 <= 0.0 ? 0 : data.classes_up_to(x1);
  const std::size_t hi = data.classes_up_to(x2);
  Complex sum = 0.0;
  for (std::size_t i = lo; i < hi; ++i) {
    const auto& c = data.table().classes[i];
    sum += c.lambda_weight * data.trace(i) * std::exp(-s * c.length);
  }
  return sum;
}

Complex dirichlet_series(const ClassCharacters& data, Complex s, double x) {
  return dirichlet_series_annulus(data, s, 0.0, x);
}

double dirichlet_tail_majorant(const ClassCharacters& data, double sigma, double x1, double x2) {
  const std::size_t lo = x1 <= 0.0 ? 0 : data.classes_up_to(x1);
  const std::size_t hi = data.classes_up_to(x2);
  double sum = 0.0;
  for (std::size_t i = lo; i < hi; ++i) {
    const auto& c = data.table().classes[i];
    sum += c.lambda_weight * std::exp(-sigma * c.length);
  }
  return static_cast<double>(data.dim()) * sum;
}

Complex log_selberg_zeta_partial(const ClassCharacters& data, Complex s, int k_max, double x) {
  check_half_plane(s);
  if (k_max < 0) throw ArgumentError("k_max must be >= 0");
  const std::size_t hi = data.classes_up_to(x);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < hi; ++i) {
    const auto& c = data.table().classes[i];
    if (!c.primitive) continue;
    const auto alphas = data.rep_eigenvalues(i);
    for (int k = 0; k <= k_max; ++k) {
      const Complex z = std::exp(-(static_cast<double>(k) + s) * c.length);
      for (const Complex& a : alphas) sum += std::log(1.0 - a * z);
    }
  }
  return sum;
}

Complex selberg_zeta_partial(const ClassCharacters& data, Complex s, int k_max, double x) {
  return std::exp(log_selberg_zeta_partial(data, s, k_max, x));
}

double zeta_truncation_bound(const ClassCharacters& data, double sigma, int k_max, double x) {
  if (!(sigma > 1.0)) throw ArgumentError("sigma must exceed 1");
  const std::size_t hi = data.classes_up_to(x);
  const double log_x = std::log(x);
  double bound = 0.0;
  for (std::size_t i = 0; i < hi; ++i) {
    const auto& c = data.table().classes[i];
    if (!c.primitive) continue;
    const double l0 = c.length;
    // First power of P_0 beyond the cutoff.
    const int m0 = static_cast<int>(std::floor(log_x / l0)) + 1;
    double term = std::exp(-m0 * sigma * l0) /
                  ((1.0 - std::exp(-m0 * l0)) * (1.0 - std::exp(-sigma * l0)));
    for (int m = 1; m < m0; ++m) {
      term += std::exp(-m * sigma * l0 - m * (k_max + 1) * l0) / (1.0 - std::exp(-m * l0));
    }
    bound += l0 * term;
  }
  return static_cast<double>(data.dim()) * bound;
}

Complex psi(const ClassCharacters& data, double x) {
  const std::size_t hi = data.classes_up_to(x);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < hi; ++i) sum += data.table().classes[i].lambda_weight * data.trace(i);
  return sum;
}

Complex psi1(const ClassCharacters& data, double x) {
  const std::size_t hi = data.classes_up_to(x);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < hi; ++i) {
    const auto& c = data.table().classes[i];
    sum += c.lambda_weight * data.trace(i) * (x - c.norm);
  }
  return sum;
}

Complex dirichlet_series(const GeodesicTable& table, const rmt::UnitaryTuple& chi,
                         const repr::Signature& lambda, Complex s, double x) {
  return dirichlet_series(ClassCharacters(table, chi, lambda), s, x);
}

Complex selberg_zeta_partial(const GeodesicTable& table, const rmt::UnitaryTuple& chi,
                             const repr::Signature& lambda, Complex s, int k_max, double x) {
  return selberg_zeta_partial(ClassCharacters(table, chi, lambda), s, k_max, x);
}

Complex psi(const GeodesicTable& table, const rmt::UnitaryTuple& chi,
            const repr::Signature& lambda, double x) {
  return psi(ClassCharacters(table, chi, lambda), x);
}

Complex psi1(const GeodesicTable& table, const rmt::UnitaryTuple& chi,
             const repr::Signature& lambda, double x) {
  return psi1(ClassCharacters(table, chi, lambda), x);
}

}  // namespace geodlab::zeta
