#include "geodlab/repr/characters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "geodlab/error.hpp"

namespace geodlab::repr {

WeightSpectrum::WeightSpectrum(int n, std::vector<int> flat_weights,
                               std::vector<std::uint64_t> multiplicities)
    : n_(n), flat_(std::move(flat_weights)), mults_(std::move(multiplicities)) {
  if (flat_.size() != mults_.size() * static_cast<std::size_t>(n_)) {
    throw ArgumentError("WeightSpectrum: flat weight storage size mismatch");
  }
  for (auto m : mults_) total_ += m;
}

std::uint64_t WeightSpectrum::multiplicity_of(std::span<const int> w) const {
  if (static_cast<int>(w.size()) != n_) return 0;
  for (std::size_t i = 0; i < size(); ++i) {
    auto v = weight(i);
    if (std::equal(v.begin(), v.end(), w.begin())) return mults_[i];
  }
  return 0;
}

namespace {

void check_length(const Signature& lambda, int n) {
  if (n < 1 || lambda.size() != n) {
    throw ArgumentError("signature " + lambda.to_string() + " does not have length n = " +
                        std::to_string(n));
  }
}

void add_prime_exponents(std::map<int, int>& exps, int value, int sign) {
  for (int p = 2; p * p <= value; ++p) {
    while (value % p == 0) {
      exps[p] += sign;
      value /= p;
    }
  }
  if (value > 1) exps[value] += sign;
}

using WeightMap = std::map<std::vector<int>, std::uint64_t>;

// Weights of the polynomial representation with nonnegative highest weight
// `lambda` (length n): strip the horizontal strip of entries equal to n and
// recurse on the interlacing signature mu of length n - 1.
class BranchingEnumerator {
 public:
  const WeightMap& weights(const std::vector<int>& lambda) {
    auto it = memo_.find(lambda);
    if (it != memo_.end()) return it->second;
    WeightMap out;
    const int n = static_cast<int>(lambda.size());
    if (n == 1) {
      out[{lambda[0]}] = 1;
    } else {
      long total = 0;
      for (int v : lambda) total += v;
      std::vector<int> mu(n - 1);
      visit_interlacing(lambda, mu, 0, total, out);
    }
    return memo_.emplace(lambda, std::move(out)).first->second;
  }

 private:
  void visit_interlacing(const std::vector<int>& lambda, std::vector<int>& mu, int i,
                         long total, WeightMap& out) {
    const int m = static_cast<int>(mu.size());
    if (i == m) {
      long mu_total = 0;
      for (int v : mu) mu_total += v;
      const int last = static_cast<int>(total - mu_total);
      const WeightMap& sub = weights(mu);
      for (const auto& [w, mult] : sub) {
        std::vector<int> full = w;
        full.push_back(last);
        out[full] += mult;
      }
      return;
    }
    for (int v = lambda[i + 1]; v <= lambda[i]; ++v) {
      mu[i] = v;
      visit_interlacing(lambda, mu, i + 1, total, out);
    }
  }

  std::map<std::vector<int>, WeightMap> memo_;
};

std::mutex& spectrum_cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::vector<int>, std::shared_ptr<const WeightSpectrum>>& spectrum_cache() {
  static std::map<std::vector<int>, std::shared_ptr<const WeightSpectrum>> cache;
  return cache;
}

double circular_gap(double a, double b) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double d = std::fmod(std::abs(a - b), two_pi);
  return std::min(d, two_pi - d);
}

}  // namespace

std::uint64_t dim_irrep(const Signature& lambda, int n) {
  check_length(lambda, n);
  std::map<int, int> exps;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      add_prime_exponents(exps, lambda[i] - lambda[j] + j - i, +1);
      add_prime_exponents(exps, j - i, -1);
    }
  }
  unsigned __int128 dim = 1;
  for (const auto& [p, e] : exps) {
    if (e < 0) throw NumericError("Weyl dimension product is not an integer");
    for (int t = 0; t < e; ++t) {
      dim *= static_cast<unsigned>(p);
      if (dim > UINT64_MAX) throw CapacityError("dim V_lambda exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(dim);
}

std::shared_ptr<const WeightSpectrum> weight_spectrum(const Signature& lambda, int n) {
  check_length(lambda, n);
  std::vector<int> key(lambda.entries().begin(), lambda.entries().end());
  {
    std::lock_guard lock(spectrum_cache_mutex());
    auto it = spectrum_cache().find(key);
    if (it != spectrum_cache().end()) return it->second;
  }

  const int shift = lambda.last();
  std::vector<int> base = key;
  for (int& v : base) v -= shift;
  BranchingEnumerator enumerator;
  const WeightMap& weights = enumerator.weights(base);

  std::vector<int> flat;
  std::vector<std::uint64_t> mults;
  flat.reserve(weights.size() * n);
  mults.reserve(weights.size());
  for (auto it = weights.rbegin(); it != weights.rend(); ++it) {
    for (int v : it->first) flat.push_back(v + shift);
    mults.push_back(it->second);
  }
  auto spectrum = std::make_shared<const WeightSpectrum>(n, std::move(flat), std::move(mults));

  std::lock_guard lock(spectrum_cache_mutex());
  return spectrum_cache().emplace(std::move(key), std::move(spectrum)).first->second;
}

Complex schur_eval(const Signature& lambda, std::span<const double> phases) {
  const int n = static_cast<int>(phases.size());
  auto spectrum = weight_spectrum(lambda, n);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < spectrum->size(); ++i) {
    auto w = spectrum->weight(i);
    double angle = 0.0;
    bool zero = true;
    for (int j = 0; j < n; ++j) {
      if (w[j] != 0 && phases[j] != 0.0) {
        angle += w[j] * phases[j];
        zero = false;
      }
    }
    const double m = static_cast<double>(spectrum->multiplicity(i));
    sum += zero ? Complex(m, 0.0) : m * std::polar(1.0, angle);
  }
  return sum;
}

std::optional<Complex> schur_eval_bialternant(const Signature& lambda,
                                              std::span<const double> phases) {
  const int n = static_cast<int>(phases.size());
  check_length(lambda, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (circular_gap(phases[i], phases[j]) <= kBialternantMinGap) return std::nullopt;
    }
  }
  Eigen::MatrixXcd num(n, n), den(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      num(i, j) = std::polar(1.0, (lambda[j] + n - 1 - j) * phases[i]);
      den(i, j) = std::polar(1.0, (n - 1 - j) * phases[i]);
    }
  }
  return num.partialPivLu().determinant() / den.partialPivLu().determinant();
}

Complex schur_eval(const Signature& lambda, std::span<const double> phases,
                   CharacterMethod method) {
  if (method == CharacterMethod::bialternant) {
    if (auto v = schur_eval_bialternant(lambda, phases)) return *v;
  }
  return schur_eval(lambda, phases);
}

Complex power_sum_eval(int j, std::span<const double> phases) {
  if (j < 1) throw ArgumentError("power_sum_eval: j must be >= 1");
  Complex sum = 0.0;
  for (double t : phases) sum += std::polar(1.0, j * t);
  return sum;
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  Eigen::MatrixXcd g = u.adjoint() * u;
  g.diagonal().array() -= 1.0;
  return g.cwiseAbs().maxCoeff();
}

std::vector<double> unitary_phases(const Eigen::MatrixXcd& u) {
  const auto n = u.rows();
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u, /*computeU=*/false);
  if (schur.info() != Eigen::Success) throw NumericError("complex Schur decomposition failed");
  const auto& t = schur.matrixT();
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> phases(n);
  Complex eigen_sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double a = std::arg(t(i, i));
    if (a < 0.0) a += two_pi;
    if (a >= two_pi) a -= two_pi;
    phases[i] = a;
    eigen_sum += std::polar(1.0, a);
  }
  if (std::abs(eigen_sum - u.trace()) > 1e-8 * static_cast<double>(n)) {
    throw NumericError("eigenphases do not reproduce the trace");
  }
  std::sort(phases.begin(), phases.end());
  return phases;
}

Complex normalized_char(const Signature& lambda, const Eigen::MatrixXcd& u) {
  if (u.rows() != lambda.size() || u.cols() != lambda.size()) {
    throw ArgumentError("normalized_char: matrix dimension does not match signature length");
  }
  if (unitarity_defect(u) > kUnitaryInputTolerance) {
    throw ValidationError("normalized_char: input matrix is not unitary within tolerance");
  }
  auto phases = unitary_phases(u);
  return schur_eval(lambda, phases) /
         static_cast<double>(dim_irrep(lambda, static_cast<int>(lambda.size())));
}

}  // namespace geodlab::repr
