#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "geodlab/repr/signature.hpp"

namespace geodlab::repr {

using Complex = std::complex<double>;

/// Weights of V_lambda with multiplicities. Weight vectors are stored
/// flat, `dimension()` integers per weight, sorted lexicographically
/// descending (highest weight first).
class WeightSpectrum {
 public:
  WeightSpectrum(int n, std::vector<int> flat_weights,
                 std::vector<std::uint64_t> multiplicities);

  int dimension() const { return n_; }
  std::size_t size() const { return mults_.size(); }
  std::span<const int> weight(std::size_t i) const {
    return {flat_.data() + i * n_, static_cast<std::size_t>(n_)};
  }
  std::uint64_t multiplicity(std::size_t i) const { return mults_[i]; }
  /// Sum of multiplicities, i.e. dim V_lambda.
  std::uint64_t total() const { return total_; }

  /// Multiplicity of the given weight vector (0 if absent).
  std::uint64_t multiplicity_of(std::span<const int> w) const;

 private:
  int n_;
  std::vector<int> flat_;
  std::vector<std::uint64_t> mults_;
  std::uint64_t total_ = 0;
};

/// Weyl dimension formula prod_{i<j} (l_i - l_j + j - i)/(j - i), in
/// exact integer arithmetic. Throws ArgumentError if lambda.size() != n.
std::uint64_t dim_irrep(const Signature& lambda, int n);

/// Weight spectrum via Gelfand-Tsetlin branching (equivalently semistandard
/// tableaux contents) for the nonnegative shift lambda - lambda_n * 1, then
/// shifted back by lambda_n. Results are memoized; the cache is
/// mutex-protected and the returned spectrum is immutable.
std::shared_ptr<const WeightSpectrum> weight_spectrum(const Signature& lambda, int n);

enum class CharacterMethod {
  weight_sum,   ///< exact sum over the weight spectrum
  bialternant,  ///< det(z_i^{l_j+n-j}) / det(z_i^{n-j}); needs separated phases
};

/// Minimum pairwise phase gap (mod 2 pi) for the bialternant path.
inline constexpr double kBialternantMinGap = 1e-6;

/// s_lambda(e^{i theta_1}, ..., e^{i theta_n}) summed over the weight spectrum.
Complex schur_eval(const Signature& lambda, std::span<const double> phases);

/// Same value via the bialternant formula, or nullopt if two phases are
/// closer than kBialternantMinGap.
std::optional<Complex> schur_eval_bialternant(const Signature& lambda,
                                              std::span<const double> phases);

Complex schur_eval(const Signature& lambda, std::span<const double> phases,
                   CharacterMethod method);

/// sum_i e^{i j theta_i}; j >= 1.
Complex power_sum_eval(int j, std::span<const double> phases);

/// Tolerance on ||U^* U - I||_max accepted by normalized_char.
inline constexpr double kUnitaryInputTolerance = 1e-8;

/// Eigenphases in [0, 2 pi), ascending, of a unitary matrix (complex Schur
/// form). Throws NumericError if the phases do not reproduce tr(U).
std::vector<double> unitary_phases(const Eigen::MatrixXcd& u);

/// tr(pi_lambda(U)) / dim V_lambda.
Complex normalized_char(const Signature& lambda, const Eigen::MatrixXcd& u);

/// Max-entry deviation ||U^* U - I||_max.
double unitarity_defect(const Eigen::MatrixXcd& u);

}  // namespace geodlab::repr
