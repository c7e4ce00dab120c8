#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "geodlab/geodesics/enumerate.hpp"
#include "geodlab/repr/signature.hpp"
#include "geodlab/rmt/unitary.hpp"

namespace geodlab::zeta {

using Complex = std::complex<double>;
using geodesics::GeodesicTable;

/// Holonomy eigenphases and tr pi_lambda(chi(P)) for every class of a table,
/// computed once and shared by the series below. Holds a reference to the
/// table, which must outlive it.
class ClassCharacters {
 public:
  ClassCharacters(const GeodesicTable& table, const rmt::UnitaryTuple& chi,
                  const repr::Signature& lambda, unsigned workers = 0);

  const GeodesicTable& table() const { return *table_; }
  const repr::Signature& lambda() const { return lambda_; }
  int n() const { return lambda_.size(); }
  std::uint64_t dim() const { return dim_; }
  std::size_t size() const { return traces_.size(); }
  /// tr pi_lambda(chi(P)) for class i.
  Complex trace(std::size_t i) const { return traces_[i]; }
  const std::vector<double>& phases(std::size_t i) const { return phases_[i]; }
  /// Eigenvalues of pi_lambda(chi(P)) for class i, repeated by multiplicity.
  std::vector<Complex> rep_eigenvalues(std::size_t i) const;
  /// Number of classes with N(P) <= x. Throws CompletenessError if
  /// x > e^{T*}, ArgumentError if x is not finite.
  std::size_t classes_up_to(double x) const;

 private:
  const GeodesicTable* table_;
  repr::Signature lambda_;
  std::uint64_t dim_;
  std::vector<std::vector<double>> phases_;
  std::vector<Complex> traces_;
};

/// sum_{N(P) <= x} Lambda(P) tr pi_lambda(chi(P)) / N(P)^s, Re s > 1.
Complex dirichlet_series(const ClassCharacters& data, Complex s, double x);
/// The same sum restricted to x1 < N(P) <= x2.
Complex dirichlet_series_annulus(const ClassCharacters& data, Complex s, double x1, double x2);
/// sum of dim V_lambda Lambda(P) / N(P)^{Re s} over x1 < N(P) <= x2.
double dirichlet_tail_majorant(const ClassCharacters& data, double sigma, double x1, double x2);

/// log of the partial Selberg product over primitive P_0 with N(P_0) <= x and
/// 0 <= k <= k_max, as a sum of principal logarithms.
Complex log_selberg_zeta_partial(const ClassCharacters& data, Complex s, int k_max, double x);
Complex selberg_zeta_partial(const ClassCharacters& data, Complex s, int k_max, double x);

/// Upper bound for |d/ds log Z_partial(s) - D_partial(s)| at real part sigma:
/// prime powers of the product beyond x, plus the k > k_max factors.
double zeta_truncation_bound(const ClassCharacters& data, double sigma, int k_max, double x);

/// Psi(x) = sum_{N(P) <= x} Lambda(P) tr pi_lambda(chi(P)).
Complex psi(const ClassCharacters& data, double x);
/// Psi_1(x) = integral_1^x Psi = sum_{N(P) <= x} Lambda(P) tr(...) (x - N(P)).
Complex psi1(const ClassCharacters& data, double x);

// Conveniences that build ClassCharacters on the fly.
Complex dirichlet_series(const GeodesicTable& table, const rmt::UnitaryTuple& chi,
                         const repr::Signature& lambda, Complex s, double x);
Complex selberg_zeta_partial(const GeodesicTable& table, const rmt::UnitaryTuple& chi,
                             const repr::Signature& lambda, Complex s, int k_max, double x);
Complex psi(const GeodesicTable& table, const rmt::UnitaryTuple& chi,
            const repr::Signature& lambda, double x);
Complex psi1(const GeodesicTable& table, const rmt::UnitaryTuple& chi,
             const repr::Signature& lambda, double x);

}  // namespace geodlab::zeta
