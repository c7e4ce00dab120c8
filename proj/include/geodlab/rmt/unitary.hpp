#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "geodlab/rmt/rng.hpp"

namespace geodlab::rmt {

using Complex = std::complex<double>;

/// Construction-time tolerance on ||U^* U - I||_max.
inline constexpr double kUnitaryTolerance = 1e-10;

/// A square complex matrix validated as unitary at construction.
class UnitaryMatrix {
 public:
  /// Throws ValidationError if the matrix is not unitary within `tolerance`.
  explicit UnitaryMatrix(Eigen::MatrixXcd m, double tolerance = kUnitaryTolerance);

  static UnitaryMatrix identity(int n);
  static UnitaryMatrix diagonal(const std::vector<double>& phases);

  int n() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  UnitaryMatrix adjoint() const;

 private:
  struct Trusted {};
  UnitaryMatrix(Eigen::MatrixXcd m, Trusted) : m_(std::move(m)) {}
  friend UnitaryMatrix haar_unitary(int n, Engine& engine);

  Eigen::MatrixXcd m_;
};

/// One surface representation: images of the r free generators.
class UnitaryTuple {
 public:
  explicit UnitaryTuple(std::vector<UnitaryMatrix> matrices);

  /// r copies of the n x n identity (the trivial representation).
  static UnitaryTuple trivial(int rank, int n);

  int rank() const { return static_cast<int>(matrices_.size()); }
  int n() const { return matrices_.front().n(); }
  const UnitaryMatrix& operator[](std::size_t i) const { return matrices_[i]; }
  const std::vector<UnitaryMatrix>& matrices() const { return matrices_; }

 private:
  std::vector<UnitaryMatrix> matrices_;
};

/// Haar sample: complex Ginibre matrix, Householder QR, and Q multiplied on
/// the right by diag(r_ii / |r_ii|) so that R has positive diagonal.
UnitaryMatrix haar_unitary(int n, Engine& engine);
UnitaryMatrix haar_unitary(int n, const RngStream& stream);

/// r independent Haar unitaries drawn from substreams 0..r-1 of `stream`.
UnitaryTuple sample_rep(int r, int n, const RngStream& stream);

/// Eigenphases in [0, 2 pi), ascending.
std::vector<double> eig_phases(const UnitaryMatrix& u);

/// Largest singular value.
double op_norm(const Eigen::MatrixXcd& m);

}  // namespace geodlab::rmt
