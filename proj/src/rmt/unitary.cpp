#include "geodlab/rmt/unitary.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "geodlab/error.hpp"
#include "geodlab/repr/characters.hpp"

namespace geodlab::rmt {

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd m, double tolerance) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw ValidationError("unitary matrix must be square and nonempty");
  }
  if (!(repr::unitarity_defect(m_) <= tolerance)) {
    throw ValidationError("matrix is not unitary within tolerance");
  }
}

UnitaryMatrix UnitaryMatrix::identity(int n) {
  if (n < 1) throw ArgumentError("identity: n must be >= 1");
  return UnitaryMatrix(Eigen::MatrixXcd::Identity(n, n), Trusted{});
}

UnitaryMatrix UnitaryMatrix::diagonal(const std::vector<double>& phases) {
  if (phases.empty()) throw ArgumentError("diagonal: no phases");
  const auto n = static_cast<Eigen::Index>(phases.size());
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = std::polar(1.0, phases[i]);
  return UnitaryMatrix(std::move(d), Trusted{});
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  return UnitaryMatrix(m_.adjoint(), Trusted{});
}

UnitaryTuple::UnitaryTuple(std::vector<UnitaryMatrix> matrices)
    : matrices_(std::move(matrices)) {
  if (matrices_.empty()) throw ArgumentError("unitary tuple must have rank >= 1");
  for (const auto& m : matrices_) {
    if (m.n() != matrices_.front().n()) {
      throw ArgumentError("unitary tuple matrices differ in dimension");
    }
  }
}

UnitaryTuple UnitaryTuple::trivial(int rank, int n) {
  if (rank < 1) throw ArgumentError("trivial tuple: rank must be >= 1");
  return UnitaryTuple(std::vector<UnitaryMatrix>(rank, UnitaryMatrix::identity(n)));
}

UnitaryMatrix haar_unitary(int n, Engine& engine) {
  if (n < 1) throw ArgumentError("haar_unitary: n must be >= 1");
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd g(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double re = normal(engine);
      const double im = normal(engine);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const auto& r = qr.matrixQR();
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    const double mod = std::abs(d);
    if (mod == 0.0) throw NumericError("haar_unitary: singular Ginibre sample");
    q.col(i) *= d / mod;
  }
  if (repr::unitarity_defect(q) > kUnitaryTolerance) {
    throw NumericError("haar_unitary: QR factor failed the unitarity check");
  }
  return UnitaryMatrix(std::move(q), UnitaryMatrix::Trusted{});
}

UnitaryMatrix haar_unitary(int n, const RngStream& stream) {
  Engine engine = stream.engine();
  return haar_unitary(n, engine);
}

UnitaryTuple sample_rep(int r, int n, const RngStream& stream) {
  if (r < 1) throw ArgumentError("sample_rep: r must be >= 1");
  std::vector<UnitaryMatrix> ms;
  ms.reserve(r);
  for (int i = 0; i < r; ++i) ms.push_back(haar_unitary(n, stream.substream(i)));
  return UnitaryTuple(std::move(ms));
}

std::vector<double> eig_phases(const UnitaryMatrix& u) {
  return repr::unitary_phases(u.matrix());
}

double op_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  if (!m.allFinite()) throw ArgumentError("op_norm: non-finite entries");
  if (m.rows() <= 64 && m.cols() <= 64) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
  }
  Eigen::MatrixXcd gram = m.cols() <= m.rows() ? Eigen::MatrixXcd(m.adjoint() * m)
                                               : Eigen::MatrixXcd(m * m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("op_norm: eigensolver failed");
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

}  // namespace geodlab::rmt
