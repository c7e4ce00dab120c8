#include "geodlab/geodesics/holonomy.hpp"

#include <string>

#include "geodlab/error.hpp"
#include "geodlab/repr/characters.hpp"
#include "geodlab/rmt/parallel.hpp"

namespace geodlab::geodesics {

Eigen::MatrixXcd holonomy_matrix(const rmt::UnitaryTuple& chi, std::span<const Letter> letters) {
  const int n = chi.n();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
  for (Letter x : letters) {
    const int g = generator_index(x);
    if (g >= chi.rank()) {
      throw ArgumentError("word uses generator " + std::to_string(g + 1) +
                          " but the representation has rank " + std::to_string(chi.rank()));
    }
    const Eigen::MatrixXcd& u = chi[static_cast<std::size_t>(g)].matrix();
    if (is_inverse(x)) {
      m = m * u.adjoint();
    } else {
      m = m * u;
    }
  }
  return m;
}

std::vector<double> holonomy_phases(const rmt::UnitaryTuple& chi, const CyclicWord& w) {
  return repr::unitary_phases(holonomy_matrix(chi, w.letters()));
}

Complex holonomy_trace(const rmt::UnitaryTuple& chi, const CyclicWord& w,
                       const repr::Signature& lambda) {
  if (lambda.size() != chi.n()) {
    throw ArgumentError("signature " + lambda.to_string() + " does not match U(" +
                        std::to_string(chi.n()) + ")");
  }
  return repr::schur_eval(lambda, holonomy_phases(chi, w));
}

Complex normalized_holonomy_trace(const rmt::UnitaryTuple& chi, const CyclicWord& w,
                                  const repr::Signature& lambda) {
  return holonomy_trace(chi, w, lambda) /
         static_cast<double>(repr::dim_irrep(lambda, lambda.size()));
}

std::vector<std::vector<double>> holonomy_phase_table(const GeodesicTable& table,
                                                      const rmt::UnitaryTuple& chi,
                                                      unsigned workers) {
  std::vector<std::vector<double>> out(table.classes.size());
  rmt::parallel_for(out.size(), workers, [&](std::size_t i) {
    out[i] = holonomy_phases(chi, table.classes[i].word);
  });
  return out;
}

}  // namespace geodlab::geodesics
