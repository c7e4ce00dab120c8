#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "geodlab/geodesics/enumerate.hpp"
#include "geodlab/geodesics/word.hpp"
#include "geodlab/repr/signature.hpp"
#include "geodlab/rmt/unitary.hpp"

namespace geodlab::geodesics {

using Complex = std::complex<double>;

/// chi(g_1) ... chi(g_m) for the letters of a word, inverse letters mapped
/// to the conjugate transpose. Throws ArgumentError for letters outside the
/// rank of chi.
Eigen::MatrixXcd holonomy_matrix(const rmt::UnitaryTuple& chi, std::span<const Letter> letters);

/// Eigenphases of the holonomy of w, in [0, 2pi), ascending.
std::vector<double> holonomy_phases(const rmt::UnitaryTuple& chi, const CyclicWord& w);

/// tr pi_lambda(chi(w)). Throws ArgumentError if lambda has length != chi.n().
Complex holonomy_trace(const rmt::UnitaryTuple& chi, const CyclicWord& w,
                       const repr::Signature& lambda);
/// holonomy_trace / dim V_lambda.
Complex normalized_holonomy_trace(const rmt::UnitaryTuple& chi, const CyclicWord& w,
                                  const repr::Signature& lambda);

/// Holonomy eigenphases for every class of a table (index order of table.classes).
std::vector<std::vector<double>> holonomy_phase_table(const GeodesicTable& table,
                                                      const rmt::UnitaryTuple& chi,
                                                      unsigned workers = 0);

}  // namespace geodlab::geodesics
