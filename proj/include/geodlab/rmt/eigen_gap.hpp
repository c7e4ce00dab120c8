#pragma once

#include <cstdint>

#include "geodlab/repr/signature.hpp"
#include "geodlab/rmt/unitary.hpp"

namespace geodlab::rmt {

struct GapToOne {
  /// min |1 - e^{i<w,theta>}| over weights w != 0 (infinity if none).
  double gap = 0.0;
  /// True iff the zero weight occurs, so 1 is an eigenvalue of pi_lambda(U)
  /// for every U.
  bool forced_one = false;
};

/// Distance from 1 of the spectrum of pi_lambda(U), read off the weight
/// spectrum and the eigenphases of U.
GapToOne min_gap_to_one(const repr::Signature& lambda, const UnitaryMatrix& u);

/// Absolute tolerance for <w, theta> == 0 (mod 2 pi) in cusp_multiplicity.
inline constexpr double kCuspPhaseTolerance = 1e-9;

/// Multiplicity of the eigenvalue 1 of pi_lambda(U), counting weights
/// with multiplicity (the zero weight included).
std::uint64_t cusp_multiplicity(const repr::Signature& lambda, const UnitaryMatrix& u);

}  // namespace geodlab::rmt
