#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "geodlab/rmt/unitary.hpp"

namespace geodlab::rmt {

/// Largest ball radius accepted by free_norm_ball_oracle.
inline constexpr int kMaxOracleRadius = 24;

/// || P (sum_i A_i) P || where A_i is right multiplication by the i-th free
/// generator on l^2(F_k) and P projects onto the ball of radius R.
///
/// The operator commutes with every root- and orientation-preserving
/// automorphism of the Cayley tree, so its top singular vector can be taken
/// constant on orbits. Orbits are indexed by the sign pattern (generator or
/// inverse) of the letters of a reduced word, which leaves 2^(R+1) - 1
/// states instead of ~2 (2k-1)^R. Lanczos on T^* T.
double free_norm_ball_oracle(int k, int radius);

/// Estimate of lim_{R->inf} of the oracle: least-squares fit of
/// v(R) = L - c2/(R+1)^2 - c3/(R+1)^3 - c4/(R+1)^4 over the given radii.
double free_norm_limit(int k, const std::vector<int>& radii);

/// Default radii for free_norm_limit.
std::vector<int> default_limit_radii();

/// || U_1 + ... + U_k ||.
double sum_norm(const UnitaryTuple& tuple);

struct FreenessResult {
  std::vector<double> norms;  ///< per trial, in trial order
  double limit = 0.0;
  double fraction = 0.0;      ///< share of trials with norm <= limit + eps
};

/// Draws `trials` independent k-tuples on U(n) and compares ||sum U_i||
/// with `limit` + eps.
FreenessResult strong_freeness_experiment(int k, int n, int trials, double eps, double limit,
                                          std::uint64_t master_seed, unsigned workers = 0);

}  // namespace geodlab::rmt
