#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "geodlab/repr/signature.hpp"

namespace geodlab::repr {

/// Irreducible character chi_lambda of S_K evaluated on cycle type mu,
/// via the Murnaghan-Nakayama rule on beta-sets. Memoized by
/// (shape, cycle type) behind a mutex. Throws ArgumentError when
/// |lambda| != |mu|.
std::int64_t sym_group_char(const Partition& lambda, const Partition& mu);

/// Rows indexed by irreducibles, columns by classes, both in
/// partitions_of(K) order.
std::vector<std::vector<std::int64_t>> character_table(int K);

/// Coefficients of P_lambda = prod_j P_j^{a_j} in the Schur basis:
/// mu -> chi_mu(lambda) for every mu |- |lambda|.
std::map<Partition, std::int64_t> power_sum_to_schur(const Partition& lambda);

/// E[prod_j tr(U^j)^{a_j} conj(tr(U^j))^{b_j}] in the large-n regime:
/// delta_{a,b} prod_j j^{a_j} a_j!.
std::uint64_t ds_moment(std::span<const int> a, std::span<const int> b);

}  // namespace geodlab::repr
