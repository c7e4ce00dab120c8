#include "geodlab/repr/symmetric_group.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "geodlab/error.hpp"

namespace geodlab::repr {

namespace {

using BetaSet = std::vector<int>;  // strictly decreasing

BetaSet beta_set(std::span<const int> parts) {
  const int len = static_cast<int>(parts.size());
  BetaSet beta(len);
  for (int i = 0; i < len; ++i) beta[i] = parts[i] + (len - 1 - i);
  return beta;
}

std::vector<int> shape_of(const BetaSet& beta) {
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int p = beta[i] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

std::map<MemoKey, std::int64_t>& memo() {
  static std::map<MemoKey, std::int64_t> table;
  return table;
}

// chi_shape(cycle type `cycles`), cycles sorted decreasing. Removes a rim
// hook of length cycles[0] in every possible way.
std::int64_t mn_rec(const std::vector<int>& shape, const std::vector<int>& cycles) {
  if (cycles.empty()) return shape.empty() ? 1 : 0;
  MemoKey key{shape, cycles};
  {
    std::lock_guard lock(memo_mutex());
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }

  const int r = cycles.front();
  std::vector<int> rest(cycles.begin() + 1, cycles.end());
  BetaSet beta = beta_set(shape);
  std::set<int> occupied(beta.begin(), beta.end());
  std::int64_t value = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int from = beta[i];
    const int to = from - r;
    if (to < 0 || occupied.count(to)) continue;
    int between = 0;
    for (int b : beta) {
      if (b > to && b < from) ++between;
    }
    BetaSet moved = beta;
    moved[i] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    const std::int64_t sub = mn_rec(shape_of(moved), rest);
    value += (between % 2 == 0) ? sub : -sub;
  }

  std::lock_guard lock(memo_mutex());
  memo().emplace(std::move(key), value);
  return value;
}

}  // namespace

std::int64_t sym_group_char(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw ArgumentError("sym_group_char: " + lambda.to_string() + " and " + mu.to_string() +
                        " are partitions of different integers");
  }
  std::vector<int> shape(lambda.parts().begin(), lambda.parts().end());
  std::vector<int> cycles(mu.parts().begin(), mu.parts().end());
  return mn_rec(shape, cycles);
}

std::vector<std::vector<std::int64_t>> character_table(int K) {
  auto parts = partitions_of(K);
  std::vector<std::vector<std::int64_t>> table(parts.size(),
                                               std::vector<std::int64_t>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      table[i][j] = sym_group_char(parts[i], parts[j]);
    }
  }
  return table;
}

std::map<Partition, std::int64_t> power_sum_to_schur(const Partition& lambda) {
  std::map<Partition, std::int64_t> coeffs;
  for (const auto& mu : partitions_of(lambda.weight())) {
    coeffs.emplace(mu, sym_group_char(mu, lambda));
  }
  return coeffs;
}

std::uint64_t ds_moment(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw ArgumentError("ds_moment: tuples of different length");
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < 0 || b[j] < 0) throw ArgumentError("ds_moment: entries must be nonnegative");
  }
  if (!std::equal(a.begin(), a.end(), b.begin())) return 0;
  std::uint64_t value = 1;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (int t = 1; t <= a[j]; ++t) value *= static_cast<std::uint64_t>(j + 1) * t;
  }
  return value;
}

}  // namespace geodlab::repr
