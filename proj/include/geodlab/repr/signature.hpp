#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace geodlab::repr {

/// Highest weight of an irreducible U(n) representation: a weakly
/// decreasing integer tuple of length n. Entries may be negative.
class Signature {
 public:
  explicit Signature(std::vector<int> entries);
  Signature(std::initializer_list<int> entries);

  /// `head` padded with zeros to length n, e.g. (2,1) -> (2,1,0,0) for n = 4.
  static Signature padded(std::span<const int> head, int n);

  std::span<const int> entries() const { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  int size() const { return static_cast<int>(entries_.size()); }

  /// Sum of |entries|.
  long one_norm() const;
  /// Sum of entries.
  long entry_sum() const;
  int last() const { return entries_.back(); }

  /// Subtract `shift` from every entry (the determinant twist when
  /// shift = last()).
  Signature shifted(int shift) const;

  std::string to_string() const;

  auto operator<=>(const Signature&) const = default;

 private:
  std::vector<int> entries_;
};

/// True iff the entries sum to zero.
bool is_balanced(const Signature& lambda);

/// Integer partition: weakly decreasing strictly positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Partition 1^{a_1} 2^{a_2} ... from multiplicities (a_1, a_2, ...).
  static Partition from_multiplicities(std::span<const int> multiplicities);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// (a_1, ..., a_{max part}) where a_j counts parts equal to j.
  std::vector<int> multiplicities() const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of K in reverse lexicographic order, (K) first.
std::vector<Partition> partitions_of(int K);

/// z_mu = prod_j j^{a_j} a_j!, the centralizer order of cycle type mu.
std::int64_t centralizer_order(const Partition& mu);

}  // namespace geodlab::repr
