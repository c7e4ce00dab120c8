#include "geodlab/repr/signature.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "geodlab/error.hpp"

namespace geodlab::repr {

Signature::Signature(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ArgumentError("signature must have length >= 1");
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    if (entries_[i] < entries_[i + 1]) {
      throw ArgumentError("signature entries must be weakly decreasing: " + to_string());
    }
  }
}

Signature::Signature(std::initializer_list<int> entries)
    : Signature(std::vector<int>(entries)) {}

Signature Signature::padded(std::span<const int> head, int n) {
  if (static_cast<int>(head.size()) > n) {
    throw ArgumentError("signature head longer than n");
  }
  std::vector<int> e(head.begin(), head.end());
  e.resize(n, 0);
  return Signature(std::move(e));
}

long Signature::one_norm() const {
  long s = 0;
  for (int v : entries_) s += std::abs(v);
  return s;
}

long Signature::entry_sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

Signature Signature::shifted(int shift) const {
  std::vector<int> e = entries_;
  for (int& v : e) v -= shift;
  return Signature(std::move(e));
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

bool is_balanced(const Signature& lambda) { return lambda.entry_sum() == 0; }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw ArgumentError("partition parts must be >= 1");
    if (i && parts_[i - 1] < parts_[i]) {
      throw ArgumentError("partition parts must be weakly decreasing");
    }
    weight_ += parts_[i];
  }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::from_multiplicities(std::span<const int> multiplicities) {
  std::vector<int> parts;
  for (int j = static_cast<int>(multiplicities.size()); j >= 1; --j) {
    int a = multiplicities[j - 1];
    if (a < 0) throw ArgumentError("negative multiplicity");
    parts.insert(parts.end(), a, j);
  }
  return Partition(std::move(parts));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> a(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_) ++a[p - 1];
  return a;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int K) {
  if (K < 0) throw ArgumentError("partitions_of: K must be >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(K, K, cur, out);
  return out;
}

std::int64_t centralizer_order(const Partition& mu) {
  std::int64_t z = 1;
  auto a = mu.multiplicities();
  for (std::size_t j = 1; j <= a.size(); ++j) {
    for (int t = 1; t <= a[j - 1]; ++t) z *= static_cast<std::int64_t>(j) * t;
  }
  return z;
}

}  // namespace geodlab::repr
