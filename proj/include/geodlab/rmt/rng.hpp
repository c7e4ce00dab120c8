#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace geodlab::rmt {

using Engine = std::mt19937_64;

/// SplitMix64 finalizer; used to decorrelate seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Stable 64-bit FNV-1a hash of a tag string.
std::uint64_t tag_hash(std::string_view tag);

/// A reproducible random stream identified by (master_seed, stream_id).
/// The same pair yields the same draws in every run, independent of how
/// trials are scheduled across workers.
struct RngStream {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;

  /// Fresh engine positioned at the start of this stream.
  Engine engine() const;

  /// Stream stream_id + offset under the same master seed.
  RngStream substream(std::uint64_t offset) const {
    return {master_seed, stream_id + offset};
  }

  /// Per-trial stream for (experiment tag, trial index). Trials of different
  /// experiments never share a stream.
  static RngStream for_trial(std::uint64_t master_seed, std::string_view tag,
                             std::uint64_t trial_index);
};

}  // namespace geodlab::rmt
