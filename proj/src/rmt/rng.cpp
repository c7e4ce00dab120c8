#include "geodlab/rmt/rng.hpp"

namespace geodlab::rmt {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t tag_hash(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Engine RngStream::engine() const {
  const std::uint64_t a = splitmix64(master_seed);
  const std::uint64_t b = splitmix64(stream_id ^ 0xD1B54A32D192ED03ULL);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return Engine(seq);
}

RngStream RngStream::for_trial(std::uint64_t master_seed, std::string_view tag,
                               std::uint64_t trial_index) {
  // Trial streams are spaced 2^20 apart so that per-trial substreams
  // (one per matrix of a tuple) never collide.
  const std::uint64_t base = splitmix64(tag_hash(tag)) & 0xFFFFF00000000000ULL;
  return {master_seed, base + (trial_index << 20)};
}

}  // namespace geodlab::rmt
