#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace geodlab::geodesics {

/// Letter 2i is the generator g_{i+1}, letter 2i+1 its inverse, so the
/// integer order is g_1 < g_1^-1 < g_2 < g_2^-1 < ...
using Letter = std::uint8_t;

constexpr Letter inverse(Letter x) { return x ^ Letter{1}; }
constexpr int generator_index(Letter x) { return x >> 1; }
constexpr bool is_inverse(Letter x) { return (x & 1U) != 0; }

/// Letters as text: a, A (a^-1), b, B, ...
std::string letters_to_string(std::span<const Letter> letters);
/// Parses a letter string; throws ArgumentError on characters outside a-z/A-Z.
std::vector<Letter> parse_letters(std::string_view text);

/// Free reduction (cancels adjacent inverse pairs).
std::vector<Letter> free_reduce(std::span<const Letter> letters);

/// A conjugacy class of the free group: a nonempty cyclically reduced word
/// stored as its lexicographically least rotation.
class CyclicWord {
 public:
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::string to_string() const { return letters_to_string(letters_); }

  /// The class of the inverse element.
  CyclicWord inverse() const;
  /// The class of w^q.
  CyclicWord power(int q) const;

  auto operator<=>(const CyclicWord&) const = default;

 private:
  friend std::optional<CyclicWord> reduce_cyclic(std::span<const Letter> letters);
  explicit CyclicWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

/// Free and cyclic reduction followed by canonical rotation. Returns
/// nullopt when the word is trivial (identity class). Idempotent.
std::optional<CyclicWord> reduce_cyclic(std::span<const Letter> letters);

/// reduce_cyclic on a letter string; throws ArgumentError for the identity.
CyclicWord cyclic_word(std::string_view text);

/// Least rotation of an already cyclically reduced word.
std::vector<Letter> least_rotation(std::span<const Letter> letters);

struct PrimitiveRoot {
  CyclicWord root;
  int q = 1;
};

/// w = root^q with q maximal; root is primitive.
PrimitiveRoot primitive_root(const CyclicWord& w);

}  // namespace geodlab::geodesics
