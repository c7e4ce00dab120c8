#include "geodlab/geodesics/word.hpp"

#include <algorithm>
#include <cctype>

#include "geodlab/error.hpp"

namespace geodlab::geodesics {

std::string letters_to_string(std::span<const Letter> letters) {
  std::string s;
  s.reserve(letters.size());
  for (Letter x : letters) {
    const char base = static_cast<char>('a' + generator_index(x));
    s.push_back(is_inverse(x) ? static_cast<char>(std::toupper(base)) : base);
  }
  return s;
}

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c >= 'a' && c <= 'z') {
      out.push_back(static_cast<Letter>(2 * (c - 'a')));
    } else if (c >= 'A' && c <= 'Z') {
      out.push_back(static_cast<Letter>(2 * (c - 'A') + 1));
    } else {
      throw ArgumentError(std::string("invalid letter '") + c + "' in word");
    }
  }
  return out;
}

std::vector<Letter> free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (Letter x : letters) {
    if (!stack.empty() && stack.back() == inverse(x)) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return stack;
}

std::vector<Letter> least_rotation(std::span<const Letter> letters) {
  const std::size_t n = letters.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const Letter x = letters[(r + i) % n];
      const Letter y = letters[(best + i) % n];
      if (x != y) {
        if (x < y) best = r;
        break;
      }
    }
  }
  std::vector<Letter> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = letters[(best + i) % n];
  return out;
}

std::optional<CyclicWord> reduce_cyclic(std::span<const Letter> letters) {
  std::vector<Letter> w = free_reduce(letters);
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == inverse(w[hi - 1])) {
    ++lo;
    --hi;
  }
  if (lo == hi) return std::nullopt;
  std::vector<Letter> core(w.begin() + static_cast<std::ptrdiff_t>(lo),
                           w.begin() + static_cast<std::ptrdiff_t>(hi));
  return CyclicWord(least_rotation(core));
}

CyclicWord cyclic_word(std::string_view text) {
  auto w = reduce_cyclic(parse_letters(text));
  if (!w) throw ArgumentError("word '" + std::string(text) + "' is trivial in the free group");
  return *w;
}

CyclicWord CyclicWord::inverse() const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (Letter& x : inv) x = geodesics::inverse(x);
  return *reduce_cyclic(inv);
}

CyclicWord CyclicWord::power(int q) const {
  if (q < 1) throw ArgumentError("CyclicWord::power: q must be >= 1");
  std::vector<Letter> out;
  out.reserve(letters_.size() * q);
  for (int i = 0; i < q; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return *reduce_cyclic(out);
}

PrimitiveRoot primitive_root(const CyclicWord& w) {
  const std::size_t n = w.size();
  auto letters = w.letters();
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = letters[i] == letters[i - p];
    if (periodic) {
      return {*reduce_cyclic(letters.subspan(0, p)), static_cast<int>(n / p)};
    }
  }
  return {w, 1};
}

}  // namespace geodlab::geodesics
