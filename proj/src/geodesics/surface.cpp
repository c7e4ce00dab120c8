#include "geodlab/geodesics/surface.hpp"

#include <algorithm>
#include <cmath>

#include "geodlab/error.hpp"

namespace geodlab::geodesics {

namespace {

Int checked_mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw CapacityError("128-bit trace overflow; use a smaller maximal word length");
  }
  return r;
}

Int checked_add(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw CapacityError("128-bit trace overflow; use a smaller maximal word length");
  }
  return r;
}

Int checked_sub(Int x, Int y) {
  Int r;
  if (__builtin_sub_overflow(x, y, &r)) {
    throw CapacityError("128-bit trace overflow; use a smaller maximal word length");
  }
  return r;
}

Int abs_int(Int v) { return v < 0 ? -v : v; }

}  // namespace

std::string int_to_string(Int v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

Int parse_int(std::string_view text) {
  if (text.empty()) throw ArgumentError("empty integer");
  std::size_t i = 0;
  bool neg = false;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw ArgumentError("malformed integer '" + std::string(text) + "'");
  Int v = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw ArgumentError("malformed integer '" + std::string(text) + "'");
    if (__builtin_mul_overflow(v, Int{10}, &v) ||
        __builtin_add_overflow(v, Int{neg ? -(c - '0') : (c - '0')}, &v)) {
      throw ArgumentError("integer '" + std::string(text) + "' exceeds 128 bits");
    }
  }
  return v;
}

Int Mat2::trace() const { return checked_add(a, d); }

Int Mat2::det() const { return checked_sub(checked_mul(a, d), checked_mul(b, c)); }

Mat2 Mat2::inverse() const { return {d, -b, -c, a}; }

Mat2 Mat2::operator*(const Mat2& o) const {
  return {checked_add(checked_mul(a, o.a), checked_mul(b, o.c)),
          checked_add(checked_mul(a, o.b), checked_mul(b, o.d)),
          checked_add(checked_mul(c, o.a), checked_mul(d, o.c)),
          checked_add(checked_mul(c, o.b), checked_mul(d, o.d))};
}

Mat2 SurfaceModel::letter_matrix(Letter x) const {
  const int g = generator_index(x);
  if (g >= rank()) {
    throw ArgumentError("letter " + letters_to_string(std::span(&x, 1)) + " outside the rank-" +
                        std::to_string(rank()) + " alphabet of " + name);
  }
  return is_inverse(x) ? generators[g].inverse() : generators[g];
}

SurfaceModel builtin_surface(std::string_view name) {
  if (name != "gamma2") {
    throw ArgumentError("unknown surface '" + std::string(name) + "' (available: gamma2)");
  }
  SurfaceModel m;
  m.name = "gamma2";
  m.generators = {Mat2{1, 2, 0, 1}, Mat2{1, 0, 2, 1}};
  m.cusp_words = {cyclic_word("a"), cyclic_word("b"), cyclic_word("aB")};
  for (const auto& g : m.generators) {
    if (g.det() != 1) throw ValidationError("surface generator with determinant != 1");
  }
  for (const auto& w : m.cusp_words) {
    if (abs_int(evaluate_word(m, w.letters()).trace()) != 2) {
      throw ValidationError("cusp word " + w.to_string() + " is not parabolic");
    }
  }
  return m;
}

Mat2 evaluate_word(const SurfaceModel& model, std::span<const Letter> letters) {
  Mat2 m;
  for (Letter x : letters) m = m * model.letter_matrix(x);
  return m;
}

Mat2 evaluate_word_balanced(const SurfaceModel& model, std::span<const Letter> letters) {
  if (letters.empty()) return Mat2::identity();
  if (letters.size() == 1) return model.letter_matrix(letters[0]);
  const std::size_t half = letters.size() / 2;
  return evaluate_word_balanced(model, letters.first(half)) *
         evaluate_word_balanced(model, letters.subspan(half));
}

double norm_from_trace(Int trace) {
  const long double t = static_cast<long double>(abs_int(trace));
  if (t <= 2.0L) throw ArgumentError("norm_from_trace: trace is not hyperbolic");
  const long double root = (t + std::sqrt((t - 2.0L) * (t + 2.0L))) / 2.0L;
  return static_cast<double>(root * root);
}

double length_from_trace(Int trace) {
  const long double t = static_cast<long double>(abs_int(trace));
  if (t <= 2.0L) throw ArgumentError("length_from_trace: trace is not hyperbolic");
  return static_cast<double>(2.0L * std::acosh(t / 2.0L));
}

}  // namespace geodlab::geodesics
