#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geodlab/geodesics/word.hpp"

namespace geodlab::geodesics {

using Int = __int128;

std::string int_to_string(Int v);
/// Parses a decimal integer; throws ArgumentError on malformed input or overflow.
Int parse_int(std::string_view text);

/// Exact 2x2 integer matrix. Arithmetic throws CapacityError on overflow.
struct Mat2 {
  Int a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }
  Int trace() const;
  Int det() const;
  /// Inverse of a determinant-one matrix.
  Mat2 inverse() const;
  Mat2 operator*(const Mat2& o) const;
  bool operator==(const Mat2&) const = default;
};

struct SurfaceModel {
  std::string name;
  std::vector<Mat2> generators;
  std::vector<CyclicWord> cusp_words;

  int rank() const { return static_cast<int>(generators.size()); }
  /// Matrix of a letter (inverse letters map to the inverse matrix).
  Mat2 letter_matrix(Letter x) const;
};

/// "gamma2": A = [[1,2],[0,1]], B = [[1,0],[2,1]], cusps a, b, aB.
/// Throws ArgumentError for other names.
SurfaceModel builtin_surface(std::string_view name);

/// Product of letter matrices, folded left to right.
Mat2 evaluate_word(const SurfaceModel& model, std::span<const Letter> letters);
/// Same product grouped as a balanced binary tree.
Mat2 evaluate_word_balanced(const SurfaceModel& model, std::span<const Letter> letters);

/// Length 2 arccosh(|t|/2) and norm e^length of a hyperbolic trace.
double length_from_trace(Int trace);
double norm_from_trace(Int trace);

}  // namespace geodlab::geodesics
