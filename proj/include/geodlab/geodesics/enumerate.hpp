#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geodlab/geodesics/surface.hpp"
#include "geodlab/geodesics/word.hpp"

namespace geodlab::geodesics {

struct GeodesicClass {
  CyclicWord word;
  Int trace = 0;
  double length = 0.0;
  double norm = 0.0;
  bool primitive = true;
  CyclicWord root;
  int q = 1;
  double lambda_weight = 0.0;

  /// Length of the primitive root, log N(P_0).
  double root_length() const { return length / q; }
  bool operator==(const GeodesicClass&) const = default;
};

/// Fills every derived field from the word and its exact trace.
GeodesicClass make_class(const CyclicWord& word, Int trace);

struct GeodesicTable {
  std::string model;
  int max_word_len = 0;
  /// Sorted by (|trace|, word), which is the (length, word) order.
  std::vector<GeodesicClass> classes;

  /// Completeness threshold: min length over classes of word length > L.
  double tstar = 0.0;
  Int tstar_trace = 0;
  /// Min length over classes of word length exactly L + 1.
  double tstar_next_length = 0.0;
  /// Classes of word length > L sitting exactly at T*; excluded from the table.
  std::int64_t boundary_excluded = 0;
  /// Min length at word lengths L-3 .. L+1 strictly increasing.
  bool window_increasing = false;
  /// Parabolic classes of word length <= L.
  std::int64_t parabolic_classes = 0;

  bool operator==(const GeodesicTable&) const = default;
};

/// All hyperbolic classes of word length <= L with length <= T*, built by
/// reduction theory in SL2(Z) and solving the word problem in the free group.
GeodesicTable enumerate_classes(const SurfaceModel& model, int max_word_len,
                                unsigned workers = 0);

struct ExhaustiveResult {
  std::vector<GeodesicClass> hyperbolic;  ///< sorted by (|trace|, word)
  std::vector<CyclicWord> parabolic;      ///< sorted
  /// min |trace| of hyperbolic classes at each word length (index = length, 0 if none).
  std::vector<Int> min_trace_by_length;
};

/// Backtracking over all cyclically reduced words of length <= L. Exponential;
/// intended for small L and as an oracle for enumerate_classes.
ExhaustiveResult exhaustive_classes(const SurfaceModel& model, int max_word_len,
                                    unsigned workers = 0);

/// pi_X(T): classes with length <= T. Throws CompletenessError if T > T*.
std::int64_t count_geodesics(const GeodesicTable& table, double T);

/// Canonical classes of nonzero powers of the cusp words up to the given word length.
std::vector<CyclicWord> cusp_power_classes(const SurfaceModel& model, int max_word_len);

}  // namespace geodlab::geodesics
