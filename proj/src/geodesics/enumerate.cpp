#include "geodlab/geodesics/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "geodlab/error.hpp"
#include "geodlab/rmt/parallel.hpp"

namespace geodlab::geodesics {

namespace {

Int abs_int(Int v) { return v < 0 ? -v : v; }

Int floor_div(Int p, Int q) {
  Int r = p / q;
  if ((p % q != 0) && ((p < 0) != (q < 0))) --r;
  return r;
}

// Nearest integer to p / q.
Int round_div(Int p, Int q) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return floor_div(2 * p + q, 2 * q);
}

bool class_less(const GeodesicClass& x, const GeodesicClass& y) {
  const Int tx = abs_int(x.trace), ty = abs_int(y.trace);
  if (tx != ty) return tx < ty;
  return x.word < y.word;
}

void append_power(std::vector<Letter>& out, Letter generator, Int k) {
  const Letter x = k > 0 ? generator : inverse(generator);
  for (Int i = 0; i < abs_int(k); ++i) out.push_back(x);
}

// Writes g = sign * W with W a word in A = [[1,2],[0,1]], B = [[1,0],[2,1]].
// Requires g in SL2(Z) with g = I mod 2. Left multiplication by powers of A
// and B runs a Euclid step on the first column until it is (+-1, 0).
std::vector<Letter> gamma2_word(Mat2 g, int& sign) {
  std::vector<std::pair<Letter, Int>> ops;
  while (g.c != 0) {
    if (abs_int(g.a) > abs_int(g.c)) {
      const Int k = -round_div(g.a, 2 * g.c);
      g = Mat2{1, 2 * k, 0, 1} * g;
      ops.emplace_back(Letter{0}, k);
    } else {
      if (g.a == 0) throw NumericError("matrix is not congruent to the identity mod 2");
      const Int k = -round_div(g.c, 2 * g.a);
      g = Mat2{1, 0, 2 * k, 1} * g;
      ops.emplace_back(Letter{2}, k);
    }
  }
  if (abs_int(g.a) != 1 || g.d != g.a || g.b % 2 != 0) {
    throw NumericError("matrix is not congruent to the identity mod 2");
  }
  sign = static_cast<int>(g.a);
  std::vector<Letter> word;
  for (const auto& [gen, k] : ops) append_power(word, gen, -k);
  append_power(word, Letter{0}, g.b * g.a / 2);
  return word;
}

bool even_entries(const Mat2& m) {
  return (m.a - 1) % 2 == 0 && m.b % 2 == 0 && m.c % 2 == 0 && (m.d - 1) % 2 == 0;
}

// Representatives of SL2(Z) / Gamma(2).
const std::array<Mat2, 6>& coset_reps() {
  static const std::array<Mat2, 6> reps = {
      Mat2{1, 0, 0, 1},  Mat2{0, -1, 1, 0}, Mat2{1, 1, 0, 1},
      Mat2{1, 0, 1, 1},  Mat2{0, -1, 1, 1}, Mat2{1, -1, 1, 0}};
  return reps;
}

using ClassMap = std::map<CyclicWord, Int>;

// Positive words in R = [[1,1],[0,1]], L = [[1,0],[1,1]] that start with R,
// end with L and have trace <= bound. Every hyperbolic SL2(Z) class of
// positive trace has such a representative.
void visit_positive_words(const Mat2& m, bool ends_with_l, Int bound,
                          const SurfaceModel& model, ClassMap& out) {
  if (ends_with_l && even_entries(m)) {
    for (const Mat2& s : coset_reps()) {
      const Mat2 conj = s * m * s.inverse();
      int sign = 1;
      auto word = reduce_cyclic(gamma2_word(conj, sign));
      if (!word) throw NumericError("hyperbolic matrix reduced to the identity word");
      const Int trace = sign * m.trace();
      if (evaluate_word(model, word->letters()).trace() != trace) {
        throw NumericError("word problem solution does not reproduce the trace");
      }
      out.emplace(std::move(*word), trace);
    }
  }
  const Mat2 next_r = m * Mat2{1, 1, 0, 1};
  if (next_r.trace() <= bound) visit_positive_words(next_r, false, bound, model, out);
  const Mat2 next_l = m * Mat2{1, 0, 1, 1};
  if (next_l.trace() <= bound) visit_positive_words(next_l, true, bound, model, out);
}

void check_gamma2(const SurfaceModel& model) {
  const SurfaceModel ref = builtin_surface("gamma2");
  if (model.name != ref.name || model.generators != ref.generators) {
    throw ArgumentError("enumerate_classes supports the gamma2 surface only");
  }
}

bool is_least_rotation(const std::vector<Letter>& w) {
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const Letter x = w[(r + i) % n];
      if (x != w[i]) {
        if (x < w[i]) return false;
        break;
      }
    }
  }
  return true;
}

struct ExhaustiveWorker {
  const SurfaceModel& model;
  int max_len;
  std::vector<Letter> word;
  std::vector<Mat2> prefix;
  std::vector<GeodesicClass> hyperbolic;
  std::vector<CyclicWord> parabolic;

  void visit() {
    const Mat2 m = prefix.back();
    if (word.back() != inverse(word.front()) && is_least_rotation(word)) {
      const Int t = abs_int(m.trace());
      auto cw = reduce_cyclic(word);
      if (t > 2) {
        hyperbolic.push_back(make_class(*cw, m.trace()));
      } else if (t == 2) {
        parabolic.push_back(*cw);
      } else {
        throw NumericError("elliptic element " + cw->to_string() + " in a free surface group");
      }
    }
    if (static_cast<int>(word.size()) == max_len) return;
    const Letter first = word.front();
    for (Letter x = first; x < 2 * model.rank(); ++x) {
      if (x == inverse(word.back())) continue;
      word.push_back(x);
      prefix.push_back(m * model.letter_matrix(x));
      visit();
      prefix.pop_back();
      word.pop_back();
    }
  }
};

}  // namespace

GeodesicClass make_class(const CyclicWord& word, Int trace) {
  if (abs_int(trace) <= 2) {
    throw ArgumentError("class " + word.to_string() + " is not hyperbolic");
  }
  auto [root, q] = primitive_root(word);
  GeodesicClass c{word, trace, length_from_trace(trace), norm_from_trace(trace),
                  q == 1, root, q, 0.0};
  c.lambda_weight = c.root_length() / (1.0 - 1.0 / c.norm);
  return c;
}

GeodesicTable enumerate_classes(const SurfaceModel& model, int max_word_len, unsigned workers) {
  if (max_word_len < 1) throw ArgumentError("maximal word length L must be >= 1");
  check_gamma2(model);
  const int L = max_word_len;

  // a^L b has word length L + 1, so T* is at most its length.
  std::vector<Letter> witness(L, Letter{0});
  witness.push_back(Letter{2});
  const Int bound = abs_int(evaluate_word(model, witness).trace());

  // Top-level branches R^j L, j = 1 .. bound - 2, searched independently.
  const std::size_t branches = static_cast<std::size_t>(bound - 2);
  std::vector<ClassMap> parts(branches);
  rmt::parallel_for(branches, workers, [&](std::size_t i) {
    const Mat2 start{1 + static_cast<Int>(i + 1), static_cast<Int>(i + 1), 1, 1};
    visit_positive_words(start, true, bound, model, parts[i]);
  });
  ClassMap all;
  for (auto& p : parts) all.merge(p);

  std::vector<Int> min_by_len(static_cast<std::size_t>(L) + 2, 0);
  Int tstar_trace = bound;
  for (const auto& [w, t] : all) {
    const Int at = abs_int(t);
    const std::size_t len = w.size();
    if (len >= static_cast<std::size_t>(L) + 1) tstar_trace = std::min(tstar_trace, at);
    if (len <= static_cast<std::size_t>(L) + 1 && (min_by_len[len] == 0 || at < min_by_len[len])) {
      min_by_len[len] = at;
    }
  }

  GeodesicTable table;
  table.model = model.name;
  table.max_word_len = L;
  table.tstar_trace = tstar_trace;
  table.tstar = length_from_trace(tstar_trace);
  table.tstar_next_length = length_from_trace(min_by_len[L + 1]);
  table.window_increasing = true;
  for (int j = std::max(3, L - 2); j <= L + 1; ++j) {
    if (!(min_by_len[j] > min_by_len[j - 1])) table.window_increasing = false;
  }
  for (const auto& [w, t] : all) {
    if (abs_int(t) > tstar_trace) continue;
    if (w.size() <= static_cast<std::size_t>(L)) {
      table.classes.push_back(make_class(w, t));
    } else if (abs_int(t) == tstar_trace) {
      ++table.boundary_excluded;
    }
  }
  std::sort(table.classes.begin(), table.classes.end(), class_less);
  table.parabolic_classes = static_cast<std::int64_t>(cusp_power_classes(model, L).size());
  return table;
}

ExhaustiveResult exhaustive_classes(const SurfaceModel& model, int max_word_len,
                                    unsigned workers) {
  if (max_word_len < 1) throw ArgumentError("maximal word length L must be >= 1");
  const std::size_t letters = 2 * static_cast<std::size_t>(model.rank());
  std::vector<ExhaustiveWorker> parts;
  parts.reserve(letters);
  for (std::size_t i = 0; i < letters; ++i) parts.push_back({model, max_word_len, {}, {}, {}, {}});
  rmt::parallel_for(letters, workers, [&](std::size_t i) {
    auto& w = parts[i];
    const Letter x = static_cast<Letter>(i);
    w.word = {x};
    w.prefix = {model.letter_matrix(x)};
    w.visit();
  });

  ExhaustiveResult out;
  for (auto& p : parts) {
    out.hyperbolic.insert(out.hyperbolic.end(), p.hyperbolic.begin(), p.hyperbolic.end());
    out.parabolic.insert(out.parabolic.end(), p.parabolic.begin(), p.parabolic.end());
  }
  std::sort(out.hyperbolic.begin(), out.hyperbolic.end(), class_less);
  std::sort(out.parabolic.begin(), out.parabolic.end());
  out.min_trace_by_length.assign(static_cast<std::size_t>(max_word_len) + 1, 0);
  for (const auto& c : out.hyperbolic) {
    Int& slot = out.min_trace_by_length[c.word.size()];
    if (slot == 0 || abs_int(c.trace) < slot) slot = abs_int(c.trace);
  }
  return out;
}

std::int64_t count_geodesics(const GeodesicTable& table, double T) {
  if (T > table.tstar) {
    throw CompletenessError("cutoff T = " + std::to_string(T) +
                            " exceeds the completeness threshold T* = " +
                            std::to_string(table.tstar) + " of the table (L = " +
                            std::to_string(table.max_word_len) + ")");
  }
  auto it = std::upper_bound(table.classes.begin(), table.classes.end(), T,
                             [](double t, const GeodesicClass& c) { return t < c.length; });
  return it - table.classes.begin();
}

std::vector<CyclicWord> cusp_power_classes(const SurfaceModel& model, int max_word_len) {
  std::set<CyclicWord> out;
  for (const auto& w : model.cusp_words) {
    for (const CyclicWord& base : {w, w.inverse()}) {
      for (int q = 1; static_cast<int>(base.size()) * q <= max_word_len; ++q) {
        out.insert(base.power(q));
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace geodlab::geodesics
