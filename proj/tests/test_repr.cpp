#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "geodlab/error.hpp"
#include "geodlab/repr/characters.hpp"
#include "geodlab/repr/signature.hpp"
#include "geodlab/repr/symmetric_group.hpp"
#include "geodlab/rmt/unitary.hpp"

using namespace geodlab;
using namespace geodlab::repr;

namespace {

// Brute-force semistandard tableaux of a partition shape with entries <= n,
// tallied by content.
void fill_ssyt(const std::vector<int>& shape, int n, std::vector<std::vector<int>>& t,
               std::size_t row, std::size_t col, std::map<std::vector<int>, long>& out) {
  if (row == shape.size()) {
    std::vector<int> content(n, 0);
    for (const auto& r : t) {
      for (int v : r) ++content[v - 1];
    }
    ++out[content];
    return;
  }
  if (col == static_cast<std::size_t>(shape[row])) {
    fill_ssyt(shape, n, t, row + 1, 0, out);
    return;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, t[row][col - 1]);
  if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);
  for (int v = lo; v <= n; ++v) {
    t[row][col] = v;
    fill_ssyt(shape, n, t, row, col + 1, out);
  }
}

std::map<std::vector<int>, long> ssyt_contents(const std::vector<int>& shape, int n) {
  std::vector<std::vector<int>> t;
  for (int len : shape) t.emplace_back(len, 0);
  std::map<std::vector<int>, long> out;
  fill_ssyt(shape, n, t, 0, 0, out);
  return out;
}

std::map<std::vector<int>, long> spectrum_map(const WeightSpectrum& s) {
  std::map<std::vector<int>, long> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto w = s.weight(i);
    out[{w.begin(), w.end()}] = static_cast<long>(s.multiplicity(i));
  }
  return out;
}

long hook_length_dim(const Partition& p) {
  const auto parts = p.parts();
  long num = 1;
  for (int i = 2; i <= p.weight(); ++i) num *= i;
  long den = 1;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (int c = 0; c < parts[r]; ++c) {
      int below = 0;
      for (std::size_t rr = r + 1; rr < parts.size() && parts[rr] > c; ++rr) ++below;
      den *= parts[r] - c - 1 + below + 1;
    }
  }
  return num / den;
}

std::vector<double> random_phases(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  std::vector<double> p(n);
  for (double& x : p) x = u(rng);
  return p;
}

}  // namespace

TEST_CASE("signature validation and norms") {
  CHECK_THROWS_AS(Signature({0, 1}), ArgumentError);
  CHECK_THROWS_AS(Signature(std::vector<int>{}), ArgumentError);
  const Signature s({2, 0, -3});
  CHECK(s.one_norm() == 5);
  CHECK(s.entry_sum() == -1);
  CHECK(Signature::padded(std::vector<int>{2, 1}, 4) == Signature({2, 1, 0, 0}));
  CHECK(is_balanced(Signature({1, 0, -1})));
  CHECK_FALSE(is_balanced(Signature({1, 0, 0})));
  CHECK(is_balanced(Signature({2, -1, -1})));
  CHECK_THROWS_AS(Partition({1, 2}), ArgumentError);
  CHECK_THROWS_AS(Partition({2, 0}), ArgumentError);
}

TEST_CASE("dim_irrep examples and length mismatch") {
  CHECK(dim_irrep(Signature({1, 0}), 2) == 2);
  CHECK(dim_irrep(Signature({1, 1}), 2) == 1);
  CHECK(dim_irrep(Signature({2, 1, 0}), 3) == 8);
  CHECK_THROWS_AS(dim_irrep(Signature({1, 0}), 3), ArgumentError);
  CHECK_THROWS_AS(weight_spectrum(Signature({1, 0}), 3), ArgumentError);
}

TEST_CASE("weight spectra match brute-force tableaux") {
  const std::vector<std::pair<std::vector<int>, int>> cases = {
      {{1}, 2}, {{2}, 2}, {{2, 1}, 3}, {{2, 2}, 3}, {{3, 1}, 4}, {{2, 1, 1}, 4}, {{3, 2, 1}, 4},
      {{1, 1, 1}, 3}, {{4}, 3}, {{2, 2, 1}, 5}};
  for (const auto& [shape, n] : cases) {
    const auto expected = ssyt_contents(shape, n);
    const auto spectrum = weight_spectrum(Signature::padded(shape, n), n);
    CHECK(spectrum_map(*spectrum) == expected);
    long total = 0;
    for (const auto& [w, m] : expected) total += m;
    CHECK(dim_irrep(Signature::padded(shape, n), n) == static_cast<std::uint64_t>(total));
  }
}

TEST_CASE("weight spectrum examples and determinant twist") {
  using M = std::map<std::vector<int>, long>;
  CHECK(spectrum_map(*weight_spectrum(Signature({1, 0}), 2)) == M{{{1, 0}, 1}, {{0, 1}, 1}});
  CHECK(spectrum_map(*weight_spectrum(Signature({1, 1}), 2)) == M{{{1, 1}, 1}});
  CHECK(spectrum_map(*weight_spectrum(Signature({2, 0}), 2)) ==
        M{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  // (1,0,-1) is (2,1,0) shifted by -1: the zero weight has multiplicity 2.
  const auto adj = weight_spectrum(Signature({1, 0, -1}), 3);
  CHECK(adj->total() == 8);
  CHECK(adj->multiplicity_of(std::vector<int>{0, 0, 0}) == 2);
}

TEST_CASE("symmetric square character equals the trace of an explicit matrix") {
  std::mt19937_64 rng(5);
  for (int n : {2, 3}) {
    const auto u = rmt::haar_unitary(n, rmt::RngStream{11, static_cast<std::uint64_t>(n)});
    const Eigen::MatrixXcd& a = u.matrix();
    // Basis e_i e_j (i <= j) of Sym^2; U acts by e_i e_j -> (U e_i)(U e_j).
    std::vector<std::pair<int, int>> basis;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) basis.emplace_back(i, j);
    }
    const int d = static_cast<int>(basis.size());
    Eigen::MatrixXcd sym = Eigen::MatrixXcd::Zero(d, d);
    for (int col = 0; col < d; ++col) {
      const auto [i, j] = basis[col];
      for (int row = 0; row < d; ++row) {
        const auto [k, l] = basis[row];
        Complex v = a(k, i) * a(l, j);
        if (k != l) v += a(l, i) * a(k, j);
        sym(row, col) = v;
      }
    }
    const auto phases = rmt::eig_phases(u);
    const Complex via_weights = schur_eval(Signature::padded(std::vector<int>{2}, n), phases);
    CHECK(std::abs(via_weights - sym.trace()) < 1e-10);
  }
}

TEST_CASE("schur_eval examples") {
  const double t1 = 0.3, t2 = 1.7;
  const std::vector<double> ph = {t1, t2};
  CHECK(std::abs(schur_eval(Signature({1, 0}), ph) -
                 (std::polar(1.0, t1) + std::polar(1.0, t2))) < 1e-14);
  CHECK(std::abs(schur_eval(Signature({2, 0}), std::vector<double>{0.0, std::numbers::pi}) -
                 1.0) < 1e-12);
  CHECK_THROWS_AS(schur_eval(Signature({1, 0}), std::vector<double>{0.0}), ArgumentError);
  for (const Signature& s : {Signature({3, 1, 0, -2}), Signature({2, 2, 1, 0}), Signature({1, 0, 0, 0})}) {
    const Complex v = schur_eval(s, std::vector<double>(4, 0.0));
    CHECK(v.imag() == 0.0);
    CHECK(v.real() == static_cast<double>(dim_irrep(s, 4)));
  }
}

TEST_CASE("bialternant agrees with weight sum and twist identity holds") {
  std::mt19937_64 rng(17);
  const std::vector<Signature> sigs = {Signature({2, 1, 0}), Signature({3, 1, -1}),
                                       Signature({2, 0, 0, -1}), Signature({1, 1, 0, 0, 0})};
  for (const auto& s : sigs) {
    const int n = s.size();
    const double dim = static_cast<double>(dim_irrep(s, n));
    int compared = 0;
    for (int point = 0; point < 100; ++point) {
      const auto ph = random_phases(rng, n);
      const Complex ws = schur_eval(s, ph);
      if (auto ba = schur_eval_bialternant(s, ph)) {
        CHECK(std::abs(ws - *ba) < 1e-8 * dim);
        ++compared;
      }
      const int last = s.last();
      std::vector<int> shifted(s.entries().begin(), s.entries().end());
      for (int& v : shifted) v -= last;
      double total = 0.0;
      for (double t : ph) total += t;
      const Complex twisted = std::polar(1.0, last * total) * schur_eval(Signature(shifted), ph);
      CHECK(std::abs(ws - twisted) < 1e-10 * dim);
    }
    CHECK(compared > 90);
  }
  // Coincident phases take the exact path.
  CHECK_FALSE(schur_eval_bialternant(Signature({1, 0}), std::vector<double>{0.5, 0.5}).has_value());
  CHECK(std::abs(schur_eval(Signature({1, 0}), std::vector<double>{0.5, 0.5},
                            CharacterMethod::bialternant) -
                 2.0 * std::polar(1.0, 0.5)) < 1e-14);
}

TEST_CASE("normalized_char and power sums") {
  const auto u = rmt::haar_unitary(3, rmt::RngStream{3, 0});
  CHECK(std::abs(normalized_char(Signature({1, 0, 0}), u.matrix()) - u.matrix().trace() / 3.0) <
        1e-12);
  CHECK(std::abs(normalized_char(Signature({2, 1, 0}), Eigen::MatrixXcd::Identity(3, 3)) - 1.0) <
        1e-14);
  const auto v = rmt::haar_unitary(2, rmt::RngStream{3, 1});
  CHECK(std::abs(normalized_char(Signature({1, 1}), v.matrix()) - v.matrix().determinant()) <
        1e-12);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2) * 1.1;
  CHECK_THROWS_AS(normalized_char(Signature({1, 0}), bad), ValidationError);
  CHECK_THROWS_AS(normalized_char(Signature({1, 0, 0}), v.matrix()), ArgumentError);

  CHECK(std::abs(power_sum_eval(1, std::vector<double>{0.0, 0.0}) - 2.0) < 1e-15);
  const double h = std::numbers::pi / 2.0;
  CHECK(std::abs(power_sum_eval(2, std::vector<double>{h, -h}) + 2.0) < 1e-14);
  const double c = 2.0 * std::numbers::pi / 3.0;
  CHECK(std::abs(power_sum_eval(3, std::vector<double>{c, -c, 0.0}) - 3.0) < 1e-14);
  CHECK_THROWS_AS(power_sum_eval(0, std::vector<double>{0.0}), ArgumentError);
}

TEST_CASE("symmetric group characters") {
  for (int K = 1; K <= 6; ++K) {
    for (const auto& mu : partitions_of(K)) {
      CHECK(sym_group_char(Partition({K}), mu) == 1);
      const int sign = (K - mu.length()) % 2 == 0 ? 1 : -1;
      CHECK(sym_group_char(Partition::from_multiplicities(std::vector<int>{K}), mu) == sign);
    }
    const Partition identity_class = Partition::from_multiplicities(std::vector<int>{K});
    for (const auto& lambda : partitions_of(K)) {
      CHECK(sym_group_char(lambda, identity_class) == hook_length_dim(lambda));
    }
  }
  CHECK(sym_group_char(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK_THROWS_AS(sym_group_char(Partition({2}), Partition({1, 1, 1})), ArgumentError);

  for (int K = 1; K <= 6; ++K) {
    const auto parts = partitions_of(K);
    const auto table = character_table(K);
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t b = 0; b < parts.size(); ++b) {
        std::int64_t sum = 0;
        for (std::size_t l = 0; l < parts.size(); ++l) sum += table[l][a] * table[l][b];
        CHECK(sum == (a == b ? centralizer_order(parts[a]) : 0));
      }
      const auto m = parts[a].multiplicities();
      CHECK(static_cast<std::uint64_t>(centralizer_order(parts[a])) == ds_moment(m, m));
    }
  }
}

TEST_CASE("power sums in the Schur basis") {
  using M = std::map<Partition, std::int64_t>;
  CHECK(power_sum_to_schur(Partition({1})) == M{{Partition({1}), 1}});
  CHECK(power_sum_to_schur(Partition({2})) == M{{Partition({2}), 1}, {Partition({1, 1}), -1}});
  CHECK(power_sum_to_schur(Partition({1, 1})) == M{{Partition({2}), 1}, {Partition({1, 1}), 1}});

  std::mt19937_64 rng(23);
  double worst = 0.0;
  for (int K = 1; K <= 5; ++K) {
    for (int n = K; n <= K + 3; ++n) {
      for (int point = 0; point < 100; ++point) {
        const auto ph = random_phases(rng, n);
        for (const auto& lambda : partitions_of(K)) {
          Complex p = 1.0;
          for (int part : lambda.parts()) p *= power_sum_eval(part, ph);
          Complex s = 0.0;
          for (const auto& [mu, coef] : power_sum_to_schur(lambda)) {
            s += static_cast<double>(coef) * schur_eval(Signature::padded(mu.parts(), n), ph);
          }
          worst = std::max(worst, std::abs(p - s) / std::pow(n, K));
        }
      }
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("ds_moment") {
  CHECK(ds_moment(std::vector<int>{1}, std::vector<int>{1}) == 1);
  CHECK(ds_moment(std::vector<int>{0, 1}, std::vector<int>{0, 1}) == 2);
  CHECK(ds_moment(std::vector<int>{2, 1}, std::vector<int>{2, 1}) == 4);
  CHECK_THROWS_AS(ds_moment(std::vector<int>{1}, std::vector<int>{2, 0, 1}), ArgumentError);
  CHECK(ds_moment(std::vector<int>{1}, std::vector<int>{2}) == 0);
}
