#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "geodlab/error.hpp"
#include "geodlab/geodesics/enumerate.hpp"
#include "geodlab/geodesics/holonomy.hpp"
#include "geodlab/geodesics/surface.hpp"
#include "geodlab/geodesics/table_io.hpp"
#include "geodlab/geodesics/word.hpp"
#include "geodlab/rmt/rng.hpp"
#include "geodlab/rmt/unitary.hpp"

using namespace geodlab;
using namespace geodlab::geodesics;

namespace {

const SurfaceModel& gamma2() {
  static const SurfaceModel m = builtin_surface("gamma2");
  return m;
}

Int abs_int(Int v) { return v < 0 ? -v : v; }

}  // namespace

TEST_CASE("builtin surface") {
  const auto& m = gamma2();
  CHECK(m.rank() == 2);
  CHECK(m.generators[0].trace() == 2);
  CHECK(m.generators[1].trace() == 2);
  CHECK(evaluate_word(m, parse_letters("aB")).trace() == -2);
  const Mat2 ab = evaluate_word(m, parse_letters("ab"));
  CHECK(ab == Mat2{5, 2, 2, 1});
  CHECK_THROWS_AS(builtin_surface("torus"), ArgumentError);
}

TEST_CASE("cyclic reduction") {
  CHECK(reduce_cyclic(parse_letters("abBa"))->to_string() == "aa");
  CHECK(reduce_cyclic(parse_letters("ba"))->to_string() == "ab");
  CHECK(reduce_cyclic(parse_letters("Aaba"))->to_string() == "ab");
  CHECK(reduce_cyclic(parse_letters("Aaba"))->to_string() == "ab");
  CHECK(reduce_cyclic(parse_letters("bAab"))->to_string() == "bb");
  CHECK_FALSE(reduce_cyclic(parse_letters("abBA")).has_value());
  CHECK_FALSE(reduce_cyclic(parse_letters("")).has_value());
  CHECK_THROWS_AS(cyclic_word("aA"), ArgumentError);
  CHECK_THROWS_AS(parse_letters("a1"), ArgumentError);
  const auto w = cyclic_word("bAbaB");
  CHECK(*reduce_cyclic(w.letters()) == w);
  CHECK(cyclic_word("ab").inverse() == cyclic_word("BA"));
  CHECK(cyclic_word("ab").power(3).to_string() == "ababab");
}

TEST_CASE("primitive roots") {
  auto r = primitive_root(cyclic_word("abab"));
  CHECK(r.root.to_string() == "ab");
  CHECK(r.q == 2);
  r = primitive_root(cyclic_word("ab"));
  CHECK(r.q == 1);
  r = primitive_root(cyclic_word("abaB"));
  CHECK(r.root == cyclic_word("abaB"));
  CHECK(r.q == 1);
  r = primitive_root(cyclic_word("aaaaaa"));
  CHECK(r.root.to_string() == "a");
  CHECK(r.q == 6);
}

TEST_CASE("traces, lengths and evaluation order") {
  CHECK(std::abs(length_from_trace(6) - 2.0 * std::acosh(3.0)) < 1e-14);
  CHECK(std::abs(length_from_trace(-6) - length_from_trace(6)) == 0.0);
  CHECK(std::abs(std::log(norm_from_trace(6)) - length_from_trace(6)) < 1e-13);

  auto stream = rmt::RngStream{11, 0}.engine();
  for (int trial = 0; trial < 200; ++trial) {
    const int len = 1 + static_cast<int>(stream() % 20);
    std::vector<Letter> letters;
    for (int i = 0; i < len; ++i) letters.push_back(static_cast<Letter>(stream() % 4));
    const Mat2 left = evaluate_word(gamma2(), letters);
    CHECK(left == evaluate_word_balanced(gamma2(), letters));
    CHECK(left.det() == 1);
    auto c = reduce_cyclic(letters);
    if (!c) continue;
    const Int t = evaluate_word(gamma2(), c->letters()).trace();
    CHECK(t == left.trace());
    CHECK(evaluate_word(gamma2(), c->inverse().letters()).trace() == t);
    if (abs_int(t) > 2) {
      const Mat2 m = evaluate_word(gamma2(), c->letters());
      const Mat2 m3 = m * m * m;
      CHECK(std::abs(length_from_trace(m3.trace()) - 3.0 * length_from_trace(t)) <
            1e-12 * length_from_trace(m3.trace()));
      CHECK(evaluate_word(gamma2(), c->power(3).letters()).trace() == m3.trace());
    }
  }
}

TEST_CASE("overflow is reported") {
  Mat2 m = gamma2().letter_matrix(0) * gamma2().letter_matrix(2);
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 200; ++i) m = m * m;
      }(),
      CapacityError);
}

TEST_CASE("enumeration at small word length") {
  const auto t1 = enumerate_classes(gamma2(), 1);
  CHECK(t1.classes.empty());
  const auto t2 = enumerate_classes(gamma2(), 2);
  REQUIRE(t2.classes.size() == 2);
  CHECK(t2.classes[0].word.to_string() == "ab");
  CHECK(t2.classes[1].word.to_string() == "AB");
  for (const auto& c : t2.classes) {
    CHECK(c.trace == 6);
    CHECK(std::abs(c.length - 3.52549434807817) < 1e-12);
    CHECK(c.primitive);
  }
  // aaB has trace -6, so the completeness threshold at L = 2 is the length
  // of ab itself.
  CHECK(t2.tstar == t2.classes[0].length);
  CHECK(t2.boundary_excluded > 0);
  CHECK(count_geodesics(t2, 3.5) == 0);
  CHECK(count_geodesics(t2, t2.tstar) == 2);
  CHECK_THROWS_AS(count_geodesics(t2, 3.6), CompletenessError);
  CHECK_THROWS_AS(count_geodesics(t2, t2.tstar + 0.01), CompletenessError);
}

TEST_CASE("enumeration agrees with exhaustive search") {
  for (int L : {3, 4, 5, 6, 7, 8}) {
    CAPTURE(L);
    const auto fast = enumerate_classes(gamma2(), L, 2);
    const auto slow = exhaustive_classes(gamma2(), L, 2);
    std::vector<GeodesicClass> expected;
    for (const auto& c : slow.hyperbolic) {
      if (abs_int(c.trace) <= fast.tstar_trace) expected.push_back(c);
    }
    CHECK(fast.classes == expected);

    const auto next = exhaustive_classes(gamma2(), L + 1, 2);
    CHECK(fast.tstar_next_length ==
          doctest::Approx(length_from_trace(next.min_trace_by_length[L + 1])).epsilon(1e-14));
    CHECK(fast.tstar <= fast.tstar_next_length + 1e-15);
    if (L >= 4) {
      bool increasing = true;
      for (int j = L - 2; j <= L + 1; ++j) {
        if (!(next.min_trace_by_length[j] > next.min_trace_by_length[j - 1])) increasing = false;
      }
      CHECK(fast.window_increasing == increasing);
    }

    CHECK(static_cast<std::size_t>(fast.parabolic_classes) == slow.parabolic.size());
    CHECK(cusp_power_classes(gamma2(), L) == slow.parabolic);

    CHECK(enumerate_classes(gamma2(), L, 1) == fast);
  }
}

TEST_CASE("table invariants") {
  const auto t = enumerate_classes(gamma2(), 14);
  std::set<CyclicWord> words;
  for (const auto& c : t.classes) {
    words.insert(c.word);
    CHECK(c.length <= t.tstar);
    CHECK(c.lambda_weight >= c.root_length());
    CHECK(std::abs(c.length - length_from_trace(c.trace)) == 0.0);
    const auto r = primitive_root(c.word);
    CHECK(r.root == c.root);
    CHECK(r.q == c.q);
    CHECK(c.primitive == (c.q == 1));
  }
  for (const auto& c : t.classes) CHECK(words.count(c.word.inverse()) == 1);
  for (std::size_t i = 1; i < t.classes.size(); ++i) {
    CHECK(t.classes[i - 1].length <= t.classes[i].length);
  }
  // Lambda tends to the primitive length as q grows.
  const auto root = cyclic_word("ab");
  const Int t1 = evaluate_word(gamma2(), root.letters()).trace();
  double prev = 1e300;
  for (int q = 1; q <= 6; ++q) {
    const auto w = root.power(q);
    const auto c = make_class(w, evaluate_word(gamma2(), w.letters()).trace());
    CHECK(c.lambda_weight > length_from_trace(t1));
    CHECK(c.lambda_weight < prev);
    prev = c.lambda_weight;
  }
  CHECK(prev - length_from_trace(t1) < 1e-8);
}

TEST_CASE("count is monotone in T") {
  const auto t = enumerate_classes(gamma2(), 20);
  std::int64_t prev = 0;
  for (double T = 3.0; T < t.tstar; T += 0.25) {
    const auto c = count_geodesics(t, T);
    CHECK(c >= prev);
    prev = c;
  }
}

TEST_CASE("holonomy") {
  const auto chi = rmt::sample_rep(2, 3, rmt::RngStream{5, 0});
  const auto w = cyclic_word("abAAb");
  Eigen::MatrixXcd m = chi[0].matrix() * chi[1].matrix() * chi[0].matrix().adjoint() *
                       chi[0].matrix().adjoint() * chi[1].matrix();
  CHECK((holonomy_matrix(chi, w.letters()) - m).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(holonomy_trace(chi, w, repr::Signature({1, 0, 0})) - m.trace()) < 1e-10);
  const auto triv = rmt::UnitaryTuple::trivial(2, 3);
  CHECK(std::abs(holonomy_trace(triv, w, repr::Signature({2, 1, 0})) - 8.0) < 1e-12);
  CHECK(std::abs(normalized_holonomy_trace(triv, w, repr::Signature({2, 1, 0})) - 1.0) < 1e-12);
  CHECK_THROWS_AS(holonomy_trace(chi, w, repr::Signature({1, 0})), ArgumentError);
  CHECK_THROWS_AS(holonomy_matrix(chi, parse_letters("c")), ArgumentError);
  // Conjugation invariance: every rotation has the same trace.
  const auto letters = w.letters();
  for (std::size_t s = 1; s < letters.size(); ++s) {
    std::vector<Letter> rot(letters.begin() + s, letters.end());
    rot.insert(rot.end(), letters.begin(), letters.begin() + s);
    CHECK(std::abs(holonomy_matrix(chi, rot).trace() - m.trace()) < 1e-12);
  }
}

TEST_CASE("table io") {
  const auto t = enumerate_classes(gamma2(), 12);
  std::stringstream ss;
  write_table(ss, t);
  const std::string text = ss.str();
  std::istringstream in(text);
  CHECK(read_table(in) == t);
  std::istringstream hin(text);
  const auto h = read_header(hin);
  CHECK(h.surface == "gamma2");
  CHECK(h.max_word_len == 12);

  auto expect_integrity = [](std::string bad) {
    std::istringstream is(bad);
    CHECK_THROWS_AS(read_table(is), IntegrityError);
  };
  std::string bad = text;
  bad.replace(bad.find("\nab;6;"), 6, "\nab;7;");
  expect_integrity(bad);
  expect_integrity(text.substr(0, text.size() / 2));
  bad = text;
  bad.replace(bad.find("tstar=6.5"), 9, "tstar=6.6");
  expect_integrity(bad);
  expect_integrity("GEODTABLE v2\n");
  expect_integrity("");

  const auto dir = std::filesystem::temp_directory_path() / "geodlab_test_table_io";
  std::filesystem::create_directories(dir);
  save_table(dir / "t.geodtable", t);
  CHECK(load_table(dir / "t.geodtable") == t);
  std::filesystem::remove_all(dir);
}
