#include <doctest.h>

#include <cmath>

#include "geodlab/error.hpp"
#include "geodlab/geodesics/enumerate.hpp"
#include "geodlab/rmt/rng.hpp"
#include "geodlab/rmt/unitary.hpp"
#include "geodlab/zeta/decay.hpp"
#include "geodlab/zeta/zeta.hpp"

using namespace geodlab;
using namespace geodlab::zeta;

namespace {

const GeodesicTable& table20() {
  static const GeodesicTable t = geodesics::enumerate_classes(geodesics::builtin_surface("gamma2"), 20);
  return t;
}

double top_norm(const GeodesicTable& t) { return std::exp(t.tstar) * (1.0 - 1e-9); }

}  // namespace

TEST_CASE("dirichlet series with trivial character") {
  const auto& t = table20();
  const ClassCharacters one(t, rmt::UnitaryTuple::trivial(2, 1), repr::Signature({1}));
  double prev = 0.0;
  for (double x = 30.0; x < top_norm(t); x *= 1.7) {
    const Complex d = dirichlet_series(one, 2.0, x);
    CHECK(d.imag() == 0.0);
    CHECK(d.real() >= prev);
    prev = d.real();
  }
  CHECK(prev > 0.0);
  CHECK(dirichlet_series(one, 2.0, 1.0) == Complex(0.0));
  CHECK_THROWS_AS(dirichlet_series(one, 2.0, std::exp(t.tstar) * 1.01), CompletenessError);
  CHECK_THROWS_AS(dirichlet_series(one, 1.0, 40.0), ArgumentError);

  const ClassCharacters four(t, rmt::UnitaryTuple::trivial(2, 4), repr::Signature({1, 0, 0, 0}));
  const double x = top_norm(t);
  const Complex s(2.5, 1.0);
  CHECK(std::abs(dirichlet_series(four, s, x) - 4.0 * dirichlet_series(one, s, x)) <
        1e-12 * std::abs(dirichlet_series(four, s, x)));

  // Annuli add up.
  const Complex whole = dirichlet_series(one, s, x);
  const Complex split = dirichlet_series(one, s, 200.0) + dirichlet_series_annulus(one, s, 200.0, x);
  CHECK(std::abs(whole - split) < 1e-13);
  CHECK(std::abs(dirichlet_series_annulus(one, s, 200.0, x)) <=
        dirichlet_tail_majorant(one, s.real(), 200.0, x) + 1e-15);
}

TEST_CASE("psi and psi1") {
  const auto& t = table20();
  const ClassCharacters one(t, rmt::UnitaryTuple::trivial(2, 1), repr::Signature({1}));
  CHECK(psi(one, 30.0) == Complex(0.0));
  CHECK(psi1(one, 30.0) == Complex(0.0));

  const repr::Signature lam({2, 1, 0});
  const ClassCharacters three(t, rmt::UnitaryTuple::trivial(2, 3), lam);
  for (double x : {40.0, 500.0, 1500.0}) {
    CHECK(std::abs(psi(three, x) - 8.0 * psi(one, x)) < 1e-10 * std::abs(psi(three, x)));
  }

  // Between two consecutive norms psi1 is linear with slope psi.
  const auto& c = t.classes;
  for (std::size_t i : {std::size_t{5}, c.size() / 2}) {
    if (c[i + 1].norm <= c[i].norm * (1 + 1e-9)) continue;
    const double a = c[i].norm, b = c[i + 1].norm;
    const double x = a + 0.25 * (b - a), h = 0.5 * (b - a) * 0.5;
    const Complex slope = (psi1(one, x + h) - psi1(one, x)) / h;
    CHECK(std::abs(slope - psi(one, x)) < 1e-7 * std::abs(psi(one, x)));
  }

  const auto chi = rmt::sample_rep(2, 3, rmt::RngStream{3, 0});
  const Complex p = psi(t, chi, repr::Signature({1, 0, 0}), 800.0);
  CHECK(std::abs(p) <= 3.0 * psi(one, 800.0).real() + 1e-9);
}

TEST_CASE("selberg product") {
  const auto& t = table20();
  const ClassCharacters one(t, rmt::UnitaryTuple::trivial(2, 1), repr::Signature({1}));
  CHECK(selberg_zeta_partial(one, 2.0, 4, 30.0) == Complex(1.0));
  const double x = top_norm(t);
  double prev = 1.0;
  for (double y = 40.0; y < x; y *= 2.0) {
    const Complex z = selberg_zeta_partial(one, 2.0, 4, y);
    CHECK(z.imag() == 0.0);
    CHECK(z.real() > 0.0);
    CHECK(z.real() <= prev);
    prev = z.real();
  }
}

TEST_CASE("logarithmic derivative matches the series") {
  const auto& t = table20();
  const double x = top_norm(t);
  const auto chi = rmt::sample_rep(2, 2, rmt::RngStream{17, 0});
  const ClassCharacters data(t, chi, repr::Signature({1, 0}));
  for (const Complex s : {Complex(2.0, 0.0), Complex(3.0, 0.5)}) {
    constexpr double h = 1e-4;
    const Complex fd = (log_selberg_zeta_partial(data, s + h, 8, x) -
                        log_selberg_zeta_partial(data, s - h, 8, x)) /
                       (2.0 * h);
    const Complex d = dirichlet_series(data, s, x);
    CHECK(std::abs(fd - d) <= zeta_truncation_bound(data, s.real(), 8, x) + 1e-6);
  }
  CHECK(zeta_truncation_bound(data, 3.0, 8, x) < zeta_truncation_bound(data, 2.0, 8, x));
}

TEST_CASE("character sums") {
  const auto& t = table20();
  const auto grid = decay_grid(t, 50, 0.5);
  REQUIRE(grid.size() >= 3);
  CHECK(count_geodesics(t, grid.front()) >= 50);
  CHECK(grid.back() <= t.tstar);

  const ClassCharacters one(t, rmt::UnitaryTuple::trivial(2, 3), repr::Signature({2, 1, 0}));
  const auto s1 = char_sum_series(one, grid);
  for (const auto& v : s1.sums) CHECK(std::abs(v - 1.0) < 1e-12);

  const auto chi = rmt::sample_rep(2, 4, rmt::RngStream{23, 0});
  const ClassCharacters data(t, chi, repr::Signature({1, 0, 0, 0}));
  const auto s = char_sum_series(data, grid);
  for (const auto& v : s.sums) CHECK(std::abs(v) <= 1.0 + 1e-12);

  const double low[] = {1.0, 2.0};
  CHECK_THROWS_AS(char_sum_series(data, low), ArgumentError);
  const double high[] = {t.tstar + 1.0};
  CHECK_THROWS_AS(char_sum_series(data, high), CompletenessError);
}

TEST_CASE("decay fit") {
  CharSumSeries s;
  for (int i = 0; i < 10; ++i) {
    const double T = 4.0 + 0.5 * i;
    s.grid.push_back(T);
    s.counts.push_back(100);
    s.sums.push_back(std::polar(std::exp(-T / 4.0), 0.3 * i));
  }
  auto f = decay_fit(s);
  CHECK(std::abs(f.slope + 0.25) < 1e-12);
  CHECK(f.points == 10);
  for (auto& v : s.sums) v = 0.37;
  f = decay_fit(s);
  CHECK(std::abs(f.slope) < 1e-12);
  s.sums.resize(2);
  s.grid.resize(2);
  s.counts.resize(2);
  CHECK_THROWS_AS(decay_fit(s), ArgumentError);
}
