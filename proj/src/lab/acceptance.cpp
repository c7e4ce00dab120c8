#include "geodlab/lab/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <mutex>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "geodlab/error.hpp"
#include "geodlab/format.hpp"
#include "geodlab/geodesics/enumerate.hpp"
#include "geodlab/lab/experiments.hpp"
#include "geodlab/repr/characters.hpp"
#include "geodlab/repr/symmetric_group.hpp"
#include "geodlab/rmt/brown.hpp"
#include "geodlab/rmt/eigen_gap.hpp"
#include "geodlab/rmt/free_norm.hpp"
#include "geodlab/rmt/moments.hpp"
#include "geodlab/rmt/parallel.hpp"
#include "geodlab/rmt/stats.hpp"

namespace geodlab::lab {

namespace {

using geodesics::GeodesicTable;

// Word length giving T* >= 9 on gamma2 (T* = 9.086 at L = 45).
constexpr int kTableWordLength = 45;

struct Checks {
  bool ok = true;
  std::ostringstream detail;

  void add(const std::string& what, bool pass, const std::string& value) {
    ok = ok && pass;
    if (detail.tellp() > 0) detail << "; ";
    detail << what << '=' << value << (pass ? "" : " [fail]");
  }
  void add(const std::string& what, bool pass, double value) { add(what, pass, fmt15(value)); }
};

struct Context {
  unsigned workers = 0;
  std::optional<GeodesicTable> table;

  const GeodesicTable& gamma2_table() {
    if (!table) {
      table = geodesics::enumerate_classes(geodesics::builtin_surface("gamma2"),
                                           kTableWordLength, workers);
    }
    return *table;
  }
};

std::uint64_t seed_for(int id) { return rmt::splitmix64(kAcceptanceSeed + id); }

void ds_moments(Context& ctx, Checks& c) {
  struct Case {
    const char* name;
    std::vector<int> a, b;
    double tol;
  };
  const std::vector<Case> cases = {{"E|trU|^2", {1, 0}, {1, 0}, 0.02},
                                   {"E|trU^2|^2", {0, 1}, {0, 1}, 0.04},
                                   {"E[trU conj trU^2]", {1, 0}, {0, 1}, 0.03},
                                   {"E|trU|^4", {2, 0}, {2, 0}, 0.06}};
  std::vector<rmt::ClassFunction> fs;
  for (const auto& k : cases) fs.push_back(rmt::trace_power_product(k.a, k.b));
  const auto est = rmt::mc_class_expectations(fs, 6, 200000, seed_for(1), "accept/ds", ctx.workers);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const double target = static_cast<double>(repr::ds_moment(cases[i].a, cases[i].b));
    c.add(cases[i].name, std::abs(est[i].mean - target) <= cases[i].tol,
          fmt15(est[i].mean.real()) + "(target " + fmt15(target) + ")");
  }
  // prod j^{a_j} a_j! for a = b = (2): 1^2 * 2! = 2.
  c.add("ds_moment((2),(2))", repr::ds_moment(std::vector<int>{2}, std::vector<int>{2}) == 2, 2.0);
}

void weyl_integration(Context&, Checks& c) {
  const auto one = rmt::weyl_quadrature_expectation(
      [](std::span<const double>) { return Complex(1.0, 0.0); }, 2, 256);
  const auto m = rmt::weyl_quadrature_expectation(rmt::trace_power_product({1}, {1}), 2, 256);
  c.add("int 1", std::abs(one - 1.0) <= 1e-12, one.real());
  c.add("E|tr|^2", std::abs(m - 1.0) <= 1e-9, m.real());
}

void sym_group_characters(Context&, Checks& c) {
  bool orthogonal = true;
  for (int K = 1; K <= 6; ++K) {
    const auto parts = repr::partitions_of(K);
    const auto table = repr::character_table(K);
    for (std::size_t mu = 0; mu < parts.size(); ++mu) {
      for (std::size_t nu = 0; nu < parts.size(); ++nu) {
        std::int64_t sum = 0;
        for (std::size_t l = 0; l < parts.size(); ++l) sum += table[l][mu] * table[l][nu];
        const std::int64_t expected = mu == nu ? repr::centralizer_order(parts[mu]) : 0;
        orthogonal = orthogonal && sum == expected;
      }
    }
  }
  c.add("column orthogonality K<=6", orthogonal, orthogonal ? "exact" : "mismatch");

  rmt::Engine engine = rmt::RngStream::for_trial(seed_for(3), "accept/p2s", 0).engine();
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  double worst = 0.0;
  for (int K = 1; K <= 5; ++K) {
    for (int point = 0; point < 100; ++point) {
      std::vector<double> phases(K);
      for (double& t : phases) t = angle(engine);
      for (const auto& lambda : repr::partitions_of(K)) {
        Complex p = 1.0;
        for (int part : lambda.parts()) p *= repr::power_sum_eval(part, phases);
        Complex s = 0.0;
        for (const auto& [mu, coef] : repr::power_sum_to_schur(lambda)) {
          s += static_cast<double>(coef) *
               repr::schur_eval(repr::Signature::padded(mu.parts(), K), phases);
        }
        worst = std::max(worst, std::abs(p - s));
      }
    }
  }
  c.add("max P-to-Schur residual K<=5", worst < 1e-8, worst);
}

void eigenvalue_one(Context& ctx, Checks& c) {
  const repr::Signature unbalanced({2, 1, 0, 0, 0});
  const repr::Signature balanced({1, 0, -1});
  constexpr std::size_t trials = 1000;
  std::vector<rmt::GapToOne> gu(trials), gb(trials);
  std::vector<std::uint64_t> mult(trials);
  rmt::parallel_for(trials, ctx.workers, [&](std::size_t i) {
    const auto u5 = rmt::haar_unitary(5, rmt::RngStream::for_trial(seed_for(4), "accept/u5", i));
    gu[i] = rmt::min_gap_to_one(unbalanced, u5);
    const auto u3 = rmt::haar_unitary(3, rmt::RngStream::for_trial(seed_for(4), "accept/u3", i));
    gb[i] = rmt::min_gap_to_one(balanced, u3);
    mult[i] = rmt::cusp_multiplicity(balanced, u3);
  });
  bool none_forced = true, all_forced = true;
  double min_gap = std::numeric_limits<double>::infinity();
  std::size_t mult_two = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    none_forced = none_forced && !gu[i].forced_one && gu[i].gap > 0.0;
    min_gap = std::min(min_gap, gu[i].gap);
    all_forced = all_forced && gb[i].forced_one;
    mult_two += mult[i] == 2 ? 1 : 0;
  }
  c.add("(2,1,0,0,0) forced_one=false & gap>0", none_forced, none_forced ? "all" : "violated");
  c.add("(1,0,-1) forced_one=true", all_forced, all_forced ? "all" : "violated");
  c.add("(1,0,-1) cusp multiplicity 2", mult_two == trials,
        std::to_string(mult_two) + "/" + std::to_string(trials));
  c.add("min gap > 3^-25", min_gap > std::pow(3.0, -25), min_gap);
}

void geodesic_ground_truth(Context& ctx, Checks& c) {
  const auto model = geodesics::builtin_surface("gamma2");
  const auto t2 = geodesics::enumerate_classes(model, 2, ctx.workers);
  const double expected = 2.0 * std::log(3.0 + std::sqrt(8.0));  // 2 arccosh 3
  bool lengths = t2.classes.size() == 2;
  for (const auto& g : t2.classes) lengths = lengths && std::abs(g.length - expected) <= 1e-10;
  c.add("L=2 classes", t2.classes.size() == 2, static_cast<double>(t2.classes.size()));
  c.add("L=2 lengths 2arccosh3", lengths, t2.classes.empty() ? 0.0 : t2.classes.front().length);
  const auto t1 = geodesics::enumerate_classes(model, 1, ctx.workers);
  c.add("L=1 classes", t1.classes.empty(), static_cast<double>(t1.classes.size()));

  std::set<geodesics::CyclicWord> cusp_roots;
  for (const auto& w : model.cusp_words) {
    cusp_roots.insert(w);
    cusp_roots.insert(w.inverse());
  }
  const auto ex = geodesics::exhaustive_classes(model, 6, ctx.workers);
  std::size_t foreign = 0;
  for (const auto& w : ex.parabolic) foreign += cusp_roots.count(geodesics::primitive_root(w).root) ? 0 : 1;
  c.add("parabolic classes L<=6", true, static_cast<double>(ex.parabolic.size()));
  c.add("non-cusp parabolic roots", foreign == 0, static_cast<double>(foreign));
}

void prime_geodesic_growth(Context& ctx, Checks& c) {
  const auto& t = ctx.gamma2_table();
  const double at = pgt_ratio(t, t.tstar);
  const double before = pgt_ratio(t, t.tstar - 2.0);
  c.add("T*", t.tstar >= 9.0, t.tstar);
  c.add("ratio(T*)", at >= 0.5 && at <= 1.5, at);
  c.add("ratio(T*-2)", std::abs(at - 1.0) < std::abs(before - 1.0), before);
}

void char_decay(Context& ctx, Checks& c, int n, const repr::Signature& lambda, double bound,
                bool check_small, std::string_view tag) {
  const auto& t = ctx.gamma2_table();
  const auto grid = zeta::decay_grid(t);
  const auto runs = char_sum_runs(t, n, lambda, grid, 5, seed_for(7), tag, ctx.workers);
  std::vector<double> slopes;
  int small = 0;
  std::string slope_list;
  for (const auto& r : runs) {
    slopes.push_back(r.fit.slope);
    small += std::abs(r.s_at_tstar) < 0.1 ? 1 : 0;
    slope_list += (slope_list.empty() ? "" : " ") + fmt15(r.fit.slope);
  }
  c.add("grid points", grid.size() >= 3, static_cast<double>(grid.size()));
  const double med = rmt::median(slopes);
  c.add("median slope", med <= bound, med);
  c.add("slopes", true, "[" + slope_list + "]");
  if (check_small) c.add("|S(T*)|<0.1", small >= 4, std::to_string(small) + "/5");
}

void equidistribution(Context& ctx, Checks& c) {
  char_decay(ctx, c, 8, repr::Signature({1, 0, 0, 0, 0, 0, 0, 0}), -0.15, true, "accept/equidist");
}

void pgt_character_decay(Context& ctx, Checks& c) {
  const repr::Signature lambda({2, 1, 0, 0, 0, 0});
  c.add("unbalanced", !repr::is_balanced(lambda), lambda.to_string());
  char_decay(ctx, c, 6, lambda, -0.10, false, "accept/pgt");
  const auto sc = psi_scaling_check(ctx.gamma2_table(), lambda, zeta_cutoff(ctx.gamma2_table()));
  c.add("Psi scaling", sc.psi_rel <= 1e-10, sc.psi_rel);
  c.add("Psi1 scaling", sc.psi1_rel <= 1e-10, sc.psi1_rel);
}

void brown_measure(Context& ctx, Checks& c) {
  const auto b3 = rmt::brown_sum_experiment(3, 256, 8, seed_for(9), ctx.workers);
  const double ks = rmt::ks_statistic(b3.radii, [](double r) { return rmt::brown_radial_cdf(3, r); });
  c.add("KS k=3", ks < 0.03, ks);
  const double target = 0.5 * std::log(4.0 / 3.0);
  c.add("target formula", std::abs(rmt::brown_mean_log_target(3) - target) < 1e-12 &&
                              std::abs(target - 0.143841) < 1e-6, target);
  c.add("mean log k=3", std::abs(b3.mean_log - target) <= 0.02, b3.mean_log);
  const auto b2 = rmt::brown_sum_experiment(2, 256, 8, seed_for(9), ctx.workers);
  c.add("mean log k=2", std::abs(b2.mean_log) <= 0.02, b2.mean_log);
}

void strong_freeness(Context& ctx, Checks& c) {
  const double r14 = rmt::free_norm_ball_oracle(2, 14);
  const double r16 = rmt::free_norm_ball_oracle(2, 16);
  c.add("oracle |R14-R16|", std::abs(r14 - r16) < 0.02, std::abs(r14 - r16));
  const double limit = rmt::free_norm_limit(2, rmt::default_limit_radii());
  c.add("oracle limit", std::abs(limit - 2.0) < 0.01, limit);
  const auto big = rmt::strong_freeness_experiment(2, 500, 10, 0.05, limit, seed_for(10), ctx.workers);
  int in_band = 0;
  double mean_big = 0.0;
  for (double v : big.norms) {
    in_band += (v >= 1.85 && v <= 2.05) ? 1 : 0;
    mean_big += v / 10.0;
  }
  c.add("n=500 in [1.85,2.05]", in_band >= 9, std::to_string(in_band) + "/10");
  const auto small = rmt::strong_freeness_experiment(2, 10, 10, 0.05, limit, seed_for(10), ctx.workers);
  double mean_small = 0.0;
  for (double v : small.norms) mean_small += v / 10.0;
  c.add("mean n=500", std::abs(mean_big - limit) < std::abs(mean_small - limit),
        fmt15(mean_big) + " vs n=10 " + fmt15(mean_small));
}

void zeta_coherence(Context& ctx, Checks& c) {
  const auto& t = ctx.gamma2_table();
  const double x = zeta_cutoff(t);
  const std::vector<double> s_points = {2.0, 2.5, 3.0};
  constexpr int k_max = 8;
  const zeta::ClassCharacters trivial(t, rmt::UnitaryTuple::trivial(2, 1), repr::Signature({1}),
                                      ctx.workers);
  const zeta::ClassCharacters haar(
      t, rmt::sample_rep(2, 4, rmt::RngStream::for_trial(seed_for(11), "accept/zeta", 0)),
      repr::Signature({1, 0, 0, 0}), ctx.workers);
  for (const auto* data : {&trivial, &haar}) {
    const std::string who = data == &trivial ? "trivial" : "haar n=4";
    for (const auto& p : zeta_consistency(*data, s_points, k_max, x)) {
      c.add(who + " s=" + fmt15(p.s), p.diff <= p.bound + kZetaSlack,
            fmt15(p.diff) + " (bound " + fmt15(p.bound) + ")");
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  void (*run)(Context&, Checks&);
};

constexpr Criterion kCriteria[] = {
    {1, "ds-moments", 120, ds_moments},
    {2, "weyl-integration", 10, weyl_integration},
    {3, "sym-group-characters", 30, sym_group_characters},
    {4, "eigenvalue-one-dichotomy", 120, eigenvalue_one},
    {5, "geodesic-ground-truth", 5, geodesic_ground_truth},
    {6, "prime-geodesic-growth", 180, prime_geodesic_growth},
    {7, "equidistribution-decay", 300, equidistribution},
    {8, "pgt-character-decay", 300, pgt_character_decay},
    {9, "brown-measure", 180, brown_measure},
    {10, "strong-freeness-norm", 180, strong_freeness},
    {11, "zeta-coherence", 60, zeta_coherence},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  Context ctx;
  ctx.workers = options.workers;
  std::vector<CriterionResult> results;
  for (const auto& crit : kCriteria) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), crit.id) == options.only.end()) {
      continue;
    }
    CriterionResult r;
    r.id = crit.id;
    r.name = crit.name;
    r.budget_seconds = crit.budget;
    const auto start = std::chrono::steady_clock::now();
    Checks checks;
    try {
      crit.run(ctx, checks);
    } catch (const std::exception& e) {
      checks.add("exception", false, e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = r.seconds <= r.budget_seconds;
    if (!in_time) checks.add("runtime", false, r.seconds);
    r.pass = checks.ok && in_time;
    r.detail = checks.detail.str();
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "(%.2f s / %.0f s)", r.seconds, r.budget_seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name +
         ": " + r.detail + " " + timing;
}

}  // namespace geodlab::lab
