#include "geodlab/lab/experiments.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>

#include "geodlab/error.hpp"
#include "geodlab/format.hpp"
#include "geodlab/geodesics/surface.hpp"
#include "geodlab/lab/cache.hpp"
#include "geodlab/repr/characters.hpp"
#include "geodlab/repr/symmetric_group.hpp"
#include "geodlab/rmt/brown.hpp"
#include "geodlab/rmt/eigen_gap.hpp"
#include "geodlab/rmt/free_norm.hpp"
#include "geodlab/rmt/moments.hpp"
#include "geodlab/rmt/parallel.hpp"
#include "geodlab/rmt/stats.hpp"

namespace geodlab::lab {

using geodesics::GeodesicTable;

namespace {

std::string int_list(std::span<const int> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string str(double v) { return fmt15(v); }
std::string str(std::int64_t v) { return std::to_string(v); }

nlohmann::ordered_json base_params(const ExperimentConfig& c) {
  nlohmann::ordered_json p;
  p["seed"] = c.master_seed;
  return p;
}

CachedTable table_for(const ExperimentConfig& c) {
  return cache_table(c.surface, c.max_word_len, cache_dir(), c.workers);
}

void run_enumerate(const ExperimentConfig& c, ExperimentReport& r) {
  const auto cached = table_for(c);
  const auto& t = cached.table;
  r.table_hash = cached.hash;
  r.table_path = cached.path.string();
  r.params["surface"] = c.surface;
  r.params["L"] = c.max_word_len;

  r.metrics.push_back(info_metric("hyperbolic_classes", static_cast<double>(t.classes.size())));
  r.metrics.push_back(info_metric("parabolic_classes", static_cast<double>(t.parabolic_classes)));
  r.metrics.push_back(info_metric("tstar", t.tstar));
  r.metrics.push_back(info_metric("tstar_next_length", t.tstar_next_length));
  r.metrics.push_back(info_metric("boundary_excluded", static_cast<double>(t.boundary_excluded)));
  r.metrics.push_back(info_metric("window_increasing", t.window_increasing ? 1.0 : 0.0));
  r.metrics.push_back(info_metric("pgt_ratio_tstar", pgt_ratio(t, t.tstar)));

  r.series.columns = {"word", "trace", "length", "norm", "primitive", "root", "q", "lambda_weight"};
  for (const auto& g : t.classes) {
    r.series.add({g.word.to_string(), geodesics::int_to_string(g.trace), str(g.length),
                  str(g.norm), g.primitive ? "1" : "0", g.root.to_string(), std::to_string(g.q),
                  str(g.lambda_weight)});
  }
}

void run_haar_moments(const ExperimentConfig& c, ExperimentReport& r) {
  const auto spec = parse_moments(c.moments);
  r.params["n"] = c.n;
  r.params["moments"] = c.moments;
  r.params["trials"] = c.trials;
  const rmt::ClassFunction f = rmt::trace_power_product(spec.a, spec.b);
  const auto est = rmt::mc_class_expectation(f, c.n, c.trials, c.master_seed,
                                             "haar-moments/n=" + std::to_string(c.n), c.workers);
  const double target = static_cast<double>(repr::ds_moment(spec.a, spec.b));
  r.metrics.push_back(band_metric("moment_re", est.mean.real(), target, 4.0 * est.stderr_,
                                  est.stderr_));
  r.metrics.push_back(band_metric("moment_im", est.mean.imag(), 0.0, 4.0 * est.stderr_,
                                  est.stderr_));
  r.series.columns = {"a", "b", "mean_re", "mean_im", "stderr", "target", "trials"};
  r.series.add({int_list(spec.a), int_list(spec.b), str(est.mean.real()), str(est.mean.imag()),
                str(est.stderr_), str(target), str(est.trials)});
}

void run_weyl_check(const ExperimentConfig& c, ExperimentReport& r) {
  const auto spec = parse_moments(c.moments);
  r.params["n"] = c.n;
  r.params["grid"] = c.grid;
  r.params["moments"] = c.moments;
  const Complex one = rmt::weyl_quadrature_expectation(
      [](std::span<const double>) { return Complex(1.0, 0.0); }, c.n, c.grid);
  const Complex m =
      rmt::weyl_quadrature_expectation(rmt::trace_power_product(spec.a, spec.b), c.n, c.grid);
  const double target = static_cast<double>(repr::ds_moment(spec.a, spec.b));
  r.metrics.push_back(band_metric("normalization", one.real(), 1.0, 1e-12));
  r.metrics.push_back(band_metric("moment", m.real(), target, 1e-9));
  r.metrics.push_back(band_metric("moment_im", m.imag(), 0.0, 1e-9));
  r.series.columns = {"quantity", "value_re", "value_im", "target"};
  r.series.add({"normalization", str(one.real()), str(one.imag()), "1"});
  r.series.add({"moment", str(m.real()), str(m.imag()), str(target)});
}

void run_eig_gap(const ExperimentConfig& c, ExperimentReport& r) {
  const repr::Signature lambda(signature_entries(c));
  r.params["n"] = c.n;
  r.params["sig"] = lambda.to_string();
  r.params["trials"] = c.trials;
  const std::size_t trials = static_cast<std::size_t>(c.trials);
  std::vector<rmt::GapToOne> gaps(trials);
  std::vector<std::uint64_t> mult(trials);
  const std::string tag = "eig-gap/n=" + std::to_string(c.n);
  rmt::parallel_for(trials, c.workers, [&](std::size_t i) {
    const auto u = rmt::haar_unitary(c.n, rmt::RngStream::for_trial(c.master_seed, tag, i));
    gaps[i] = rmt::min_gap_to_one(lambda, u);
    mult[i] = rmt::cusp_multiplicity(lambda, u);
  });
  std::int64_t forced = 0;
  double min_gap = std::numeric_limits<double>::infinity();
  double mean_mult = 0.0;
  r.series.columns = {"trial", "gap", "forced_one", "cusp_multiplicity"};
  for (std::size_t i = 0; i < trials; ++i) {
    forced += gaps[i].forced_one ? 1 : 0;
    min_gap = std::min(min_gap, gaps[i].gap);
    mean_mult += static_cast<double>(mult[i]) / static_cast<double>(trials);
    r.series.add({std::to_string(i), str(gaps[i].gap), gaps[i].forced_one ? "1" : "0",
                  std::to_string(mult[i])});
  }
  const bool balanced = repr::is_balanced(lambda);
  r.metrics.push_back(band_metric("forced_one_fraction",
                                  static_cast<double>(forced) / static_cast<double>(trials),
                                  balanced ? 1.0 : 0.0, 0.0));
  r.metrics.push_back(info_metric("mean_cusp_multiplicity", mean_mult));
  if (balanced) {
    r.metrics.push_back(info_metric("min_gap", min_gap));
  } else {
    r.metrics.push_back(lower_metric("min_gap", min_gap, std::pow(3.0, -c.n * c.n)));
  }
}

void run_brown(const ExperimentConfig& c, ExperimentReport& r) {
  r.params["k"] = c.k;
  r.params["n"] = c.n;
  r.params["trials"] = c.trials;
  const auto b = rmt::brown_sum_experiment(c.k, c.n, static_cast<int>(c.trials), c.master_seed,
                                           c.workers);
  const double ks = rmt::ks_statistic(b.radii, [k = c.k](double x) {
    return rmt::brown_radial_cdf(k, x);
  });
  r.metrics.push_back(upper_metric("ks_radial", ks, 0.03));
  r.metrics.push_back(band_metric("mean_log_modulus", b.mean_log,
                                  rmt::brown_mean_log_target(c.k), 0.02));
  r.series.columns = {"trial", "mean_log"};
  for (std::size_t i = 0; i < b.trial_mean_logs.size(); ++i) {
    r.series.add({std::to_string(i), str(b.trial_mean_logs[i])});
  }
}

void run_freenorm(const ExperimentConfig& c, ExperimentReport& r) {
  r.params["k"] = c.k;
  r.params["n"] = c.n;
  r.params["trials"] = c.trials;
  const double limit = rmt::free_norm_limit(c.k, rmt::default_limit_radii());
  const auto res = rmt::strong_freeness_experiment(c.k, c.n, static_cast<int>(c.trials), 0.05,
                                                   limit, c.master_seed, c.workers);
  std::int64_t in_band = 0;
  for (double v : res.norms) in_band += (v >= limit - 0.15 && v <= limit + 0.05) ? 1 : 0;
  const double mean = std::accumulate(res.norms.begin(), res.norms.end(), 0.0) /
                      static_cast<double>(res.norms.size());
  r.metrics.push_back(band_metric("oracle_limit", limit, 2.0 * std::sqrt(c.k - 1.0), 0.01));
  r.metrics.push_back(info_metric("mean_norm", mean));
  r.metrics.push_back(lower_metric("fraction_in_band",
                                   static_cast<double>(in_band) / static_cast<double>(c.trials),
                                   0.9));
  r.series.columns = {"trial", "norm"};
  for (std::size_t i = 0; i < res.norms.size(); ++i) {
    r.series.add({std::to_string(i), str(res.norms[i])});
  }
}

void run_char_sums(const ExperimentConfig& c, ExperimentReport& r, double slope_bound) {
  const auto cached = table_for(c);
  const auto& t = cached.table;
  r.table_hash = cached.hash;
  r.table_path = cached.path.string();
  const repr::Signature lambda(signature_entries(c));
  auto grid = parse_grid(c.t_grid);
  if (grid.empty()) grid = zeta::decay_grid(t);
  r.params["surface"] = c.surface;
  r.params["L"] = c.max_word_len;
  r.params["n"] = c.n;
  r.params["sig"] = lambda.to_string();
  r.params["samples"] = c.trials;
  r.params["tstar"] = t.tstar;

  const auto runs = char_sum_runs(t, c.n, lambda, grid, static_cast<int>(c.trials),
                                  c.master_seed, experiment_name(c.experiment), c.workers);
  std::vector<double> slopes;
  std::int64_t small = 0;
  r.series.columns = {"sample", "T", "count", "s_re", "s_im", "s_abs"};
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& s = runs[i].series;
    for (std::size_t j = 0; j < s.grid.size(); ++j) {
      r.series.add({std::to_string(i), str(s.grid[j]), str(s.counts[j]), str(s.sums[j].real()),
                    str(s.sums[j].imag()), str(std::abs(s.sums[j]))});
    }
    slopes.push_back(runs[i].fit.slope);
    small += std::abs(runs[i].s_at_tstar) < 0.1 ? 1 : 0;
    r.metrics.push_back(info_metric("slope_sample_" + std::to_string(i), runs[i].fit.slope));
  }
  r.metrics.push_back(upper_metric("median_slope", rmt::median(slopes), slope_bound));
  r.metrics.push_back(info_metric("samples_abs_S_tstar_below_0.1", static_cast<double>(small)));
  if (c.experiment == Experiment::pgt_decay) {
    const double x = zeta_cutoff(t);
    const auto sc = psi_scaling_check(t, lambda, x);
    r.metrics.push_back(upper_metric("psi_scaling_rel", sc.psi_rel, 1e-10));
    r.metrics.push_back(upper_metric("psi1_scaling_rel", sc.psi1_rel, 1e-10));
    r.metrics.push_back(band_metric("pgt_ratio_tstar", pgt_ratio(t, t.tstar), 1.0, 0.5));
  }
}

void run_zeta(const ExperimentConfig& c, ExperimentReport& r) {
  const auto cached = table_for(c);
  const auto& t = cached.table;
  r.table_hash = cached.hash;
  r.table_path = cached.path.string();
  const repr::Signature lambda(signature_entries(c));
  const auto s_points = parse_double_list(c.s_points, "s");
  const double x = zeta_cutoff(t);
  r.params["surface"] = c.surface;
  r.params["L"] = c.max_word_len;
  r.params["chi"] = c.chi;
  r.params["n"] = c.n;
  r.params["sig"] = lambda.to_string();
  r.params["kmax"] = c.k_max;
  r.params["x"] = x;

  const auto chi = c.chi == "trivial"
                       ? rmt::UnitaryTuple::trivial(2, c.n)
                       : rmt::sample_rep(2, c.n, rmt::RngStream::for_trial(c.master_seed, "zeta", 0));
  const zeta::ClassCharacters data(t, chi, lambda, c.workers);
  const auto points = zeta_consistency(data, s_points, c.k_max, x);
  r.series.columns = {"s", "dlogz_re", "dlogz_im", "d_re", "d_im", "abs_diff", "tail_bound"};
  for (const auto& p : points) {
    r.series.add({str(p.s), str(p.dlogz.real()), str(p.dlogz.imag()), str(p.d.real()),
                  str(p.d.imag()), str(p.diff), str(p.bound)});
    r.metrics.push_back(upper_metric("excess_s=" + fmt15(p.s), p.diff - p.bound, kZetaSlack));
  }
}

}  // namespace

double pgt_ratio(const GeodesicTable& table, double T) {
  return static_cast<double>(geodesics::count_geodesics(table, T)) * T * std::exp(-T);
}

std::vector<CharSumRun> char_sum_runs(const GeodesicTable& table, int n,
                                      const repr::Signature& lambda,
                                      std::span<const double> grid, int samples,
                                      std::uint64_t seed, std::string_view tag,
                                      unsigned workers) {
  if (samples < 1) throw ArgumentError("char_sum_runs: samples must be >= 1");
  std::vector<CharSumRun> out(static_cast<std::size_t>(samples));
  const double tstar[] = {table.tstar};
  rmt::parallel_for(out.size(), workers, [&](std::size_t i) {
    const auto chi = rmt::sample_rep(2, n, rmt::RngStream::for_trial(seed, tag, i));
    const zeta::ClassCharacters data(table, chi, lambda, 1);
    out[i].series = zeta::char_sum_series(data, grid);
    out[i].series.seed = seed;
    out[i].fit = zeta::decay_fit(out[i].series);
    out[i].s_at_tstar = zeta::char_sum_series(data, tstar).sums.front();
  });
  return out;
}

ScalingCheck psi_scaling_check(const GeodesicTable& table, const repr::Signature& lambda,
                               double x) {
  const int n = lambda.size();
  const zeta::ClassCharacters rank_n(table, rmt::UnitaryTuple::trivial(2, n), lambda, 1);
  const zeta::ClassCharacters scalar(table, rmt::UnitaryTuple::trivial(2, 1),
                                     repr::Signature({1}), 1);
  const double dim = static_cast<double>(rank_n.dim());
  const Complex p = zeta::psi(rank_n, x), p0 = dim * zeta::psi(scalar, x);
  const Complex q = zeta::psi1(rank_n, x), q0 = dim * zeta::psi1(scalar, x);
  return {std::abs(p - p0) / std::abs(p0), std::abs(q - q0) / std::abs(q0)};
}

std::vector<ZetaPoint> zeta_consistency(const zeta::ClassCharacters& data,
                                        std::span<const double> s_points, int k_max, double x) {
  std::vector<ZetaPoint> out;
  for (double s : s_points) {
    ZetaPoint p;
    p.s = s;
    const Complex up = zeta::log_selberg_zeta_partial(data, s + kZetaStep, k_max, x);
    const Complex down = zeta::log_selberg_zeta_partial(data, s - kZetaStep, k_max, x);
    p.dlogz = (up - down) / (2.0 * kZetaStep);
    p.d = zeta::dirichlet_series(data, s, x);
    p.diff = std::abs(p.dlogz - p.d);
    p.bound = zeta::zeta_truncation_bound(data, s, k_max, x);
    out.push_back(p);
  }
  return out;
}

double zeta_cutoff(const GeodesicTable& table) { return std::exp(table.tstar) * (1.0 - 1e-6); }

ExperimentReport run_experiment(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport r;
  r.config = config;
  r.params = base_params(config);
  switch (config.experiment) {
    case Experiment::enumerate: run_enumerate(config, r); break;
    case Experiment::haar_moments: run_haar_moments(config, r); break;
    case Experiment::weyl_check: run_weyl_check(config, r); break;
    case Experiment::eig_gap: run_eig_gap(config, r); break;
    case Experiment::brown: run_brown(config, r); break;
    case Experiment::freenorm: run_freenorm(config, r); break;
    case Experiment::equidist: run_char_sums(config, r, -0.15); break;
    case Experiment::pgt_decay: run_char_sums(config, r, -0.10); break;
    case Experiment::zeta: run_zeta(config, r); break;
    case Experiment::accept:
      throw UsageError("run_experiment: use run_acceptance for the accept suite");
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void write_outputs(const ExperimentReport& report) {
  const auto& dir = report.config.out_dir;
  std::filesystem::create_directories(dir);
  const std::string stem(experiment_name(report.config.experiment));
  {
    std::ofstream csv(dir / (stem + ".csv"));
    if (!csv) throw UsageError("--out: cannot write into " + dir.string());
    write_csv(csv, report.series);
  }
  std::ofstream json(dir / (stem + ".json"));
  if (!json) throw UsageError("--out: cannot write into " + dir.string());
  json << report_json(report).dump(2) << '\n';
}

}  // namespace geodlab::lab
