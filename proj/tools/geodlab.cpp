// geodlab: command-line driver for the experiments and the acceptance suite.
//
// Exit codes: 0 success, 1 metric failure, 2 usage error, 3 integrity or
// capacity error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "geodlab/error.hpp"
#include "geodlab/lab/acceptance.hpp"
#include "geodlab/lab/config.hpp"
#include "geodlab/lab/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMetric = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIntegrity = 3;

using geodlab::lab::Experiment;
using geodlab::lab::ExperimentConfig;

void add_common(CLI::App* sub, ExperimentConfig& c) {
  sub->add_option("--seed", c.master_seed, "master seed");
  sub->add_option("--workers", c.workers, "worker threads (0 = all cores)");
  sub->add_option("--out", c.out_dir, "directory for <experiment>.csv and .json");
  sub->add_flag("!--no-files", c.write_files, "print the summary only");
}

void add_options(CLI::App* sub, Experiment e, ExperimentConfig& c) {
  const bool geodesic = e == Experiment::enumerate || e == Experiment::equidist ||
                        e == Experiment::pgt_decay || e == Experiment::zeta;
  if (geodesic) {
    sub->add_option("--surface", c.surface, "surface model (gamma2)");
    sub->add_option("--L", c.max_word_len, "maximal word length")->check(CLI::PositiveNumber);
  }
  if (e != Experiment::enumerate) {
    sub->add_option("--n", c.n, "matrix size")->check(CLI::PositiveNumber);
  }
  if (e == Experiment::eig_gap || e == Experiment::equidist || e == Experiment::pgt_decay ||
      e == Experiment::zeta) {
    sub->add_option("--sig", c.signature, "signature, e.g. 2,1 (zero padded to n)");
  }
  if (e == Experiment::equidist || e == Experiment::pgt_decay) {
    sub->add_option("--r", c.r, "rank of the representation (2 for gamma2)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--T", c.t_grid, "cutoff grid start:stop:step or T1,T2,...");
  }
  if (e == Experiment::brown || e == Experiment::freenorm) {
    sub->add_option("--k", c.k, "summands")->check(CLI::PositiveNumber);
  }
  if (e == Experiment::haar_moments || e == Experiment::weyl_check) {
    sub->add_option("--moments", c.moments, "exponents, e.g. a=1;b=1 or a=0,1;b=0,1");
  }
  if (e == Experiment::weyl_check) {
    sub->add_option("--grid", c.grid, "points per torus dimension")->check(CLI::PositiveNumber);
  }
  if (e != Experiment::enumerate && e != Experiment::weyl_check && e != Experiment::zeta) {
    sub->add_option("--trials", c.trials, "trials or independent representation samples")
        ->check(CLI::PositiveNumber);
  }
  if (e == Experiment::zeta) {
    sub->add_option("--s", c.s_points, "real points s > 1, e.g. 2,2.5,3");
    sub->add_option("--kmax", c.k_max, "largest k in the Selberg product");
    sub->add_option("--chi", c.chi, "haar or trivial");
  }
}

int run_accept(const ExperimentConfig& c) {
  geodlab::lab::AcceptanceOptions opts;
  if (!c.only.empty()) opts.only = geodlab::lab::parse_int_list(c.only, "only");
  opts.workers = c.workers;
  opts.on_result = [](const geodlab::lab::CriterionResult& r) {
    std::cout << geodlab::lab::format_result(r) << std::endl;
  };
  const auto results = geodlab::lab::run_acceptance(opts);
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? kExitOk : kExitMetric;
}

std::string describe(Experiment e) {
  switch (e) {
    case Experiment::enumerate: return "closed geodesic classes up to word length L";
    case Experiment::haar_moments: return "Monte Carlo trace moments against the exact values";
    case Experiment::weyl_check: return "Weyl-integration quadrature on U(n), n <= 3";
    case Experiment::eig_gap: return "distance of spec pi_lambda(U) from 1 under Haar sampling";
    case Experiment::brown: return "eigenvalues of a sum of k Haar unitaries vs the Brown measure";
    case Experiment::freenorm: return "norm of a sum of k Haar unitaries vs the free group limit";
    case Experiment::equidist: return "normalized character sums over geodesics, standard rep";
    case Experiment::pgt_decay: return "character sums for a general signature plus prime geodesic counts";
    case Experiment::zeta: return "log-derivative of the partial Selberg zeta vs its Dirichlet series";
    case Experiment::accept: return "run the acceptance criteria";
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geodlab: random unitary representations, geodesics and Selberg zeta data"};
  app.require_subcommand(1);
  ExperimentConfig config;
  for (Experiment e : geodlab::lab::all_experiments()) {
    const std::string name(geodlab::lab::experiment_name(e));
    CLI::App* sub = app.add_subcommand(name, describe(e));
    add_common(sub, config);
    if (e == Experiment::accept) {
      sub->add_option("--only", config.only, "comma list of criterion ids");
    } else {
      add_options(sub, e, config);
    }
    sub->callback([&config, e] { config.experiment = e; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    config = geodlab::lab::resolve(config);
    if (config.experiment == Experiment::accept) return run_accept(config);
    const auto report = geodlab::lab::run_experiment(config);
    if (config.write_files) geodlab::lab::write_outputs(report);
    geodlab::lab::print_report(std::cout, report);
    return report.all_pass() ? kExitOk : kExitMetric;
  } catch (const geodlab::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const geodlab::CompletenessError& e) {
    std::cerr << "completeness error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const geodlab::ArgumentError& e) {
    std::cerr << "argument error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const geodlab::IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    return kExitIntegrity;
  } catch (const geodlab::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitIntegrity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMetric;
  }
}
