#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace geodlab::lab {

enum class Experiment {
  enumerate,
  haar_moments,
  weyl_check,
  eig_gap,
  brown,
  freenorm,
  equidist,
  pgt_decay,
  zeta,
  accept,
};

std::string_view experiment_name(Experiment e);
/// Throws UsageError for unknown names.
Experiment parse_experiment(std::string_view name);
const std::vector<Experiment>& all_experiments();

/// Raw settings; 0 / empty means "use the experiment's default".
struct ExperimentConfig {
  Experiment experiment = Experiment::enumerate;
  std::string surface = "gamma2";
  int n = 0;
  int r = 2;
  int k = 0;
  std::string signature;  ///< "2,1" (padded with zeros to n) or a full-length list
  int max_word_len = 0;
  std::string t_grid;     ///< "start:stop:step" or "T1,T2,..."; empty = decay grid
  std::int64_t trials = 0;
  std::uint64_t master_seed = 1;
  std::string moments;    ///< "a=1;b=1" (a_j, b_j for j = 1, 2, ...)
  int grid = 0;           ///< Weyl quadrature points per torus dimension
  std::string s_points;   ///< zeta: "2,2.5,3"
  int k_max = -1;
  std::string chi;        ///< zeta: "haar" or "trivial"
  std::string only;       ///< accept: comma list of criterion ids
  unsigned workers = 0;
  std::filesystem::path out_dir = ".";
  bool write_files = true;
};

/// Fills experiment defaults and validates every field the experiment uses.
/// Throws UsageError naming the offending field.
ExperimentConfig resolve(ExperimentConfig config);

std::vector<int> parse_int_list(std::string_view text, std::string_view field);
std::vector<double> parse_double_list(std::string_view text, std::string_view field);

struct MomentSpec {
  std::vector<int> a;  ///< padded to equal length with b
  std::vector<int> b;
};
MomentSpec parse_moments(std::string_view text);

/// Signature text expanded to length n.
std::vector<int> signature_entries(const ExperimentConfig& config);

/// Explicit grid from "start:stop:step" or a comma list; empty text gives an empty grid.
std::vector<double> parse_grid(std::string_view text);

}  // namespace geodlab::lab
