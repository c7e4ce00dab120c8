#include "geodlab/lab/config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "geodlab/error.hpp"
#include "geodlab/repr/signature.hpp"

namespace geodlab::lab {

namespace {

struct NamedExperiment {
  Experiment e;
  std::string_view name;
};

constexpr NamedExperiment kNames[] = {
    {Experiment::enumerate, "enumerate"}, {Experiment::haar_moments, "haar-moments"},
    {Experiment::weyl_check, "weyl-check"}, {Experiment::eig_gap, "eig-gap"},
    {Experiment::brown, "brown"},         {Experiment::freenorm, "freenorm"},
    {Experiment::equidist, "equidist"},   {Experiment::pgt_decay, "pgt-decay"},
    {Experiment::zeta, "zeta"},           {Experiment::accept, "accept"},
};

[[noreturn]] void bad(std::string_view field, const std::string& why) {
  throw UsageError("--" + std::string(field) + ": " + why);
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double to_double(const std::string& s, std::string_view field) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    bad(field, "'" + s + "' is not a number");
  }
  if (pos != s.size() || !std::isfinite(v)) bad(field, "'" + s + "' is not a finite number");
  return v;
}

int to_int(const std::string& s, std::string_view field) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    bad(field, "'" + s + "' is not an integer");
  }
  if (pos != s.size()) bad(field, "'" + s + "' is not an integer");
  return v;
}

void require_range(std::string_view field, long long v, long long lo, long long hi) {
  if (v < lo || v > hi) {
    bad(field, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                   std::to_string(hi) + "]");
  }
}

template <typename T>
void default_to(T& field, T value) {
  if (field == T{}) field = value;
}

}  // namespace

std::string_view experiment_name(Experiment e) {
  for (const auto& [x, name] : kNames) {
    if (x == e) return name;
  }
  return "unknown";
}

Experiment parse_experiment(std::string_view name) {
  for (const auto& [x, n] : kNames) {
    if (n == name) return x;
  }
  throw UsageError("unknown experiment '" + std::string(name) + "'");
}

const std::vector<Experiment>& all_experiments() {
  static const std::vector<Experiment> all = [] {
    std::vector<Experiment> v;
    for (const auto& [x, name] : kNames) v.push_back(x);
    return v;
  }();
  return all;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view field) {
  if (text.empty()) bad(field, "empty list");
  std::vector<int> out;
  for (const auto& tok : split(text, ',')) out.push_back(to_int(tok, field));
  return out;
}

std::vector<double> parse_double_list(std::string_view text, std::string_view field) {
  if (text.empty()) bad(field, "empty list");
  std::vector<double> out;
  for (const auto& tok : split(text, ',')) out.push_back(to_double(tok, field));
  return out;
}

MomentSpec parse_moments(std::string_view text) {
  MomentSpec spec;
  bool seen_a = false, seen_b = false;
  for (const auto& part : split(text, ';')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) bad("moments", "expected a=...;b=..., got '" + part + "'");
    const std::string key = part.substr(0, eq);
    auto values = parse_int_list(part.substr(eq + 1), "moments");
    for (int v : values) {
      if (v < 0) bad("moments", "exponents must be nonnegative");
    }
    if (key == "a") {
      spec.a = values;
      seen_a = true;
    } else if (key == "b") {
      spec.b = values;
      seen_b = true;
    } else {
      bad("moments", "unknown key '" + key + "'");
    }
  }
  if (!seen_a || !seen_b) bad("moments", "both a and b are required");
  const std::size_t len = std::max(spec.a.size(), spec.b.size());
  spec.a.resize(len, 0);
  spec.b.resize(len, 0);
  return spec;
}

std::vector<double> parse_grid(std::string_view text) {
  if (text.empty()) return {};
  if (text.find(':') != std::string_view::npos) {
    auto parts = split(text, ':');
    if (parts.size() != 3) bad("T", "range form is start:stop:step");
    const double start = to_double(parts[0], "T"), stop = to_double(parts[1], "T"),
                 step = to_double(parts[2], "T");
    if (!(step > 0.0) || stop < start) bad("T", "need step > 0 and stop >= start");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
      const double t = start + step * i;
      if (t > stop + 1e-12 * std::abs(stop)) break;
      grid.push_back(t);
    }
    return grid;
  }
  auto grid = parse_double_list(text, "T");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) bad("T", "grid must be strictly ascending");
  }
  return grid;
}

std::vector<int> signature_entries(const ExperimentConfig& c) {
  auto head = parse_int_list(c.signature, "sig");
  if (static_cast<int>(head.size()) > c.n) {
    bad("sig", "signature has " + std::to_string(head.size()) + " entries but n = " +
                   std::to_string(c.n));
  }
  // Negative entries require the full length to be explicit.
  if (static_cast<int>(head.size()) < c.n &&
      std::any_of(head.begin(), head.end(), [](int v) { return v < 0; })) {
    bad("sig", "signatures with negative entries must list all n entries");
  }
  try {
    const auto sig = repr::Signature::padded(head, c.n);
    return {sig.entries().begin(), sig.entries().end()};
  } catch (const ArgumentError& e) {
    bad("sig", e.what());
  }
}

ExperimentConfig resolve(ExperimentConfig c) {
  switch (c.experiment) {
    case Experiment::enumerate:
      if (c.max_word_len == 0) bad("L", "required for enumerate");
      break;
    case Experiment::haar_moments:
      default_to(c.n, 6);
      default_to(c.trials, std::int64_t{200000});
      default_to(c.moments, std::string("a=1;b=1"));
      break;
    case Experiment::weyl_check:
      default_to(c.n, 2);
      default_to(c.grid, 256);
      default_to(c.moments, std::string("a=1;b=1"));
      require_range("n", c.n, 1, 3);
      require_range("grid", c.grid, 2, 4096);
      break;
    case Experiment::eig_gap:
      default_to(c.n, 5);
      default_to(c.signature, std::string("2,1"));
      default_to(c.trials, std::int64_t{1000});
      break;
    case Experiment::brown:
      default_to(c.k, 3);
      default_to(c.n, 256);
      default_to(c.trials, std::int64_t{8});
      break;
    case Experiment::freenorm:
      default_to(c.k, 2);
      default_to(c.n, 500);
      default_to(c.trials, std::int64_t{10});
      break;
    case Experiment::equidist:
      default_to(c.n, 8);
      default_to(c.signature, std::string("1"));
      default_to(c.max_word_len, 45);
      default_to(c.trials, std::int64_t{5});
      break;
    case Experiment::pgt_decay:
      default_to(c.n, 6);
      default_to(c.signature, std::string("2,1"));
      default_to(c.max_word_len, 45);
      default_to(c.trials, std::int64_t{5});
      break;
    case Experiment::zeta:
      default_to(c.chi, std::string("haar"));
      default_to(c.n, c.chi == "trivial" ? 1 : 4);
      default_to(c.signature, std::string("1"));
      default_to(c.max_word_len, 45);
      default_to(c.s_points, std::string("2,2.5,3"));
      if (c.k_max < 0) c.k_max = 8;
      if (c.chi != "haar" && c.chi != "trivial") bad("chi", "expected haar or trivial");
      for (double s : parse_double_list(c.s_points, "s")) {
        if (!(s > 1.0)) bad("s", "every s must exceed 1");
      }
      require_range("kmax", c.k_max, 0, 1000);
      break;
    case Experiment::accept:
      if (!c.only.empty()) {
        for (int id : parse_int_list(c.only, "only")) require_range("only", id, 1, 11);
      }
      return c;
  }

  if (c.experiment == Experiment::enumerate || c.experiment == Experiment::equidist ||
      c.experiment == Experiment::pgt_decay || c.experiment == Experiment::zeta) {
    if (c.surface != "gamma2") bad("surface", "unknown surface '" + c.surface + "' (gamma2)");
    require_range("L", c.max_word_len, 1, 400);
  }
  if (c.experiment == Experiment::equidist || c.experiment == Experiment::pgt_decay) {
    require_range("r", c.r, 2, 2);
    parse_grid(c.t_grid);
  }
  if (c.experiment != Experiment::enumerate) require_range("n", c.n, 1, 4096);
  if (c.experiment == Experiment::brown || c.experiment == Experiment::freenorm) {
    require_range("k", c.k, 2, 64);
  }
  if (c.experiment == Experiment::haar_moments || c.experiment == Experiment::weyl_check) {
    parse_moments(c.moments);
  }
  if (!c.signature.empty() && c.experiment != Experiment::enumerate) signature_entries(c);
  if (c.trials < 0) bad("trials", "must be positive");
  if (c.experiment != Experiment::enumerate && c.experiment != Experiment::weyl_check &&
      c.experiment != Experiment::zeta) {
    const std::int64_t min_trials = c.experiment == Experiment::haar_moments ? 2 : 1;
    require_range("trials", c.trials, min_trials, 100000000);
  }
  return c;
}

}  // namespace geodlab::lab
