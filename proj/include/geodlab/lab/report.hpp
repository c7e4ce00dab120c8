#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "geodlab/lab/config.hpp"

namespace geodlab::lab {

struct MetricRow {
  std::string name;
  double estimate = 0.0;
  std::optional<double> stderr_;
  std::optional<double> target;
  std::optional<double> tol;
  bool pass = true;
};

/// pass iff |estimate - target| <= tol.
MetricRow band_metric(std::string name, double estimate, double target, double tol,
                      std::optional<double> stderr_ = std::nullopt);
/// pass iff estimate <= bound (target = bound, no tolerance).
MetricRow upper_metric(std::string name, double estimate, double bound,
                       std::optional<double> stderr_ = std::nullopt);
/// pass iff estimate >= bound.
MetricRow lower_metric(std::string name, double estimate, double bound,
                       std::optional<double> stderr_ = std::nullopt);
/// Recorded value with no verdict.
MetricRow info_metric(std::string name, double estimate,
                      std::optional<double> stderr_ = std::nullopt);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
};

void write_csv(std::ostream& out, const CsvTable& table);

struct ExperimentReport {
  ExperimentConfig config;
  nlohmann::ordered_json params;
  std::vector<MetricRow> metrics;
  CsvTable series;
  double wall_seconds = 0.0;
  std::string table_hash;
  std::string table_path;

  bool all_pass() const;
};

/// {experiment, params, metrics:[{name, estimate, stderr, target, tol, pass}], provenance}
nlohmann::ordered_json report_json(const ExperimentReport& report);

/// Human-readable metric table.
void print_report(std::ostream& out, const ExperimentReport& report);

}  // namespace geodlab::lab
