#include "geodlab/lab/report.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "geodlab/error.hpp"
#include "geodlab/format.hpp"

namespace geodlab::lab {

namespace {

nlohmann::ordered_json number_or_null(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string show(const std::optional<double>& v) { return v ? fmt15(*v) : "-"; }

}  // namespace

MetricRow band_metric(std::string name, double estimate, double target, double tol,
                      std::optional<double> stderr_) {
  return {std::move(name), estimate, stderr_, target, tol, std::abs(estimate - target) <= tol};
}

MetricRow upper_metric(std::string name, double estimate, double bound,
                       std::optional<double> stderr_) {
  return {std::move(name), estimate, stderr_, bound, std::nullopt, estimate <= bound};
}

MetricRow lower_metric(std::string name, double estimate, double bound,
                       std::optional<double> stderr_) {
  return {std::move(name), estimate, stderr_, bound, std::nullopt, estimate >= bound};
}

MetricRow info_metric(std::string name, double estimate, std::optional<double> stderr_) {
  return {std::move(name), estimate, stderr_, std::nullopt, std::nullopt, true};
}

void CsvTable::add(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw ArgumentError("csv row width does not match the header");
  rows.push_back(std::move(row));
}

void write_csv(std::ostream& out, const CsvTable& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << csv_escape(table.columns[i]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
    out << '\n';
  }
}

bool ExperimentReport::all_pass() const {
  for (const auto& m : metrics) {
    if (!m.pass) return false;
  }
  return true;
}

nlohmann::ordered_json report_json(const ExperimentReport& r) {
  nlohmann::ordered_json j;
  j["experiment"] = std::string(experiment_name(r.config.experiment));
  j["params"] = r.params;
  j["metrics"] = nlohmann::ordered_json::array();
  for (const auto& m : r.metrics) {
    nlohmann::ordered_json row;
    row["name"] = m.name;
    row["estimate"] = number_or_null(m.estimate);
    row["stderr"] = number_or_null(m.stderr_);
    row["target"] = number_or_null(m.target);
    row["tol"] = number_or_null(m.tol);
    row["pass"] = m.pass;
    j["metrics"].push_back(row);
  }
  nlohmann::ordered_json prov;
  prov["master_seed"] = r.config.master_seed;
  prov["table_hash"] = r.table_hash.empty() ? nlohmann::ordered_json(nullptr)
                                            : nlohmann::ordered_json(r.table_hash);
  prov["table_path"] = r.table_path.empty() ? nlohmann::ordered_json(nullptr)
                                            : nlohmann::ordered_json(r.table_path);
  prov["wall_time_s"] = r.wall_seconds;
  j["provenance"] = prov;
  return j;
}

void print_report(std::ostream& out, const ExperimentReport& r) {
  out << experiment_name(r.config.experiment) << " (" << fmt15(r.wall_seconds) << " s)\n";
  for (const auto& m : r.metrics) {
    out << "  " << (m.pass ? "ok  " : "FAIL") << ' ' << std::left << std::setw(34) << m.name
        << " estimate=" << fmt15(m.estimate) << " stderr=" << show(m.stderr_)
        << " target=" << show(m.target) << " tol=" << show(m.tol) << '\n';
  }
}

}  // namespace geodlab::lab
