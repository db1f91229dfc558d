#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace orfkit {

/// Non-negative integers are stored as uint64 so that JSON round trips are exact.
using ConfigValue = std::variant<std::uint64_t, double, bool, std::string>;

/// One row of plot data. Missing values are NaN; they are written as empty
/// CSV cells and JSON null.
struct ReportRecord {
  double z = std::numeric_limits<double>::quiet_NaN();
  double theory = std::numeric_limits<double>::quiet_NaN();
  double empirical = std::numeric_limits<double>::quiet_NaN();
  double abs_error = std::numeric_limits<double>::quiet_NaN();
  double stderr_ = std::numeric_limits<double>::quiet_NaN();
  std::string label;
  std::vector<double> extras;  ///< one value per ExperimentReport::extra_columns

  friend bool operator==(const ReportRecord&, const ReportRecord&);
};

struct Aggregate {
  double max_abs_error = std::numeric_limits<double>::quiet_NaN();
  double mean_abs_error = std::numeric_limits<double>::quiet_NaN();
  int compared = 0;
};

struct ExperimentReport {
  std::string command;
  std::vector<std::pair<std::string, ConfigValue>> config;
  std::vector<std::string> extra_columns;
  std::vector<ReportRecord> records;
  std::vector<std::pair<std::string, double>> summary;
  std::vector<double> trial_values;
  std::string tool_version;
  std::string rng;

  /// Statistics of abs_error over records that carry one.
  Aggregate aggregate() const;

  /// Appends a record, filling abs_error when both values are present.
  ReportRecord& add(double z, double theory, double empirical, double stderr_,
                    std::string label = {}, std::vector<double> extras = {});

  friend bool operator==(const ExperimentReport&, const ExperimentReport&);
};

/// Report stamped with tool version and RNG identity.
ExperimentReport make_report(std::string command);

enum class ReportFormat { json, csv };

ReportFormat parse_format(const std::string& name);

std::string to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const std::string& text);

/// Header "z,theory,empirical,abs_error,stderr,label[,extras...]" then one
/// line per record; numbers use %.17g.
std::string to_csv(const ExperimentReport& report);

/// Throws IoError naming the path on failure.
void emit_report(const ExperimentReport& report, ReportFormat format, const std::string& path);

}  // namespace orfkit
