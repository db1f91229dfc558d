#include "orfkit/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "orfkit/errors.hpp"
#include "orfkit/rng.hpp"

namespace orfkit {
namespace {

using Json = nlohmann::ordered_json;

bool same(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

Json number(double v) { return std::isnan(v) ? Json(nullptr) : Json(v); }

double number_from(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json config_value(const ConfigValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

ConfigValue config_from(const Json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) return static_cast<double>(j.get<std::int64_t>());
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  throw InvalidArgument("report config values must be scalars");
}

}  // namespace

bool operator==(const ReportRecord& a, const ReportRecord& b) {
  if (a.label != b.label || a.extras.size() != b.extras.size()) return false;
  for (std::size_t i = 0; i < a.extras.size(); ++i) {
    if (!same(a.extras[i], b.extras[i])) return false;
  }
  return same(a.z, b.z) && same(a.theory, b.theory) && same(a.empirical, b.empirical) &&
         same(a.abs_error, b.abs_error) && same(a.stderr_, b.stderr_);
}

bool operator==(const ExperimentReport& a, const ExperimentReport& b) {
  if (a.summary.size() != b.summary.size() || a.trial_values.size() != b.trial_values.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.summary.size(); ++i) {
    if (a.summary[i].first != b.summary[i].first || !same(a.summary[i].second, b.summary[i].second)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.trial_values.size(); ++i) {
    if (!same(a.trial_values[i], b.trial_values[i])) return false;
  }
  return a.command == b.command && a.config == b.config && a.extra_columns == b.extra_columns &&
         a.records == b.records && a.tool_version == b.tool_version && a.rng == b.rng;
}

Aggregate ExperimentReport::aggregate() const {
  Aggregate agg;
  double sum = 0.0;
  double worst = 0.0;
  for (const auto& r : records) {
    if (std::isnan(r.abs_error)) continue;
    sum += r.abs_error;
    worst = std::max(worst, r.abs_error);
    ++agg.compared;
  }
  if (agg.compared > 0) {
    agg.max_abs_error = worst;
    agg.mean_abs_error = sum / agg.compared;
  }
  return agg;
}

ReportRecord& ExperimentReport::add(double z, double theory, double empirical, double stderr_,
                                    std::string label, std::vector<double> extras) {
  if (extras.size() != extra_columns.size()) {
    throw InvalidArgument("report record has " + std::to_string(extras.size()) +
                          " extra values, expected " + std::to_string(extra_columns.size()));
  }
  ReportRecord r;
  r.z = z;
  r.theory = theory;
  r.empirical = empirical;
  r.abs_error = std::abs(empirical - theory);
  r.stderr_ = stderr_;
  r.label = std::move(label);
  r.extras = std::move(extras);
  records.push_back(std::move(r));
  return records.back();
}

ExperimentReport make_report(std::string command) {
  ExperimentReport r;
  r.command = std::move(command);
  r.tool_version = ORFKIT_VERSION;
  r.rng = std::string(rng_identifier());
  return r;
}

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw InvalidArgument("unknown report format '" + name + "' (expected json or csv)");
}

std::string to_json(const ExperimentReport& report) {
  Json j;
  j["command"] = report.command;
  j["tool_version"] = report.tool_version;
  j["rng"] = report.rng;
  Json config = Json::object();
  for (const auto& [key, value] : report.config) config[key] = config_value(value);
  j["config"] = std::move(config);
  j["extra_columns"] = report.extra_columns;
  Json records = Json::array();
  for (const auto& r : report.records) {
    Json row;
    row["z"] = number(r.z);
    row["theory"] = number(r.theory);
    row["empirical"] = number(r.empirical);
    row["abs_error"] = number(r.abs_error);
    row["stderr"] = number(r.stderr_);
    row["label"] = r.label;
    Json extras = Json::array();
    for (double v : r.extras) extras.push_back(number(v));
    row["extras"] = std::move(extras);
    records.push_back(std::move(row));
  }
  j["records"] = std::move(records);
  Json summary = Json::object();
  for (const auto& [key, value] : report.summary) summary[key] = number(value);
  j["summary"] = std::move(summary);
  Json trials = Json::array();
  for (double v : report.trial_values) trials.push_back(number(v));
  j["trial_values"] = std::move(trials);
  const Aggregate agg = report.aggregate();
  j["aggregate"] = {{"max_abs_error", number(agg.max_abs_error)},
                    {"mean_abs_error", number(agg.mean_abs_error)},
                    {"compared", agg.compared}};
  return j.dump(2) + "\n";
}

ExperimentReport report_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw IoError(std::string("invalid report JSON: ") + e.what());
  }
  ExperimentReport r;
  r.command = j.at("command").get<std::string>();
  r.tool_version = j.at("tool_version").get<std::string>();
  r.rng = j.at("rng").get<std::string>();
  for (const auto& [key, value] : j.at("config").items()) r.config.emplace_back(key, config_from(value));
  r.extra_columns = j.at("extra_columns").get<std::vector<std::string>>();
  for (const auto& row : j.at("records")) {
    ReportRecord rec;
    rec.z = number_from(row.at("z"));
    rec.theory = number_from(row.at("theory"));
    rec.empirical = number_from(row.at("empirical"));
    rec.abs_error = number_from(row.at("abs_error"));
    rec.stderr_ = number_from(row.at("stderr"));
    rec.label = row.at("label").get<std::string>();
    for (const auto& v : row.at("extras")) rec.extras.push_back(number_from(v));
    r.records.push_back(std::move(rec));
  }
  for (const auto& [key, value] : j.at("summary").items()) r.summary.emplace_back(key, number_from(value));
  for (const auto& v : j.at("trial_values")) r.trial_values.push_back(number_from(v));
  return r;
}

std::string to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "z,theory,empirical,abs_error,stderr,label";
  for (const auto& c : report.extra_columns) out << ',' << csv_escape(c);
  out << '\n';
  for (const auto& r : report.records) {
    out << format_double(r.z) << ',' << format_double(r.theory) << ','
        << format_double(r.empirical) << ',' << format_double(r.abs_error) << ','
        << format_double(r.stderr_) << ',' << csv_escape(r.label);
    for (double v : r.extras) out << ',' << format_double(v);
    out << '\n';
  }
  return out.str();
}

void emit_report(const ExperimentReport& report, ReportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open report file for writing: " + path);
  out << (format == ReportFormat::json ? to_json(report) : to_csv(report));
  out.flush();
  if (!out) throw IoError("write failure on report file: " + path);
}

}  // namespace orfkit
