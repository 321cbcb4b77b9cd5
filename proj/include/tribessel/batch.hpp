#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tribessel/oracle.hpp"
#include "tribessel/sweep.hpp"

namespace tribessel {

inline constexpr int kSchemaVersion = 1;

/// One record: kind is triple, four, wigner or legendre; every other field is
/// kept as text so rational orders such as "-3/2" survive untouched.
struct BatchJob {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> fields;

  const std::string* find(std::string_view key) const;
};

struct BatchRequest {
  int schema_version = kSchemaVersion;
  std::vector<BatchJob> jobs;
};

/// Accepts {"schema_version": 1, "jobs": [...]}, a bare array of jobs, or a
/// single job object. A job's fields may sit at top level or under "inputs",
/// so the output of a single CLI evaluation reads back as a job.
BatchRequest parse_batch_json(std::string_view text);

/// Header row naming the fields; empty cells are absent fields.
BatchRequest parse_batch_csv(std::string_view text);

struct Settings {
  double tol = 1e-10;
  OracleOptions oracle;
  Execution execution = Execution::parallel;
};

struct JobReport {
  std::size_t index = 0;
  std::string kind;
  std::vector<std::pair<std::string, std::string>> inputs;
  Status status = Status::ok;
  std::string message;
  std::optional<double> value;
  /// Exact form for Wigner symbols, e.g. "-sqrt(1/3)".
  std::string exact;
  std::string method;
  std::string formula;
  std::string kinematic_class;
  std::optional<double> error_estimate;
  bool outside_closed_form_scope = false;
  /// Every method that ran, when several were requested.
  std::vector<std::pair<std::string, double>> methods;
  /// Largest relative deviation among `methods`.
  std::optional<double> deviation;
};

struct BatchReport {
  int schema_version = kSchemaVersion;
  std::vector<JobReport> results;
  std::size_t failures = 0;
  double max_deviation = 0.0;
};

/// Evaluates one job; errors end up in the report's status, never thrown.
JobReport evaluate_job(const BatchJob& job, const Settings& settings, std::size_t index = 0);

/// Jobs run concurrently; results stay in input order.
BatchReport run_batch(const BatchRequest& request, const Settings& settings);

std::string job_to_json(const JobReport& r, int indent = 2);
std::string report_to_json(const BatchReport& r, int indent = 2);
std::string report_to_csv(const BatchReport& r);

/// 17 significant digits, enough for a lossless round trip.
std::string format_double(double v);

}  // namespace tribessel
