#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "eqkt/report.hpp"

namespace eqkt {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportSummary {
  long total = 0;
  long passed = 0;
  long failed = 0;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct ReportDocument {
  std::string version = kToolVersion;
  std::string command;
  std::string timestamp;
  /// Serialized records: verification reports, or catalog entries.
  std::vector<json> results;
  ReportSummary summary;

  /// Fills summary from the "pass" field of each record (absent counts as passed).
  void summarize();

  json to_json() const;
  static ReportDocument from_json(const json& j);

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// 0 when nothing failed, 1 otherwise.
int exit_status(const ReportDocument& doc);

/// Exit status: 0 all passed, 1 a verification failed, 2 usage or validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqkt
