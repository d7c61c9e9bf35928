#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace maclab {

/// One verified identity: both sides rendered canonically plus the verdict.
struct CaseResult {
  std::string suite;
  std::string id;
  nlohmann::json inputs = nlohmann::json::object();
  /// "u^D" for the root system of the case; empty when q is not involved.
  std::string q;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  /// Pure monomial relating the two sides, when the identity holds only up to one.
  std::string factor;
  std::string note;
  double seconds = 0;
};

struct CaseTask {
  std::string suite;
  std::string id;
  std::function<CaseResult()> run;
};

/// Runs the tasks on a pool of jobs threads and returns results sorted by id.
/// Exceptions turn into FAIL records carrying the message.
std::vector<CaseResult> run_cases(const std::vector<CaseTask>& tasks, int jobs);

bool all_pass(const std::vector<CaseResult>& results);

/// Text report: one line per case and a summary line; wall times only when timing is set.
std::string render_text(const std::vector<CaseResult>& results, bool timing);
nlohmann::json to_json(const CaseResult& r, bool timing);
/// {"format_version", "cases", "summary"}.
nlohmann::json report_json(const std::vector<CaseResult>& results, bool timing);

inline constexpr int kReportFormatVersion = 1;

}  // namespace maclab
