#pragma once
// Verification suites behind `affgeo verify` and the acceptance binary, and their JSON form.

#include <cstdint>
#include <string>
#include <vector>

namespace affgeo {

inline constexpr const char* kToolVersion = "affgeo 0.1.0";
inline constexpr int kCriteria = 12;

enum class CheckStatus { Pass, Fail, ErratumConfirmed };
std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  double residual = 0;
  double tol = 0;
  int criterion = 0;
  std::string note;
};

struct ErrataLine {
  std::string location, printed, derived, verdict, note;
  std::vector<std::string> differences;  // "monomial: printed -> derived"
};

struct RunReport {
  std::string command;
  std::string version = kToolVersion;
  std::uint64_t seed = 0;
  double tol_scale = 1;
  std::vector<Check> checks;
  std::vector<ErrataLine> errata;  // filled by the errata and families suites
  std::vector<std::string> log;    // e.g. solver starts that matched no family
  bool ok() const;                 // no check with status Fail
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  double tol_scale = 1;
  int samples = 50;    // per family
  int starts = 1000;   // solver multi-start
  int threads = 0;     // 0: hardware concurrency
  bool timing = false; // add wall-clock checks (not reproducible; off for JSON reports)
};

// Suites: all, frames, compat, families, d3, errata.  Throws std::invalid_argument.
const std::vector<std::string>& suite_names();
std::vector<int> suite_criteria(const std::string& suite);

// Appends the checks (and any errata / log lines) of one acceptance criterion.
void run_criterion(int n, const VerifyOptions& options, RunReport& report);
RunReport verify_suite(const std::string& suite, const VerifyOptions& options);

std::string report_json(const RunReport& report, int indent = 2);

}  // namespace affgeo
