#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "p3cay/symmetry.hpp"

namespace p3cay {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Configuration for one verification run.
struct SuiteConfig {
  int p = 3;
  /// 0 picks the smallest primitive root.
  int t = 0;
  /// Name prefixes; empty selects every check. Construction steps always
  /// execute when something downstream needs them, recorded or not.
  std::vector<std::string> check_filter;
  bool skip_aut_search = false;
  /// The searches also run at p = 7 only with this set.
  bool force_aut_search = false;
  double check_timeout_seconds = 120.0;
};

/// One suite entry: a check outcome plus how it ran.
struct TimedCheck {
  CheckResult result;
  double time_ms = 0.0;
  /// Reported, never counted into overall_pass.
  bool informational = false;
  bool skipped = false;
  std::string skip_reason;
};

struct VerificationReport {
  int schema_version = kSchemaVersion;
  std::string tool_version = kToolVersion;
  int p = 0;
  int t = 0;
  std::vector<TimedCheck> checks;
  /// True when every recorded, non-informational, non-skipped check passed
  /// and nothing failed to even run.
  bool overall_pass = false;

  nlohmann::ordered_json to_json() const;
  /// to_json with every time_ms zeroed; the part that must be reproducible.
  nlohmann::ordered_json to_json_without_timing() const;
};

/// Runs the full check suite for config.p. Checks run in dependency order;
/// each is wrapped in a soft timeout (recorded as skipped on expiry) and an
/// exception trap (recorded as failed).
VerificationReport run_suite(const SuiteConfig& config);

enum class ExportGraph { gamma, sigma, quotient };
enum class ExportFormat { json, dot };

std::string export_graph(int p, ExportGraph which, ExportFormat format);

}  // namespace p3cay
