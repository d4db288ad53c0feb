#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cqa {

/// What one CLI invocation did, for machine-readable output.
struct RunReport {
  std::string command;
  /// Named inputs, e.g. "query" -> query text, "database" -> path.
  std::map<std::string, std::string> inputs;
  /// Main answer as printed, e.g. "CERTAIN", "CONP_COMPLETE", "3/4".
  std::string verdict;
  std::optional<std::string> method;
  /// Extra command-specific results.
  std::map<std::string, std::string> details;
  /// Falsifying repair, one rendered fact per entry.
  std::optional<std::vector<std::string>> witness;
  /// Seconds per phase; only serialized on request.
  std::map<std::string, double> timings;

  bool operator==(const RunReport&) const = default;
};

/// JSON object with sorted keys. Timings are left out unless asked for.
std::string to_json(const RunReport& report, bool include_timings = false);
/// Throws std::invalid_argument on malformed input.
RunReport report_from_json(std::string_view text);

}  // namespace cqa
