#include "cqa/report.hpp"

#include <stdexcept>

#include <json.hpp>

namespace cqa {

std::string to_json(const RunReport& report, bool include_timings) {
  nlohmann::json j;
  j["command"] = report.command;
  j["inputs"] = report.inputs;
  j["verdict"] = report.verdict;
  if (report.method) j["method"] = *report.method;
  if (!report.details.empty()) j["details"] = report.details;
  if (report.witness) j["witness"] = *report.witness;
  if (include_timings && !report.timings.empty()) j["timings"] = report.timings;
  return j.dump(2) + "\n";
}

RunReport report_from_json(std::string_view text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.value("inputs", std::map<std::string, std::string>{});
    r.verdict = j.at("verdict").get<std::string>();
    if (j.contains("method")) r.method = j["method"].get<std::string>();
    r.details = j.value("details", std::map<std::string, std::string>{});
    if (j.contains("witness")) r.witness = j["witness"].get<std::vector<std::string>>();
    r.timings = j.value("timings", std::map<std::string, double>{});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace cqa
