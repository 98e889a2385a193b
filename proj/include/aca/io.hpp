#pragma once

// JSON interchange: rule files, window configurations and decision reports.
//
// Rule file:
//   {"dimension": d, "alphabet": q, "neighborhood": [[o1, ...], ...], "table": [t0, ...]}
// or the elementary shorthand {"wolfram": n}. An optional "states" array of
// names is accepted and ignored.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "aca/core.hpp"
#include "aca/invertibility.hpp"

namespace aca {

using Json = nlohmann::ordered_json;

Json rule_to_json(const LocalRule& rule);
LocalRule rule_from_json(const Json& j);
LocalRule load_rule(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const Json& j);

Json cells_to_json(const CellSet& cells);
Json window_to_json(const WindowConfig& w);
WindowConfig window_from_json(const Json& j);

struct ReportOptions {
  bool timing = true;  ///< false writes "millis": 0 so output is byte-stable
};

Json report_to_json(const DecisionReport& report, const ReportOptions& options = {});

}  // namespace aca
