#pragma once

// Classification of all 256 elementary rules under one updating scheme.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aca/invertibility.hpp"
#include "aca/io.hpp"

namespace aca {

enum class UpdateScheme { Purely, Fully };

std::string_view to_string(UpdateScheme s);
UpdateScheme parse_scheme(std::string_view name);

struct AtlasEntry {
  int rule = 0;
  Verdict verdict = Verdict::NotInvertible;
  std::optional<int> inverse_wolfram;
  std::optional<LocalRule> inverse_table;  ///< only when the inverse is not elementary
  double millis = 0.0;
};

struct AtlasReport {
  UpdateScheme scheme = UpdateScheme::Purely;
  WolframOrder numbering = WolframOrder::Reflected;  ///< applies to rule and inverse numbers
  std::vector<AtlasEntry> entries;  ///< indexed by rule number
  std::vector<int> summary;         ///< sorted invertible rule numbers
};

/// Published invertible rule lists (reflected numbering).
const std::vector<int>& reference_invertible(UpdateScheme scheme);

DecisionReport decide(const LocalRule& rule, UpdateScheme scheme, const Limits& limits);

/// Decides every rule; `workers` rules run concurrently, each decision
/// single-threaded. Output does not depend on `workers`.
AtlasReport classify_all_eca(UpdateScheme scheme, const Limits& limits, unsigned workers,
                             WolframOrder numbering = WolframOrder::Reflected);

struct AtlasDiff {
  std::set<int> missing;  ///< in the reference, not in the report
  std::set<int> extra;    ///< in the report, not in the reference
  bool empty() const { return missing.empty() && extra.empty(); }
};

AtlasDiff diff_against_reference(const AtlasReport& report);

Json atlas_to_json(const AtlasReport& report, const ReportOptions& options = {});
std::string atlas_to_csv(const AtlasReport& report, const ReportOptions& options = {});

}  // namespace aca
