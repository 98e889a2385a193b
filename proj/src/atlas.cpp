#include "aca/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace aca {

std::string_view to_string(UpdateScheme s) { return s == UpdateScheme::Purely ? "purely" : "fully"; }

UpdateScheme parse_scheme(std::string_view name) {
  if (name == "purely") return UpdateScheme::Purely;
  if (name == "fully") return UpdateScheme::Fully;
  throw Error(ErrorCode::InvalidArgument, "scheme must be 'purely' or 'fully'");
}

const std::vector<int>& reference_invertible(UpdateScheme scheme) {
  static const std::vector<int> purely{0, 35, 43, 49, 51, 59, 113, 115, 204, 255};
  static const std::vector<int> fully{33,  35,  38,  41,  43,  46,  49,  51,  52,  54,  57,  59,  60,  62,
                                      97,  99,  102, 105, 107, 108, 113, 115, 116, 118, 121, 123, 131, 139,
                                      145, 147, 150, 153, 155, 156, 195, 198, 201, 204, 209, 211};
  return scheme == UpdateScheme::Purely ? purely : fully;
}

DecisionReport decide(const LocalRule& rule, UpdateScheme scheme, const Limits& limits) {
  return scheme == UpdateScheme::Purely ? decide_purely(rule, limits) : decide_fully_1d(rule, limits);
}

AtlasReport classify_all_eca(UpdateScheme scheme, const Limits& limits, unsigned workers,
                             WolframOrder numbering) {
  AtlasReport report;
  report.scheme = scheme;
  report.numbering = numbering;
  report.entries.resize(256);

  Limits single = limits;
  single.threads = 1;
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int rule; (rule = next.fetch_add(1)) < 256;) {
      AtlasEntry& e = report.entries[rule];
      e.rule = rule;
      const auto r = decide(eca_from_wolfram(rule, numbering), scheme, single);
      e.verdict = r.verdict;
      e.millis = r.stats.millis;
      if (r.inverse) {
        if (is_elementary(*r.inverse)) {
          e.inverse_wolfram = wolfram_number(*r.inverse, numbering);
        } else {
          e.inverse_table = r.inverse;
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < std::max(1u, workers); ++t) pool.emplace_back(worker);
    worker();
  }

  for (const auto& e : report.entries) {
    if (e.verdict == Verdict::Invertible) report.summary.push_back(e.rule);
  }
  return report;
}

AtlasDiff diff_against_reference(const AtlasReport& report) {
  const auto& ref = reference_invertible(report.scheme);
  std::vector<int> got = report.summary;
  if (report.numbering == WolframOrder::Standard) {
    std::transform(got.begin(), got.end(), got.begin(), reflect_wolfram);
    std::sort(got.begin(), got.end());
  }
  AtlasDiff diff;
  std::set_difference(ref.begin(), ref.end(), got.begin(), got.end(),
                      std::inserter(diff.missing, diff.missing.end()));
  std::set_difference(got.begin(), got.end(), ref.begin(), ref.end(),
                      std::inserter(diff.extra, diff.extra.end()));
  return diff;
}

namespace {

std::int64_t shown_millis(double ms, const ReportOptions& options) {
  return options.timing ? static_cast<std::int64_t>(ms + 0.5) : 0;
}

}  // namespace

Json atlas_to_json(const AtlasReport& report, const ReportOptions& options) {
  Json j;
  j["scheme"] = std::string(to_string(report.scheme));
  j["numbering"] = std::string(to_string(report.numbering));
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json row;
    row["rule"] = e.rule;
    row["verdict"] = std::string(to_string(e.verdict));
    if (e.inverse_wolfram) {
      row["inverse"] = *e.inverse_wolfram;
    } else if (e.inverse_table) {
      row["inverse"] = rule_to_json(*e.inverse_table);
    } else {
      row["inverse"] = nullptr;
    }
    row["millis"] = shown_millis(e.millis, options);
    entries.push_back(row);
  }
  j["entries"] = entries;
  j["summary"] = report.summary;
  return j;
}

std::string atlas_to_csv(const AtlasReport& report, const ReportOptions& options) {
  std::ostringstream os;
  os << "rule,verdict,inverse,millis\n";
  for (const auto& e : report.entries) {
    os << e.rule << ',' << to_string(e.verdict) << ',';
    if (e.inverse_wolfram) {
      os << *e.inverse_wolfram;
    } else if (e.inverse_table) {
      std::string cell = rule_to_json(*e.inverse_table).dump();
      os << '"';
      for (char ch : cell) os << (ch == '"' ? "\"\"" : std::string(1, ch));
      os << '"';
    }
    os << ',' << shown_millis(e.millis, options) << '\n';
  }
  return os.str();
}

}  // namespace aca
