#include "aca/io.hpp"

#include <fstream>

namespace aca {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedRuleFile, what); }

Json cell_to_json(const Cell& c) { return Json(c.coords()); }

Cell cell_from_json(const Json& j, int dimension) {
  if (!j.is_array() || static_cast<int>(j.size()) != dimension) {
    malformed("offset must be an array of " + std::to_string(dimension) + " integers");
  }
  std::vector<int> coords;
  for (const auto& x : j) {
    if (!x.is_number_integer()) malformed("offset coordinates must be integers");
    coords.push_back(x.get<int>());
  }
  return Cell(std::move(coords));
}

}  // namespace

Json rule_to_json(const LocalRule& rule) {
  Json j;
  j["dimension"] = rule.dimension();
  j["alphabet"] = rule.states();
  Json offsets = Json::array();
  for (const auto& o : rule.neighborhood().offsets()) offsets.push_back(cell_to_json(o));
  j["neighborhood"] = offsets;
  Json table = Json::array();
  for (State s : rule.table()) table.push_back(int(s));
  j["table"] = table;
  return j;
}

LocalRule rule_from_json(const Json& j) {
  if (!j.is_object()) malformed("rule must be a JSON object");
  if (j.contains("wolfram")) {
    if (!j["wolfram"].is_number_integer()) malformed("\"wolfram\" must be an integer");
    auto order = WolframOrder::Standard;
    if (j.contains("numbering")) {
      if (!j["numbering"].is_string()) malformed("\"numbering\" must be a string");
      try {
        order = parse_wolfram_order(j["numbering"].get<std::string>());
      } catch (const Error& e) {
        malformed(e.what());
      }
    }
    return eca_from_wolfram(j["wolfram"].get<int>(), order);
  }
  for (const char* key : {"dimension", "alphabet", "neighborhood", "table"}) {
    if (!j.contains(key)) malformed(std::string("missing key \"") + key + "\"");
  }
  if (!j["dimension"].is_number_integer() || !j["alphabet"].is_number_integer()) {
    malformed("\"dimension\" and \"alphabet\" must be integers");
  }
  const int d = j["dimension"].get<int>();
  const int q = j["alphabet"].get<int>();
  if (d < 1) malformed("\"dimension\" must be positive");
  if (q < 1 || q > kMaxAlphabet) malformed("\"alphabet\" out of range");
  if (!j["neighborhood"].is_array() || !j["table"].is_array()) {
    malformed("\"neighborhood\" and \"table\" must be arrays");
  }
  std::vector<Cell> offsets;
  for (const auto& o : j["neighborhood"]) offsets.push_back(cell_from_json(o, d));
  // The table is indexed by the order of offsets as written; require it to be
  // canonical so the encoding is unambiguous.
  if (!std::is_sorted(offsets.begin(), offsets.end())) {
    malformed("neighborhood offsets must be listed in lexicographic order");
  }
  std::vector<State> table;
  for (const auto& t : j["table"]) {
    if (!t.is_number_integer() || t.get<int>() < 0 || t.get<int>() >= q) malformed("table entry outside alphabet");
    table.push_back(static_cast<State>(t.get<int>()));
  }
  try {
    return LocalRule(Alphabet(q), Neighborhood(d, std::move(offsets)), std::move(table));
  } catch (const Error& e) {
    malformed(e.what());
  }
}

LocalRule load_rule(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    malformed(path.string() + ": " + e.what());
  }
  return rule_from_json(j);
}

void save_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

Json cells_to_json(const CellSet& cells) {
  Json out = Json::array();
  for (const auto& c : cells) out.push_back(cell_to_json(c));
  return out;
}

Json window_to_json(const WindowConfig& w) {
  Json cells = Json::array();
  Json values = Json::array();
  for (const auto& [cell, s] : w.values()) {
    cells.push_back(cell_to_json(cell));
    values.push_back(int(s));
  }
  Json j;
  j["cells"] = cells;
  j["values"] = values;
  return j;
}

WindowConfig window_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cells") || !j.contains("values") || j["cells"].size() != j["values"].size()) {
    throw Error(ErrorCode::InvalidArgument, "window must have matching \"cells\" and \"values\"");
  }
  std::map<Cell, State> values;
  for (std::size_t i = 0; i < j["cells"].size(); ++i) {
    const auto& c = j["cells"][i];
    values.emplace(cell_from_json(c, static_cast<int>(c.size())), static_cast<State>(j["values"][i].get<int>()));
  }
  return WindowConfig(std::move(values));
}

Json report_to_json(const DecisionReport& report, const ReportOptions& options) {
  Json j;
  j["verdict"] = std::string(to_string(report.verdict));
  j["inverse"] = report.inverse ? rule_to_json(*report.inverse) : Json(nullptr);
  if (report.witness) {
    Json w;
    w["window"] = window_to_json(report.witness->window);
    w["active"] = cells_to_json(report.witness->active.cells());
    w["clause"] = std::string(to_string(report.witness->clause));
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  Json stats;
  stats["windows"] = report.stats.windows;
  stats["millis"] = options.timing ? static_cast<std::int64_t>(report.stats.millis + 0.5) : 0;
  j["stats"] = stats;
  return j;
}

}  // namespace aca
