#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "aca/io.hpp"

using namespace aca;

namespace {

ErrorCode code_of(const Json& j) {
  try {
    rule_from_json(j);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an aca::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("rule round-trip") {
  const auto rule = LocalRule::tabulate(Alphabet(3), Neighborhood(2, {Cell{0, 0}, Cell{0, 1}, Cell{1, 0}}),
                                        [](auto l) { return State((l[0] + 2 * l[1] + l[2]) % 3); });
  const auto j = rule_to_json(rule);
  CHECK(j["dimension"] == 2);
  CHECK(j["alphabet"] == 3);
  CHECK(j["neighborhood"] == Json::parse("[[0,0],[0,1],[1,0]]"));
  CHECK(j["table"].size() == 27);
  CHECK(rule_from_json(j) == rule);
  CHECK(rule_from_json(Json::parse(j.dump())) == rule);
}

TEST_CASE("rule file shorthand") {
  CHECK(rule_from_json(Json::parse(R"({"wolfram": 110})")) == eca_from_wolfram(110));
  CHECK(rule_from_json(Json::parse(R"({"wolfram": 35, "numbering": "reflected"})")) ==
        eca_from_wolfram(35, WolframOrder::Reflected));
  const auto eca = rule_to_json(eca_from_wolfram(30));
  CHECK(eca["table"] == Json::parse("[0,1,1,1,1,0,0,0]"));
  auto named = eca;
  named["states"] = {"dead", "alive"};
  CHECK(rule_from_json(named) == eca_from_wolfram(30));
}

TEST_CASE("malformed rule files") {
  CHECK(code_of(Json::parse("[]")) == ErrorCode::MalformedRuleFile);
  CHECK(code_of(Json::parse(R"({"dimension": 1, "alphabet": 2, "neighborhood": [[0]]})")) ==
        ErrorCode::MalformedRuleFile);
  CHECK(code_of(Json::parse(R"({"dimension": 1, "alphabet": 2, "neighborhood": [[0]], "table": [0, 2]})")) ==
        ErrorCode::MalformedRuleFile);
  CHECK(code_of(Json::parse(R"({"dimension": 1, "alphabet": 2, "neighborhood": [[0]], "table": [0]})")) ==
        ErrorCode::MalformedRuleFile);
  CHECK(code_of(Json::parse(R"({"dimension": 1, "alphabet": 2, "neighborhood": [[1], [0]], "table": [0,1,1,0]})")) ==
        ErrorCode::MalformedRuleFile);
  CHECK(code_of(Json::parse(R"({"dimension": 1, "alphabet": 2, "neighborhood": [[0, 1]], "table": [0, 1]})")) ==
        ErrorCode::MalformedRuleFile);
  CHECK(code_of(Json::parse(R"({"wolfram": "x"})")) == ErrorCode::MalformedRuleFile);
  CHECK(code_of(Json::parse(R"({"wolfram": 1, "numbering": "gray"})")) == ErrorCode::MalformedRuleFile);
}

TEST_CASE("load and save") {
  const auto dir = std::filesystem::temp_directory_path() / "aca_test_io";
  std::filesystem::create_directories(dir);
  const auto path = dir / "rule.json";
  save_json(path, rule_to_json(eca_from_wolfram(90)));
  CHECK(load_rule(path) == eca_from_wolfram(90));

  std::ofstream(dir / "broken.json") << "{ not json";
  try {
    load_rule(dir / "broken.json");
    FAIL("expected MalformedRuleFile");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedRuleFile);
  }
  CHECK_THROWS_AS(load_rule(dir / "missing.json"), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("windows") {
  const auto w = WindowConfig::interval(-1, {2, 0, 1});
  const auto j = window_to_json(w);
  CHECK(j.dump() == R"({"cells":[[-1],[0],[1]],"values":[2,0,1]})");
  CHECK(window_from_json(j) == w);
  CHECK(cells_to_json(CellSet{Cell{1}, Cell{-1}}).dump() == "[[-1],[1]]");
}

TEST_CASE("decision report shape") {
  DecisionReport ok;
  ok.verdict = Verdict::Invertible;
  ok.inverse = eca_from_wolfram(51);
  ok.stats = {32, 12.4};
  const auto a = report_to_json(ok);
  CHECK(a["verdict"] == "Invertible");
  CHECK(a["inverse"] == rule_to_json(eca_from_wolfram(51)));
  CHECK(a["witness"].is_null());
  CHECK(a["stats"]["windows"] == 32);
  CHECK(a["stats"]["millis"] == 12);
  CHECK(report_to_json(ok, ReportOptions{false})["stats"]["millis"] == 0);

  DecisionReport bad;
  bad.witness = Witness{WindowConfig::interval(0, {1}), ActivationSet{Cell{0}}, Clause::Eq2Gamma};
  const auto b = report_to_json(bad);
  CHECK(b["verdict"] == "NotInvertible");
  CHECK(b["inverse"].is_null());
  CHECK(b["witness"]["clause"] == "eq2-gamma");
  CHECK(b["witness"]["active"].dump() == "[[0]]");
  std::vector<std::string> keys;
  for (const auto& [k, v] : b.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"verdict", "inverse", "witness", "stats"});
}

TEST_CASE("clause names") {
  CHECK(to_string(Clause::Eq1Forward) == "eq1-forward");
  CHECK(to_string(Clause::Eq1Backward) == "eq1-backward");
  CHECK(to_string(Clause::Eq2Delta) == "eq2-delta");
  CHECK(to_string(Clause::PurelyForward) == "purely-forward");
  CHECK(to_string(Clause::PurelyBackward) == "purely-backward");
  CHECK(to_string(Clause::DerivationConflict) == "derivation-conflict");
}
