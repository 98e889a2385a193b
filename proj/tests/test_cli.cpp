#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "aca/cli.hpp"
#include "aca/io.hpp"

using namespace aca;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Process {
  int code;
  std::string out;
};

Process exec(const std::string& args) {
  const char* bin = std::getenv("ACA_CLI");
  REQUIRE(bin != nullptr);
  FILE* pipe = popen((std::string(bin) + " " + args + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "aca_test_cli";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("decide exit codes") {
  const auto id = run({"decide", "--wolfram", "204", "--scheme", "purely"});
  CHECK(id.code == cli::kInvertible);
  CHECK(Json::parse(id.out)["verdict"] == "Invertible");

  const auto zero = run({"decide", "--wolfram", "0", "--scheme", "fully"});
  CHECK(zero.code == cli::kNotInvertible);
  const auto j = Json::parse(zero.out);
  CHECK(j["verdict"] == "NotInvertible");
  CHECK(j["witness"].is_object());

  CHECK(run({"decide", "--wolfram", "33", "--scheme", "fully"}).code == cli::kInvertible);
  CHECK(run({"decide", "--wolfram", "33", "--scheme", "purely"}).code == cli::kNotInvertible);
  CHECK(run({"decide", "--rule", "35", "--scheme", "purely"}).code == cli::kInvertible);
  CHECK(run({"decide", "--wolfram", "35", "--scheme", "purely", "--numbering", "standard"}).code ==
        cli::kNotInvertible);
}

TEST_CASE("decide with a rule file") {
  const auto path = scratch("blind.json");
  save_json(path, rule_to_json(LocalRule::tabulate(Alphabet(3), Neighborhood::line({1}), [](auto l) { return l[0]; })));
  const auto r = run({"decide", "--rule", path.string(), "--scheme", "purely"});
  CHECK(r.code == cli::kNotInvertible);
  CHECK(Json::parse(r.out)["witness"]["clause"] == "derivation-conflict");
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"decide", "--wolfram", "204"}).code == cli::kUsageError);
  CHECK(run({"decide", "--wolfram", "300", "--scheme", "purely"}).code == cli::kUsageError);
  CHECK(run({"decide", "--scheme", "purely"}).code == cli::kUsageError);
  CHECK(run({"decide", "--wolfram", "1", "--scheme", "purely", "--threads", "0"}).code == cli::kUsageError);

  const auto bad = scratch("bad.json");
  { std::ofstream(bad) << R"({"dimension": 1})"; }
  const auto r = run({"decide", "--rule", bad.string(), "--scheme", "purely"});
  CHECK(r.code == cli::kUsageError);
  CHECK(r.err.find("error:") == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

  const auto cap = run({"decide", "--wolfram", "110", "--scheme", "fully", "--cap", "100"});
  CHECK(cap.code == cli::kUsageError);
  CHECK(Json::parse(cap.out)["verdict"] == "ResourceCapExceeded");
}

TEST_CASE("classify-eca") {
  const auto json = scratch("purely.json");
  const auto csv = scratch("purely.csv");
  const auto r = run({"classify-eca", "--scheme", "purely", "--diff", "--out", json.string(), "--csv", csv.string()});
  CHECK(r.code == 0);
  CHECK(r.err == "diff: missing=[] extra=[]\n");
  std::ifstream in(json);
  const auto j = Json::parse(in);
  CHECK(j["summary"] == Json::parse("[0,35,43,49,51,59,113,115,204,255]"));
  CHECK(std::filesystem::file_size(csv) > 0);

  const auto standard = run({"classify-eca", "--scheme", "purely", "--diff", "--numbering", "standard"});
  CHECK(standard.code == 0);
  CHECK(Json::parse(standard.out)["summary"] == Json::parse("[0,51,140,142,196,204,206,212,220,255]"));
}

TEST_CASE("nakamura") {
  const auto dir = scratch("bar");
  const auto r = run({"nakamura", "--rule", "240", "--inverse", "170", "--numbering", "standard", "--out-dir",
                      dir.string(), "--verify", "--no-timing"});
  CHECK(r.code == cli::kInvertible);
  CHECK(Json::parse(r.out)["verdict"] == "Invertible");
  std::ifstream in(dir / "bar_c.json");
  const auto j = Json::parse(in);
  CHECK(j["alphabet"] == 12);
  CHECK(j["encoding"] == "curr*6 + old*3 + time");
  CHECK(j["base_alphabet"] == 2);
  CHECK(rule_from_json(j).table_size() == 1728);
  CHECK(std::filesystem::exists(dir / "bar_g.json"));

  const auto three = scratch("three.json");
  save_json(three, rule_to_json(LocalRule(Alphabet(3), Neighborhood::line({0}), {0, 1, 2})));
  const auto bad = run({"nakamura", "--rule", three.string(), "--inverse", "170", "--out-dir", dir.string()});
  CHECK(bad.code == cli::kUsageError);
}

TEST_CASE("witness-r2") {
  const auto trivial = run({"witness-r2", "--wolfram", "204", "--numbering", "standard"});
  CHECK(trivial.code == 0);
  CHECK(trivial.out == "trivial rule\n");

  const auto comp = run({"witness-r2", "--wolfram", "51", "--numbering", "standard"});
  CHECK(comp.code == 0);
  const auto j = Json::parse(comp.out);
  CHECK(j["hat"] != j["check"]);
  CHECK(j["hat_active"] == Json::parse("[2]"));
  CHECK(j["successor"]["values"] == Json::parse("[0,1,0,0,0,1,0]"));
}

TEST_CASE("simulate") {
  const std::vector<std::string> args{"simulate", "--wolfram", "110", "--scheme", "purely",
                                      "--size", "12", "--steps", "6", "--seed", "5"};
  const auto a = run(args);
  CHECK(a.code == 0);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 7);
  CHECK(run(args).out == a.out);

  const auto j = run({"simulate", "--wolfram", "204", "--numbering", "standard", "--scheme", "fully", "--size", "5",
                      "--steps", "4", "--seed", "1", "--format", "json", "--init", "01101"});
  CHECK(j.code == 0);
  const auto trace = Json::parse(j.out);
  CHECK(trace["configs"].size() == 5);
  for (const auto& c : trace["configs"]) CHECK(c == Json::parse("[0,1,1,0,1]"));

  CHECK(run({"simulate", "--wolfram", "110", "--scheme", "fully", "--size", "2", "--steps", "1", "--seed", "1"}).code ==
        cli::kUsageError);
}

TEST_CASE("binary exit codes and stable output") {
  CHECK(exec("decide --wolfram 204 --scheme purely").code == 0);
  CHECK(exec("decide --wolfram 0 --scheme fully").code == 3);
  CHECK(exec("classify-eca --scheme purely --diff").code == 0);
  CHECK(exec("bogus").code == 2);

  const auto one = exec("decide --wolfram 110 --scheme fully --no-timing --threads 1");
  const auto four = exec("decide --wolfram 110 --scheme fully --no-timing --threads 4");
  CHECK(one.code == 3);
  CHECK(one.out == four.out);
}
