#include "aca/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "aca/atlas.hpp"
#include "aca/io.hpp"
#include "aca/nakamura.hpp"
#include "aca/simulate.hpp"

namespace aca::cli {

namespace {

unsigned default_threads() {
  if (const char* env = std::getenv("ACA_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

/// A rule argument is a Wolfram number when it is all digits, a JSON rule
/// file otherwise.
LocalRule resolve_rule(const std::string& spec, WolframOrder order) {
  if (all_digits(spec)) {
    if (spec.size() > 3) throw Error(ErrorCode::OutOfRange, "Wolfram number " + spec + " not in 0..255");
    return eca_from_wolfram(std::stoi(spec), order);
  }
  return load_rule(spec);
}

void add_numbering(CLI::App* app, std::string& name) {
  app->add_option("--numbering", name, "Rule-number bit order: reflected (published lists, default) | standard")
      ->check(CLI::IsMember({"standard", "reflected"}));
}

struct RuleArgs {
  std::string rule;
  int wolfram = -1;

  void attach(CLI::App* app, const std::string& rule_help, std::string& numbering) {
    auto* r = app->add_option("--rule", rule, rule_help);
    auto* w = app->add_option("--wolfram", wolfram, "Elementary rule by number")->check(CLI::Range(0, 255));
    r->excludes(w);
    add_numbering(app, numbering);
  }
  LocalRule get(WolframOrder order) const {
    if (wolfram >= 0) return eca_from_wolfram(wolfram, order);
    if (rule.empty()) throw Error(ErrorCode::InvalidArgument, "one of --rule or --wolfram is required");
    return resolve_rule(rule, order);
  }
};

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Invertible: return kInvertible;
    case Verdict::NotInvertible: return kNotInvertible;
    case Verdict::ResourceCapExceeded: return kUsageError;
  }
  return kUsageError;
}

std::string render_states(const CyclicConfig& c, int q) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (q <= 10) {
      s += static_cast<char>('0' + c[i]);
    } else {
      s += (i ? "," : "") + std::to_string(c[i]);
    }
  }
  return s;
}

CyclicConfig parse_init(const std::string& text, int q) {
  CyclicConfig c;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') continue;
    if (!std::isdigit(static_cast<unsigned char>(ch)) || ch - '0' >= q) {
      throw Error(ErrorCode::InvalidArgument, "initial configuration must be digits below the alphabet size");
    }
    c.push_back(static_cast<State>(ch - '0'));
  }
  return c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asynchronous cellular automata: invertibility deciders and tools", "aca"};
  app.require_subcommand(1);

  unsigned threads = default_threads();
  std::uint64_t cap = Limits{}.window_cap;
  std::uint64_t candidate_cap = Limits{}.candidate_cap;
  bool no_timing = false;
  std::string numbering_name = "reflected";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "Worker threads (default: $ACA_THREADS or hardware)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap", cap, "Maximum windows enumerated per check")->check(CLI::PositiveNumber);
    sub->add_flag("--no-timing", no_timing, "Write 0 for wall-clock fields");
  };

  // decide
  auto* decide_cmd = app.add_subcommand("decide", "Decide phase-space invertibility of one rule");
  RuleArgs decide_rule;
  decide_rule.attach(decide_cmd, "Rule file or Wolfram number", numbering_name);
  std::string scheme_name;
  bool exhaustive = false;
  decide_cmd->add_option("--scheme", scheme_name, "purely | fully")->required()->check(CLI::IsMember({"purely", "fully"}));
  decide_cmd->add_flag("--exhaustive", exhaustive, "Try every candidate table if the derived one fails");
  decide_cmd->add_option("--candidate-cap", candidate_cap, "Maximum candidate tables in exhaustive mode")
      ->check(CLI::PositiveNumber);
  add_common(decide_cmd);

  // classify-eca
  auto* classify_cmd = app.add_subcommand("classify-eca", "Classify all 256 elementary rules");
  std::string out_json, out_csv;
  bool diff = false;
  classify_cmd->add_option("--scheme", scheme_name, "purely | fully")->required()->check(CLI::IsMember({"purely", "fully"}));
  classify_cmd->add_option("--out", out_json, "Write the JSON report here instead of stdout");
  classify_cmd->add_option("--csv", out_csv, "Also write a CSV report");
  classify_cmd->add_flag("--diff", diff, "Compare with the published lists; exit 0 iff identical");
  add_numbering(classify_cmd, numbering_name);
  add_common(classify_cmd);

  // nakamura
  auto* nakamura_cmd = app.add_subcommand("nakamura", "Build the time-stamped bar rule pair");
  std::string rule_a, rule_b, out_dir;
  bool verify = false;
  nakamura_cmd->add_option("--rule", rule_a, "Synchronous rule (file or Wolfram number)")->required();
  nakamura_cmd->add_option("--inverse", rule_b, "Its synchronous inverse (file or Wolfram number)")->required();
  nakamura_cmd->add_option("--out-dir", out_dir, "Directory for bar_c.json and bar_g.json")->required();
  nakamura_cmd->add_flag("--verify", verify, "Check that the bar pair is a purely asynchronous inverse pair");
  add_numbering(nakamura_cmd, numbering_name);
  add_common(nakamura_cmd);

  // witness-r2
  auto* witness_cmd = app.add_subcommand("witness-r2", "Two predecessors of one configuration");
  RuleArgs witness_rule;
  witness_rule.attach(witness_cmd, "Rule file or Wolfram number", numbering_name);

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Run a rule on a cyclic lattice (demonstration only)");
  RuleArgs sim_rule;
  sim_rule.attach(sim_cmd, "Rule file or Wolfram number", numbering_name);
  int size = 0, steps = 0;
  std::uint64_t seed = 0;
  double p = 0.5;
  std::string format = "text", init_text;
  sim_cmd->add_option("--scheme", scheme_name, "purely | fully")->required()->check(CLI::IsMember({"purely", "fully"}));
  sim_cmd->add_option("--size", size, "Lattice size")->required()->check(CLI::PositiveNumber);
  sim_cmd->add_option("--steps", steps, "Number of steps")->required()->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--seed", seed, "Random seed")->required();
  sim_cmd->add_option("--p", p, "Activation probability (purely)")->check(CLI::Range(0.0, 1.0));
  sim_cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  sim_cmd->add_option("--init", init_text, "Initial states as digits (default: drawn from the seed)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  const ReportOptions report_opts{!no_timing};
  Limits limits;
  limits.window_cap = cap;
  limits.candidate_cap = candidate_cap;
  limits.exhaustive = exhaustive;
  limits.threads = threads;

  try {
    const auto order = parse_wolfram_order(numbering_name);
    if (*decide_cmd) {
      const auto rule = decide_rule.get(order);
      const auto report = decide(rule, parse_scheme(scheme_name), limits);
      out << report_to_json(report, report_opts).dump(2) << '\n';
      return verdict_exit(report.verdict);
    }

    if (*classify_cmd) {
      const auto report = classify_all_eca(parse_scheme(scheme_name), limits, threads, order);
      const auto j = atlas_to_json(report, report_opts);
      if (!out_json.empty()) {
        save_json(out_json, j);
      } else {
        out << j.dump(2) << '\n';
      }
      if (!out_csv.empty()) {
        std::ofstream csv(out_csv);
        if (!csv) throw Error(ErrorCode::InvalidArgument, "cannot write " + out_csv);
        csv << atlas_to_csv(report, report_opts);
      }
      if (diff) {
        const auto d = diff_against_reference(report);
        err << "diff: missing=" << Json(d.missing).dump() << " extra=" << Json(d.extra).dump() << '\n';
        return d.empty() ? 0 : kDiffMismatch;
      }
      return 0;
    }

    if (*nakamura_cmd) {
      const auto c = resolve_rule(rule_a, order);
      const auto g = resolve_rule(rule_b, order);
      const auto pair = build_bar_pair(c, g);
      std::filesystem::create_directories(out_dir);
      const std::string encoding = "curr*" + std::to_string(3 * pair.base_states) + " + old*3 + time";
      for (const auto& [name, rule] : {std::pair{"bar_c.json", &pair.bar_c}, std::pair{"bar_g.json", &pair.bar_g}}) {
        auto j = rule_to_json(*rule);
        j["encoding"] = encoding;
        j["base_alphabet"] = pair.base_states;
        save_json(std::filesystem::path(out_dir) / name, j);
      }
      if (!verify) return 0;
      const auto report = check_inverse_purely(pair.bar_c, pair.bar_g, limits);
      out << report_to_json(report, report_opts).dump(2) << '\n';
      return verdict_exit(report.verdict);
    }

    if (*witness_cmd) {
      const auto w = r2_counterexample(witness_rule.get(order));
      if (!w) {
        out << "trivial rule\n";
        return 0;
      }
      Json j;
      j["hat"] = window_to_json(w->hat);
      j["hat_active"] = Json(w->hat_active.coords());
      j["check"] = window_to_json(w->check);
      j["check_active"] = Json(w->check_active.coords());
      j["successor"] = window_to_json(step(witness_rule.get(order), w->hat, ActivationSet{w->hat_active}));
      out << j.dump(2) << '\n';
      return 0;
    }

    if (*sim_cmd) {
      const auto rule = sim_rule.get(order);
      CyclicConfig init;
      if (!init_text.empty()) {
        init = parse_init(init_text, rule.states());
        if (static_cast<int>(init.size()) != size) {
          throw Error(ErrorCode::InvalidArgument, "--init length differs from --size");
        }
      } else {
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<int> pick(0, rule.states() - 1);
        for (int i = 0; i < size; ++i) init.push_back(static_cast<State>(pick(rng)));
      }
      Scheme scheme = FullyScheme{};
      if (parse_scheme(scheme_name) == UpdateScheme::Purely) scheme = PurelyScheme{p};
      const auto trace = simulate(rule, init, scheme, steps, seed);
      if (format == "json") {
        Json j;
        j["configs"] = trace.configs;
        j["activations"] = trace.activations;
        out << j.dump() << '\n';
      } else {
        for (std::size_t t = 0; t < trace.configs.size(); ++t) {
          out << render_states(trace.configs[t], rule.states());
          if (t < trace.activations.size()) out << "  active=" << Json(trace.activations[t]).dump();
          out << '\n';
        }
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace aca::cli
