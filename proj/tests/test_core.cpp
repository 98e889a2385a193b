#include <doctest.h>

#include "aca/core.hpp"
#include "aca/simulate.hpp"
#include "testkit/properties.hpp"

using namespace aca;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an aca::Error");
  return ErrorCode::InvalidArgument;
}

const auto kEca = Neighborhood::line({-1, 0, 1});

}  // namespace

TEST_CASE("local_config reads the neighborhood in offset order") {
  const auto c = WindowConfig::interval(-2, {0, 1, 1, 0, 1});
  CHECK(local_config(c, Cell{0}, kEca) == std::vector<State>{1, 1, 0});

  const auto single = WindowConfig::interval(0, {1});
  CHECK(local_config(single, Cell{0}, Neighborhood::line({0})) == std::vector<State>{1});

  const auto edge = WindowConfig::interval(-1, {1, 0, 0});
  CHECK(code_of([&] { local_config(edge, Cell{1}, kEca); }) == ErrorCode::OutOfDomain);
}

TEST_CASE("step applies the rule on active cells only") {
  const auto c = WindowConfig::interval(-1, {0, 0, 0});
  CHECK(step(eca_from_wolfram(110), c, {}) == c);
  CHECK(step(eca_from_wolfram(51), c, {Cell{0}}) == WindowConfig::interval(-1, {0, 1, 0}));

  const auto w = WindowConfig::interval(-2, {1, 0, 1, 1, 0});
  CHECK(step(eca_from_wolfram(204), w, {Cell{-1}, Cell{0}, Cell{1}}) == w);
  CHECK(code_of([&] { step(eca_from_wolfram(204), w, {Cell{2}}); }) == ErrorCode::OutOfDomain);
}

TEST_CASE("difference") {
  const auto a = WindowConfig::interval(-1, {0, 1, 0});
  CHECK(difference(a, a).empty());
  CHECK(difference(a, WindowConfig::interval(-1, {0, 0, 0})) == CellSet{Cell{0}});
  CHECK(difference(WindowConfig::interval(-1, {1, 1, 0}), WindowConfig::interval(-1, {0, 1, 1})) ==
        CellSet{Cell{-1}, Cell{1}});
  CHECK(code_of([&] { difference(a, WindowConfig::interval(0, {0, 1, 0})); }) == ErrorCode::DomainMismatch);
}

TEST_CASE("translate") {
  const auto c = WindowConfig::interval(0, {0, 1});
  CHECK(translate(c, Cell{0}) == c);
  const auto t = translate(c, Cell{1});
  CHECK(t == WindowConfig::interval(-1, {0, 1}));
  CHECK(t.at(Cell{-1}) == 0);
  CHECK(t.at(Cell{0}) == 1);
}

TEST_CASE("Wolfram codec") {
  const auto id = eca_from_wolfram(204);
  const auto comp = eca_from_wolfram(51);
  for (std::size_t idx = 0; idx < 8; ++idx) {
    const auto l = id.local_at(idx);
    CHECK(id.at_index(idx) == l[1]);
    CHECK(comp.at_index(idx) == 1 - l[1]);
    CHECK(eca_from_wolfram(0).at_index(idx) == 0);
    CHECK(eca_from_wolfram(170).at_index(idx) == l[2]);
  }
  CHECK(wolfram_number(id) == 204);
  CHECK(wolfram_number(LocalRule(Alphabet(2), kEca, std::vector<State>(8, 1))) == 255);
  CHECK(code_of([] { wolfram_number(LocalRule(Alphabet(2), Neighborhood::line({0}), {0, 1})); }) ==
        ErrorCode::NotElementary);
  CHECK(code_of([] { eca_from_wolfram(256); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { eca_from_wolfram(-1); }) == ErrorCode::OutOfRange);
}

TEST_CASE("reflected numbering reverses the bit order") {
  CHECK(reflect_wolfram(1) == 128);
  CHECK(reflect_wolfram(35) == 196);
  CHECK(reflect_wolfram(204) == 51);
  const auto r = eca_from_wolfram(1, WolframOrder::Reflected);
  CHECK(r.at_index(7) == 1);
  CHECK(r.at_index(0) == 0);
  CHECK(wolfram_number(eca_from_wolfram(110), WolframOrder::Reflected) == reflect_wolfram(110));
  CHECK(parse_wolfram_order("standard") == WolframOrder::Standard);
  CHECK(code_of([] { parse_wolfram_order("gray"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("minimize_neighborhood") {
  const auto id = minimize_neighborhood(eca_from_wolfram(204));
  CHECK(id.neighborhood() == Neighborhood::line({0}));
  CHECK(id.table() == std::vector<State>{0, 1});
  CHECK(minimize_neighborhood(eca_from_wolfram(170)).neighborhood() == Neighborhood::line({1}));
  CHECK(minimize_neighborhood(eca_from_wolfram(110)).neighborhood() == kEca);
  CHECK(minimize_neighborhood(eca_from_wolfram(0)).neighborhood().empty());
}

TEST_CASE("rule construction is validated") {
  CHECK(code_of([] { Alphabet(0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Neighborhood::line({0, 0}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { LocalRule(Alphabet(2), kEca, std::vector<State>(7, 0)); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { LocalRule(Alphabet(2), Neighborhood::line({0}), {0, 2}); }) == ErrorCode::InvalidArgument);
  CHECK(Neighborhood::line({1, -1, 0}) == kEca);
}

TEST_CASE("simulate") {
  const auto rule110 = eca_from_wolfram(110);
  const CyclicConfig init{0, 1, 1, 0, 1, 0, 0, 1};

  const auto empty = simulate(rule110, init, PurelyScheme{0.5}, 0, 7);
  CHECK(empty.configs == std::vector<CyclicConfig>{init});
  CHECK(empty.activations.empty());

  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto t = simulate(eca_from_wolfram(204), init, FullyScheme{}, 20, seed);
    for (const auto& c : t.configs) CHECK(c == init);
  }

  const auto a = simulate(rule110, init, PurelyScheme{0.3}, 30, 42);
  const auto b = simulate(rule110, init, PurelyScheme{0.3}, 30, 42);
  CHECK(a.configs == b.configs);
  CHECK(a.activations == b.activations);
  REQUIRE(a.activations.size() == 30);
  for (std::size_t k = 0; k < a.activations.size(); ++k) {
    CHECK(a.configs[k + 1] == cyclic_step(rule110, a.configs[k], a.activations[k]));
  }

  const auto f = simulate(rule110, init, FullyScheme{}, 25, 9);
  for (const auto& act : f.activations) CHECK(act.size() == 1);

  CHECK(code_of([&] { simulate(rule110, CyclicConfig{0, 1}, FullyScheme{}, 1, 0); }) == ErrorCode::LatticeTooSmall);
}

TEST_CASE("properties: step and codec") {
  for (auto check : {&testkit::empty_activation_identity, &testkit::agreement_outside_active,
                     &testkit::translation_commutation, &testkit::difference_symmetry, &testkit::wolfram_round_trip,
                     &testkit::minimize_idempotent_and_faithful}) {
    const auto r = check();
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.ok());
  }
}
