#pragma once

// Exhaustive property checks shared by the unit tests and the acceptance run.
// Each check counts the cases it tried and keeps the first failure.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aca/atlas.hpp"
#include "aca/core.hpp"
#include "aca/invertibility.hpp"

namespace aca::testkit {

struct PropertyResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void check(bool pass, const std::string& what);
};

/// All windows over `cells` with `states` states, in lexicographic order.
std::vector<WindowConfig> all_windows(const std::vector<Cell>& cells, int states);
std::vector<Cell> line_cells(int first, int last);
/// Every subset of `cells`.
std::vector<ActivationSet> all_subsets(const std::vector<Cell>& cells);

/// Replays a NotInvertible witness: the clause it names really fails for
/// (c, g). `candidates` is the active candidate range for the eq2 clauses.
bool witness_replays(const LocalRule& c, const LocalRule* g, const Witness& w, const std::vector<int>& candidates);
/// Replays the witness in a decider report against the rule it was run on.
bool report_replays(const LocalRule& rule, UpdateScheme scheme, const DecisionReport& report);

/// Synchronous inverse pairs of elementary rules (standard numbering).
std::vector<std::pair<int, int>> synchronous_inverse_pairs();

PropertyResult empty_activation_identity();
PropertyResult agreement_outside_active();
PropertyResult translation_commutation();
PropertyResult difference_symmetry();
PropertyResult wolfram_round_trip();
PropertyResult minimize_idempotent_and_faithful();
PropertyResult dummy_neighbor_invariance();
PropertyResult r2_validity();
PropertyResult purely_check_symmetry();
PropertyResult decider_inverse_consistency(UpdateScheme scheme);
PropertyResult witness_replay(UpdateScheme scheme);
PropertyResult bar_two_behaviors();
PropertyResult bar_time_monotonic();
PropertyResult bar_local_undo();
PropertyResult bar_lockstep();

}  // namespace aca::testkit
