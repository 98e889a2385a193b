#pragma once

// Phase-space invertibility: finite-window criteria, candidate inverses and
// the two decision procedures (purely asynchronous in any dimension, fully
// asynchronous in one dimension).

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "aca/core.hpp"

namespace aca {

struct Limits {
  std::uint64_t window_cap = std::uint64_t{1} << 24;  ///< max |Q|^|T| per check
  std::uint64_t candidate_cap = 65536;                ///< max tables tried in exhaustive mode
  bool exhaustive = false;
  unsigned threads = 1;
};

enum class Verdict { Invertible, NotInvertible, ResourceCapExceeded };

enum class Clause {
  Eq1Forward,
  Eq1Backward,
  Eq2Delta,
  Eq2Gamma,
  PurelyForward,
  PurelyBackward,
  DerivationConflict,
};

std::string_view to_string(Verdict v);
std::string_view to_string(Clause c);

/// A concrete violation: the window, the activation set that exposes it and
/// the clause that fails. For the purely/eq1 clauses the window is the
/// configuration the named direction starts from.
struct Witness {
  WindowConfig window;
  ActivationSet active;
  Clause clause;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct DecisionStats {
  std::uint64_t windows = 0;
  double millis = 0.0;
};

struct DecisionReport {
  Verdict verdict = Verdict::NotInvertible;
  std::optional<LocalRule> inverse;
  std::optional<Witness> witness;
  /// The candidate inverse the witness refutes (absent for derivation conflicts).
  std::optional<LocalRule> refuted;
  DecisionStats stats;
};

/// T = {0} ∪ N ∪ (N+N) together with every D with 0 ∈ D ⊆ {0} ∪ N.
struct PurelyTestWindow {
  std::vector<Cell> cells;
  std::vector<std::vector<Cell>> active_family;  ///< lexicographic order
};

/// m = max |n| (empty when N = ∅, standing for −∞), the candidate cells
/// {−q^(2m+1), …, q^(2m+1)} (or {0}), and T = {0} ∪ N ∪ 𝒜 ∪ (𝒜+N).
struct FullyTestWindow {
  std::optional<int> max_distance;
  std::vector<int> candidates;
  std::vector<Cell> cells;
};

PurelyTestWindow purely_test_window(const Neighborhood& n);
/// Throws ResourceCapExceeded when the candidate range alone exceeds `limit` cells.
FullyTestWindow fully_test_window(const Neighborhood& n, int states, std::uint64_t limit = 1u << 20);

DecisionReport check_inverse_purely(const LocalRule& c, const LocalRule& g, const Limits& limits = {});
DecisionReport check_inverse_fully_1d(const LocalRule& c, const LocalRule& g, const Limits& limits = {});

/// Either a candidate inverse or a witness that none can exist.
struct CandidateDerivation {
  std::optional<LocalRule> candidate;
  std::optional<Witness> conflict;
};

/// Harvests gamma from the single-cell flips of `rule`: whenever cell 0 moves
/// from x to delta(l), gamma must send the post-flip local configuration back
/// to x.
CandidateDerivation derive_candidate_inverse(const LocalRule& rule);

DecisionReport decide_purely(const LocalRule& rule, const Limits& limits = {});
DecisionReport decide_fully_1d(const LocalRule& rule, const Limits& limits = {});

/// Two distinct configurations with a common successor under single-cell
/// activations: step(rule, hat, {hat_active}) == step(rule, check, {check_active}).
struct R2Witness {
  WindowConfig hat;
  WindowConfig check;
  Cell hat_active;
  Cell check_active;
};

std::optional<R2Witness> r2_counterexample(const LocalRule& rule);

}  // namespace aca
