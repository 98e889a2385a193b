#pragma once

// Naive deciders for one-dimensional two-state rules, written straight from
// the characterization lemmas by brute force over explicit bit masks. They
// share no code with the library checkers.

#include <vector>

#include "aca/core.hpp"

namespace aca::testkit {

/// Every rule with `states` states over `n`, in table order.
std::vector<LocalRule> all_rules(int states, const Neighborhood& n);

/// All pairs (c, c') over {0} ∪ N ∪ (N+N) with 0 ∈ D ⊆ {0} ∪ N satisfy
/// c' = Δ_D(c) ⟺ c = Γ_D(c').
bool naive_purely_inverse(const LocalRule& c, const LocalRule& g);

/// eq. (1) on pairs differing exactly at 0, eq. (2) on every window over
/// {0} ∪ N ∪ 𝒜 ∪ (𝒜+N).
bool naive_fully_inverse(const LocalRule& c, const LocalRule& g);

/// Some table over the same neighborhood is an inverse.
bool naive_purely_invertible(const LocalRule& c);
bool naive_fully_invertible(const LocalRule& c);

}  // namespace aca::testkit
