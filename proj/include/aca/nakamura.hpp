#pragma once

// Bar construction: each cell stores (current state, previous state, time
// stamp mod 3). A cell only advances when no neighbor still needs its old
// state, which turns a synchronous inverse pair (C, G) into a purely
// asynchronous inverse pair (C̄, Ḡ).

#include <span>
#include <vector>

#include "aca/core.hpp"
#include "aca/invertibility.hpp"
#include "aca/simulate.hpp"

namespace aca {

struct BarState {
  State curr = 0;
  State old = 0;
  int time = 0;  ///< in {0,1,2}

  friend bool operator==(const BarState&, const BarState&) = default;
};

/// Bijection BarState <-> 0..3q²-1 used in serialized tables:
/// curr·3q + old·3 + time.
int encode_bar(const BarState& s, int states);
BarState decode_bar(int code, int states);

/// A bar local configuration together with the position of cell 0 in it.
struct BarLocal {
  std::span<const BarState> cells;
  std::size_t center;
};

bool is_ahead(const BarLocal& l);
bool is_behind(const BarLocal& l);

/// Current local C-configuration; throws CenterAhead if a neighbor lags.
std::vector<State> curr_local(const BarLocal& l);
/// Old local C-configuration; throws CenterBehind if a neighbor leads.
std::vector<State> old_local(const BarLocal& l);

bool forward_movable(const BarLocal& l, const LocalRule& g);
bool backward_movable(const BarLocal& l, const LocalRule& c);

struct BarRulePair {
  LocalRule bar_c;
  LocalRule bar_g;
  int base_states;  ///< q of the underlying pair
};

/// Both inputs are first re-expressed over the symmetric neighborhood
/// N ∪ (−N) ∪ {0} (union over the two rules).
BarRulePair build_bar_pair(const LocalRule& c, const LocalRule& g);

/// Cell i becomes (c(i), gamma(c_{i+N}), t). The rule must cover every cell's
/// neighborhood inside the window.
WindowConfig embed(const WindowConfig& c, const LocalRule& g, int time);
/// Same on a cyclic lattice; returns encoded bar states.
CyclicConfig embed(const CyclicConfig& c, const LocalRule& g, int time);

/// Runs the purely asynchronous checker on the bar pair. Does not check that
/// (C, G) are synchronous inverses.
DecisionReport verify_theorem1(const LocalRule& c, const LocalRule& g, const Limits& limits = {});

}  // namespace aca
