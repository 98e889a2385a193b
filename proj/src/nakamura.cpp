#include "aca/nakamura.hpp"

namespace aca {

namespace {

int mod3(int t) { return ((t % 3) + 3) % 3; }

int bar_states(int q) {
  const int size = 3 * q * q;
  if (size > kMaxAlphabet) throw Error(ErrorCode::InvalidArgument, "bar alphabet exceeds " + std::to_string(kMaxAlphabet));
  return size;
}

}  // namespace

int encode_bar(const BarState& s, int states) { return s.curr * 3 * states + s.old * 3 + mod3(s.time); }

BarState decode_bar(int code, int states) {
  return BarState{static_cast<State>(code / (3 * states)), static_cast<State>((code / 3) % states), code % 3};
}

bool is_ahead(const BarLocal& l) {
  const int t = l.cells[l.center].time;
  for (const auto& s : l.cells) {
    if (mod3(t) == mod3(s.time + 1)) return true;
  }
  return false;
}

bool is_behind(const BarLocal& l) {
  const int t = l.cells[l.center].time;
  for (const auto& s : l.cells) {
    if (mod3(t) == mod3(s.time - 1)) return true;
  }
  return false;
}

std::vector<State> curr_local(const BarLocal& l) {
  if (is_ahead(l)) throw Error(ErrorCode::CenterAhead, "cell 0 is ahead of a neighbor");
  const int t = l.cells[l.center].time;
  std::vector<State> out;
  out.reserve(l.cells.size());
  for (const auto& s : l.cells) out.push_back(mod3(s.time) == mod3(t) ? s.curr : s.old);
  return out;
}

std::vector<State> old_local(const BarLocal& l) {
  if (is_behind(l)) throw Error(ErrorCode::CenterBehind, "cell 0 is behind a neighbor");
  const int t = l.cells[l.center].time;
  std::vector<State> out;
  out.reserve(l.cells.size());
  for (const auto& s : l.cells) out.push_back(mod3(s.time) == mod3(t) ? s.old : s.curr);
  return out;
}

bool forward_movable(const BarLocal& l, const LocalRule& g) {
  return !is_ahead(l) && l.cells[l.center].old == g(curr_local(l));
}

bool backward_movable(const BarLocal& l, const LocalRule& c) {
  return !is_behind(l) && l.cells[l.center].curr == c(old_local(l));
}

BarRulePair build_bar_pair(const LocalRule& c, const LocalRule& g) {
  if (c.alphabet() != g.alphabet()) throw Error(ErrorCode::AlphabetMismatch, "bar pair needs a shared alphabet");
  if (c.dimension() != g.dimension()) throw Error(ErrorCode::NeighborhoodMismatch, "bar pair needs a shared dimension");
  const Neighborhood n = c.neighborhood().symmetrized().merged(g.neighborhood().symmetrized());
  const LocalRule cs = expand_neighborhood(c, n);
  const LocalRule gs = expand_neighborhood(g, n);
  const int q = c.states();
  const Alphabet bar(bar_states(q));
  const std::size_t center = *n.index_of(Cell::origin(n.dimension()));

  auto decoded = [q](std::span<const State> local) {
    std::vector<BarState> cells;
    cells.reserve(local.size());
    for (State s : local) cells.push_back(decode_bar(s, q));
    return cells;
  };

  auto bar_c = LocalRule::tabulate(bar, n, [&](std::span<const State> local) {
    const auto cells = decoded(local);
    const BarLocal l{cells, center};
    const BarState& self = cells[center];
    if (!forward_movable(l, gs)) return local[center];
    return static_cast<State>(encode_bar({cs(curr_local(l)), self.curr, self.time + 1}, q));
  });
  auto bar_g = LocalRule::tabulate(bar, n, [&](std::span<const State> local) {
    const auto cells = decoded(local);
    const BarLocal l{cells, center};
    const BarState& self = cells[center];
    if (!backward_movable(l, cs)) return local[center];
    return static_cast<State>(encode_bar({self.old, gs(old_local(l)), self.time - 1}, q));
  });
  return BarRulePair{std::move(bar_c), std::move(bar_g), q};
}

WindowConfig embed(const WindowConfig& c, const LocalRule& g, int time) {
  const int q = g.states();
  bar_states(q);
  std::map<Cell, State> out;
  for (const auto& [cell, s] : c.values()) {
    const State old = g(local_config(c, cell, g.neighborhood()));
    out.emplace(cell, static_cast<State>(encode_bar({s, old, time}, q)));
  }
  return WindowConfig(std::move(out));
}

CyclicConfig embed(const CyclicConfig& c, const LocalRule& g, int time) {
  if (g.dimension() != 1) throw Error(ErrorCode::NotOneDimensional, "cyclic lattices are one-dimensional");
  const int q = g.states();
  bar_states(q);
  CyclicConfig out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const State old = g(cyclic_local(c, static_cast<int>(i), g.neighborhood()));
    out[i] = static_cast<State>(encode_bar({c[i], old, time}, q));
  }
  return out;
}

DecisionReport verify_theorem1(const LocalRule& c, const LocalRule& g, const Limits& limits) {
  const auto pair = build_bar_pair(c, g);
  return check_inverse_purely(pair.bar_c, pair.bar_g, limits);
}

}  // namespace aca
