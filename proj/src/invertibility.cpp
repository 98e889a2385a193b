#include "aca/invertibility.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "window_kernel.hpp"

namespace aca {

using detail::Hit;
using detail::Probe;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Invertible: return "Invertible";
    case Verdict::NotInvertible: return "NotInvertible";
    case Verdict::ResourceCapExceeded: return "ResourceCapExceeded";
  }
  return "?";
}

std::string_view to_string(Clause c) {
  switch (c) {
    case Clause::Eq1Forward: return "eq1-forward";
    case Clause::Eq1Backward: return "eq1-backward";
    case Clause::Eq2Delta: return "eq2-delta";
    case Clause::Eq2Gamma: return "eq2-gamma";
    case Clause::PurelyForward: return "purely-forward";
    case Clause::PurelyBackward: return "purely-backward";
    case Clause::DerivationConflict: return "derivation-conflict";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_compatible(const LocalRule& c, const LocalRule& g) {
  if (c.alphabet() != g.alphabet()) {
    throw Error(ErrorCode::AlphabetMismatch, "rule and candidate inverse use different alphabets");
  }
  if (c.neighborhood() != g.neighborhood()) {
    throw Error(ErrorCode::NeighborhoodMismatch, "rule and candidate inverse use different neighborhoods");
  }
}

DecisionReport cap_exceeded(Clock::time_point start) {
  DecisionReport r;
  r.verdict = Verdict::ResourceCapExceeded;
  r.stats.millis = millis_since(start);
  return r;
}

std::vector<Cell> origin_and(const Neighborhood& n) {
  CellSet s(n.offsets().begin(), n.offsets().end());
  s.insert(Cell::origin(n.dimension()));
  return {s.begin(), s.end()};
}

}  // namespace

// ---------------------------------------------------------------------------
// Test windows

PurelyTestWindow purely_test_window(const Neighborhood& n) {
  PurelyTestWindow w;
  const auto probes = origin_and(n);
  CellSet t(probes.begin(), probes.end());
  for (const auto& a : n.offsets()) {
    for (const auto& b : n.offsets()) t.insert(a + b);
  }
  w.cells.assign(t.begin(), t.end());

  const Cell zero = Cell::origin(n.dimension());
  const std::size_t zero_pos = std::find(probes.begin(), probes.end(), zero) - probes.begin();
  const std::size_t k = probes.size();
  if (k > 20) throw Error(ErrorCode::ResourceCapExceeded, "neighborhood too large for subset enumeration");
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (!(mask & (1u << zero_pos))) continue;
    std::vector<Cell> d;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask & (1u << j)) d.push_back(probes[j]);
    }
    w.active_family.push_back(std::move(d));
  }
  std::sort(w.active_family.begin(), w.active_family.end());
  return w;
}

FullyTestWindow fully_test_window(const Neighborhood& n, int states, std::uint64_t limit) {
  if (n.dimension() != 1) throw Error(ErrorCode::NotOneDimensional, "fully asynchronous test window is one-dimensional");
  FullyTestWindow w;
  if (n.empty()) {
    w.candidates = {0};
  } else {
    int m = 0;
    for (const auto& o : n.offsets()) m = std::max(m, std::abs(o[0]));
    w.max_distance = m;
    const auto reach = checked_power(static_cast<std::uint64_t>(states), 2 * std::uint64_t(m) + 1, limit);
    const int r = static_cast<int>(reach);
    for (int a = -r; a <= r; ++a) w.candidates.push_back(a);
  }
  CellSet t{Cell{0}};
  t.insert(n.offsets().begin(), n.offsets().end());
  for (int a : w.candidates) {
    t.insert(Cell{a});
    for (const auto& o : n.offsets()) t.insert(Cell{a + o[0]});
  }
  w.cells.assign(t.begin(), t.end());
  return w;
}

// ---------------------------------------------------------------------------
// Purely asynchronous check

DecisionReport check_inverse_purely(const LocalRule& c, const LocalRule& g, const Limits& limits) {
  const auto start = Clock::now();
  require_compatible(c, g);

  const auto tw = purely_test_window(c.neighborhood());
  std::uint64_t total = 0;
  try {
    total = checked_power(static_cast<std::uint64_t>(c.states()), tw.cells.size(), limits.window_cap);
  } catch (const Error&) {
    return cap_exceeded(start);
  }

  const auto probe_cells = origin_and(c.neighborhood());
  std::vector<Probe> probes;
  for (const auto& cell : probe_cells) probes.push_back(detail::make_probe(tw.cells, cell, c.neighborhood()));
  std::vector<std::vector<std::uint32_t>> family;  // D as indices into probes
  for (const auto& d : tw.active_family) {
    std::vector<std::uint32_t> ids;
    for (const auto& cell : d) {
      ids.push_back(static_cast<std::uint32_t>(std::find(probe_cells.begin(), probe_cells.end(), cell) -
                                               probe_cells.begin()));
    }
    family.push_back(std::move(ids));
  }

  const int q = c.states();
  const auto qs = static_cast<std::size_t>(q);
  const auto& fwd = c.table();
  const auto& bwd = g.table();

  // One direction: apply `there` on D; if every cell of D changed, applying
  // `back` on D must restore w.
  auto one_way = [&](std::vector<State>& w, std::vector<State>& scratch, const std::vector<std::uint32_t>& d,
                     const std::vector<State>& there, const std::vector<State>& back) {
    scratch = w;
    for (auto p : d) {
      const State v = there[detail::local_index(w, probes[p], qs)];
      if (v == w[probes[p].self]) return true;  // D is not the difference set
      scratch[probes[p].self] = v;
    }
    for (auto p : d) {
      if (back[detail::local_index(scratch, probes[p], qs)] != w[probes[p].self]) return false;
    }
    return true;
  };

  auto scan = [&](std::uint64_t begin, std::uint64_t end) -> std::optional<Hit> {
    std::vector<State> w(tw.cells.size());
    std::vector<State> scratch;
    detail::decode_window(begin, q, w);
    for (std::uint64_t i = begin; i < end; ++i, detail::next_window(w, q)) {
      for (std::uint32_t k = 0; k < family.size(); ++k) {
        if (!one_way(w, scratch, family[k], fwd, bwd)) return Hit{i, 2 * k};
        if (!one_way(w, scratch, family[k], bwd, fwd)) return Hit{i, 2 * k + 1};
      }
    }
    return std::nullopt;
  };

  const auto hit = detail::find_first(total, limits.threads, scan);
  DecisionReport r;
  if (hit) {
    std::vector<State> w(tw.cells.size());
    detail::decode_window(hit->window, q, w);
    const auto& d = tw.active_family[hit->detail / 2];
    r.verdict = Verdict::NotInvertible;
    r.refuted = g;
    r.witness = Witness{WindowConfig::from(tw.cells, w), ActivationSet(CellSet(d.begin(), d.end())),
                        hit->detail % 2 == 0 ? Clause::PurelyForward : Clause::PurelyBackward};
    r.stats.windows = hit->window + 1;
  } else {
    r.verdict = Verdict::Invertible;
    r.inverse = g;
    r.stats.windows = total;
  }
  r.stats.millis = millis_since(start);
  return r;
}

// ---------------------------------------------------------------------------
// Fully asynchronous check (one dimension)

DecisionReport check_inverse_fully_1d(const LocalRule& c, const LocalRule& g, const Limits& limits) {
  const auto start = Clock::now();
  if (c.dimension() != 1 || g.dimension() != 1) {
    throw Error(ErrorCode::NotOneDimensional, "fully asynchronous criterion is one-dimensional");
  }
  require_compatible(c, g);

  FullyTestWindow tw;
  std::uint64_t total = 0;
  try {
    tw = fully_test_window(c.neighborhood(), c.states());
    total = checked_power(static_cast<std::uint64_t>(c.states()), tw.cells.size(), limits.window_cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ResourceCapExceeded) throw;
    return cap_exceeded(start);
  }

  const auto& n = c.neighborhood();
  const Probe center = detail::make_probe(tw.cells, Cell{0}, n);
  std::vector<Probe> candidates;
  for (int a : tw.candidates) candidates.push_back(detail::make_probe(tw.cells, Cell{a}, n));

  const int q = c.states();
  const auto qs = static_cast<std::size_t>(q);
  const auto& fwd = c.table();
  const auto& bwd = g.table();

  auto undo_ok = [&](std::vector<State>& w, const std::vector<State>& there, const std::vector<State>& back) {
    const State before = w[center.self];
    const State v = there[detail::local_index(w, center, qs)];
    if (v == before) return true;
    w[center.self] = v;
    const bool ok = back[detail::local_index(w, center, qs)] == before;
    w[center.self] = before;
    return ok;
  };
  auto fixed_point_matched = [&](const std::vector<State>& w, const std::vector<State>& fixed_by,
                                 const std::vector<State>& other) {
    if (fixed_by[detail::local_index(w, center, qs)] != w[center.self]) return true;
    for (const auto& p : candidates) {
      if (other[detail::local_index(w, p, qs)] == w[p.self]) return true;
    }
    return false;
  };

  auto scan = [&](std::uint64_t begin, std::uint64_t end) -> std::optional<Hit> {
    std::vector<State> w(tw.cells.size());
    detail::decode_window(begin, q, w);
    for (std::uint64_t i = begin; i < end; ++i, detail::next_window(w, q)) {
      if (!undo_ok(w, fwd, bwd)) return Hit{i, 0};
      if (!undo_ok(w, bwd, fwd)) return Hit{i, 1};
      if (!fixed_point_matched(w, fwd, bwd)) return Hit{i, 2};
      if (!fixed_point_matched(w, bwd, fwd)) return Hit{i, 3};
    }
    return std::nullopt;
  };

  const auto hit = detail::find_first(total, limits.threads, scan);
  DecisionReport r;
  if (hit) {
    static constexpr Clause kClauses[] = {Clause::Eq1Forward, Clause::Eq1Backward, Clause::Eq2Delta,
                                          Clause::Eq2Gamma};
    std::vector<State> w(tw.cells.size());
    detail::decode_window(hit->window, q, w);
    r.verdict = Verdict::NotInvertible;
    r.refuted = g;
    r.witness = Witness{WindowConfig::from(tw.cells, w), ActivationSet{Cell{0}}, kClauses[hit->detail]};
    r.stats.windows = hit->window + 1;
  } else {
    r.verdict = Verdict::Invertible;
    r.inverse = g;
    r.stats.windows = total;
  }
  r.stats.millis = millis_since(start);
  return r;
}

// ---------------------------------------------------------------------------
// Candidate inverse

CandidateDerivation derive_candidate_inverse(const LocalRule& rule) {
  const auto& n = rule.neighborhood();
  const int q = rule.states();
  const auto center = n.index_of(Cell::origin(n.dimension()));
  std::vector<int> gamma(rule.table_size(), -1);
  std::vector<std::size_t> conflicted;

  auto constrain = [&](std::size_t at, State value) {
    if (gamma[at] == -1) {
      gamma[at] = value;
    } else if (gamma[at] != value) {
      conflicted.push_back(at);
    }
  };

  for (std::size_t idx = 0; idx < rule.table_size(); ++idx) {
    const State next = rule.at_index(idx);
    if (center) {
      auto local = rule.local_at(idx);
      const State before = local[*center];
      if (next == before) continue;
      local[*center] = next;
      constrain(rule.index_of(local), before);
    } else {
      for (int x = 0; x < q; ++x) {
        if (x != next) constrain(idx, static_cast<State>(x));
      }
    }
  }

  CandidateDerivation out;
  if (!conflicted.empty()) {
    // The conflicted gamma entry l' has two distinct single-flip
    // predecessors; report it as a window over {0} ∪ N, least first.
    const auto cells = origin_and(n);
    std::optional<std::vector<State>> least;
    for (auto at : conflicted) {
      const auto local = rule.local_at(at);
      std::vector<State> w(cells.size());
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (auto j = n.index_of(cells[i])) {
          w[i] = local[*j];
        } else {
          w[i] = rule.at_index(at);  // cell 0 outside N: it holds the successor
        }
      }
      if (!least || w < *least) least = w;
    }
    out.conflict = Witness{WindowConfig::from(cells, *least), ActivationSet{Cell::origin(n.dimension())},
                           Clause::DerivationConflict};
    return out;
  }

  std::vector<State> table(rule.table_size());
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    if (gamma[idx] >= 0) {
      table[idx] = static_cast<State>(gamma[idx]);
    } else {
      table[idx] = center ? rule.local_at(idx)[*center] : State{0};
    }
  }
  out.candidate = LocalRule(rule.alphabet(), n, std::move(table));
  return out;
}

// ---------------------------------------------------------------------------
// Deciders

namespace {

using Checker = DecisionReport (*)(const LocalRule&, const LocalRule&, const Limits&);

/// Adds every cell the original rule reads from the window, set to 0. The
/// added cells are dummies, so the clause outcome is unchanged.
void pad_witness(std::optional<Witness>& w, const Neighborhood& n) {
  if (!w) return;
  auto values = w->window.values();
  for (const auto& [cell, state] : w->window.values()) {
    for (const auto& o : n.offsets()) values.try_emplace(cell + o, State{0});
  }
  w->window = WindowConfig(std::move(values));
}

DecisionReport decide_with(const LocalRule& rule, const Limits& limits, Checker check) {
  const auto start = Clock::now();
  if (rule.states() == 1) {
    DecisionReport r;
    r.verdict = Verdict::Invertible;
    r.inverse = rule;
    r.stats.millis = millis_since(start);
    return r;
  }

  const LocalRule minimal = minimize_neighborhood(rule);
  const auto derivation = derive_candidate_inverse(minimal);
  if (derivation.conflict) {
    DecisionReport r;
    r.verdict = Verdict::NotInvertible;
    r.witness = derivation.conflict;
    if (minimal.neighborhood() != rule.neighborhood()) pad_witness(r.witness, rule.neighborhood());
    r.stats.millis = millis_since(start);
    return r;
  }

  auto report = check(minimal, *derivation.candidate, limits);
  std::uint64_t windows = report.stats.windows;
  auto finish = [&](DecisionReport r) {
    if (r.inverse) r.inverse = expand_neighborhood(*r.inverse, rule.neighborhood());
    if (r.refuted) r.refuted = expand_neighborhood(*r.refuted, rule.neighborhood());
    if (minimal.neighborhood() != rule.neighborhood()) pad_witness(r.witness, rule.neighborhood());
    r.stats.windows = windows;
    r.stats.millis = millis_since(start);
    return r;
  };
  if (report.verdict != Verdict::NotInvertible || !limits.exhaustive) return finish(std::move(report));

  // Exhaustive fallback over every table on the minimal neighborhood.
  std::uint64_t count = 0;
  try {
    count = checked_power(static_cast<std::uint64_t>(rule.states()), minimal.table_size(), limits.candidate_cap);
  } catch (const Error&) {
    DecisionReport r;
    r.verdict = Verdict::ResourceCapExceeded;
    return finish(std::move(r));
  }
  std::vector<State> table(minimal.table_size(), 0);
  for (std::uint64_t i = 0; i < count; ++i, detail::next_window(table, rule.states())) {
    if (table == derivation.candidate->table()) continue;
    LocalRule g(minimal.alphabet(), minimal.neighborhood(), table);
    auto attempt = check(minimal, g, limits);
    windows += attempt.stats.windows;
    if (attempt.verdict == Verdict::Invertible) return finish(std::move(attempt));
    if (attempt.verdict == Verdict::ResourceCapExceeded) return finish(std::move(attempt));
  }
  return finish(std::move(report));
}

}  // namespace

DecisionReport decide_purely(const LocalRule& rule, const Limits& limits) {
  return decide_with(rule, limits, &check_inverse_purely);
}

DecisionReport decide_fully_1d(const LocalRule& rule, const Limits& limits) {
  if (rule.dimension() != 1) throw Error(ErrorCode::NotOneDimensional, "fully asynchronous decider is one-dimensional");
  return decide_with(rule, limits, &check_inverse_fully_1d);
}

// ---------------------------------------------------------------------------
// Two predecessors for any non-trivial rule

std::optional<R2Witness> r2_counterexample(const LocalRule& rule) {
  const auto& n = rule.neighborhood();
  const int d = n.dimension();
  const auto center = n.index_of(Cell::origin(d));
  if (!center) throw Error(ErrorCode::CenterNotInNeighborhood, "the origin must be a neighbor");

  std::optional<std::size_t> flip;
  for (std::size_t idx = 0; idx < rule.table_size(); ++idx) {
    if (rule.at_index(idx) != rule.local_at(idx)[*center]) {
      flip = idx;
      break;
    }
  }
  if (!flip) return std::nullopt;
  const auto local = rule.local_at(*flip);
  const State successor = rule.at_index(*flip);

  // Least a = s·e1 with (−a+N) and (a+N) disjoint.
  CellSet diffs;
  for (const auto& x : n.offsets()) {
    for (const auto& y : n.offsets()) diffs.insert(y - x);
  }
  Cell a;
  for (int s = 1;; ++s) {
    std::vector<int> coords(d, 0);
    coords[0] = s;
    a = Cell(coords);
    if (!diffs.count(a + a)) break;
  }

  // Background over the bounding box of both neighborhoods, 0 outside them.
  std::vector<int> lo(d), hi(d);
  for (int axis = 0; axis < d; ++axis) {
    lo[axis] = hi[axis] = 0;
    for (const auto& o : n.offsets()) {
      lo[axis] = std::min(lo[axis], o[axis] - a[axis]);
      hi[axis] = std::max(hi[axis], o[axis] + a[axis]);
    }
  }
  std::map<Cell, State> values;
  std::vector<int> cur = lo;
  for (;;) {
    values.emplace(Cell(cur), 0);
    int axis = d - 1;
    while (axis >= 0 && cur[axis] == hi[axis]) {
      cur[axis] = lo[axis];
      --axis;
    }
    if (axis < 0) break;
    ++cur[axis];
  }
  for (std::size_t j = 0; j < n.size(); ++j) {
    values[-a + n[j]] = local[j];
    values[a + n[j]] = local[j];
  }
  const WindowConfig base(values);

  R2Witness w{base.with(-a, successor), base.with(a, successor), a, -a};
  if (w.hat == w.check ||
      step(rule, w.hat, ActivationSet{w.hat_active}) != step(rule, w.check, ActivationSet{w.check_active})) {
    throw std::logic_error("r2 witness failed verification");
  }
  return w;
}

}  // namespace aca
