#include "aca/simulate.hpp"

#include <algorithm>
#include <random>

namespace aca {

namespace {

void require_line(const LocalRule& rule) {
  if (rule.dimension() != 1) throw Error(ErrorCode::NotOneDimensional, "cyclic lattices are one-dimensional");
}

int wrap(long i, long n) { return static_cast<int>(((i % n) + n) % n); }

}  // namespace

int extent(const Neighborhood& n) {
  if (n.empty()) return 0;
  return n.offsets().back()[0] - n.offsets().front()[0] + 1;
}

std::vector<State> cyclic_local(const CyclicConfig& c, int i, const Neighborhood& n) {
  std::vector<State> local;
  local.reserve(n.size());
  const long size = static_cast<long>(c.size());
  for (const auto& off : n.offsets()) local.push_back(c[wrap(long{i} + off[0], size)]);
  return local;
}

CyclicConfig cyclic_step(const LocalRule& rule, const CyclicConfig& c, const std::vector<int>& active) {
  require_line(rule);
  CyclicConfig out = c;
  for (int a : active) {
    if (a < 0 || a >= static_cast<int>(c.size())) {
      throw Error(ErrorCode::OutOfDomain, "active cell " + std::to_string(a) + " outside lattice");
    }
    out[a] = rule(cyclic_local(c, a, rule.neighborhood()));
  }
  return out;
}

CyclicConfig cyclic_sync_step(const LocalRule& rule, const CyclicConfig& c) {
  std::vector<int> all(c.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return cyclic_step(rule, c, all);
}

Trace simulate(const LocalRule& rule, const CyclicConfig& init, const Scheme& scheme, int steps,
               std::uint64_t seed) {
  require_line(rule);
  const int n = static_cast<int>(init.size());
  if (n < 1 || n < extent(rule.neighborhood())) {
    throw Error(ErrorCode::LatticeTooSmall, "lattice of size " + std::to_string(n) +
                                                " is smaller than the neighborhood extent");
  }
  if (steps < 0) throw Error(ErrorCode::InvalidArgument, "steps must be non-negative");
  for (State s : init) {
    if (!rule.alphabet().contains(s)) throw Error(ErrorCode::InvalidArgument, "initial state outside alphabet");
  }
  if (const auto* purely = std::get_if<PurelyScheme>(&scheme)) {
    if (!(purely->p >= 0.0 && purely->p <= 1.0)) {
      throw Error(ErrorCode::InvalidArgument, "activation probability must be in [0,1]");
    }
  }

  std::mt19937_64 rng(seed);
  Trace trace;
  trace.configs.push_back(init);
  for (int t = 0; t < steps; ++t) {
    std::vector<int> active;
    if (const auto* purely = std::get_if<PurelyScheme>(&scheme)) {
      std::bernoulli_distribution coin(purely->p);
      for (int i = 0; i < n; ++i) {
        if (coin(rng)) active.push_back(i);
      }
    } else {
      std::uniform_int_distribution<int> pick(0, n - 1);
      active.push_back(pick(rng));
    }
    trace.configs.push_back(cyclic_step(rule, trace.configs.back(), active));
    trace.activations.push_back(std::move(active));
  }
  return trace;
}

}  // namespace aca
