#pragma once

// Sandbox simulator on a cyclic one-dimensional lattice. Periodic boundaries
// are a demonstration device only; the deciders never use them.

#include <cstdint>
#include <variant>
#include <vector>

#include "aca/core.hpp"

namespace aca {

/// States on Z_n, indexed 0..n-1.
using CyclicConfig = std::vector<State>;

struct PurelyScheme {
  double p = 0.5;  ///< per-cell activation probability
};
struct FullyScheme {};
using Scheme = std::variant<PurelyScheme, FullyScheme>;

struct Trace {
  std::vector<CyclicConfig> configs;          ///< configs[0] is the initial one
  std::vector<std::vector<int>> activations;  ///< activations[t] produced configs[t+1]
};

/// Delta_A on the cyclic lattice.
CyclicConfig cyclic_step(const LocalRule& rule, const CyclicConfig& c, const std::vector<int>& active);
/// Delta_R on the cyclic lattice.
CyclicConfig cyclic_sync_step(const LocalRule& rule, const CyclicConfig& c);
std::vector<State> cyclic_local(const CyclicConfig& c, int i, const Neighborhood& n);

/// max - min + 1 over the offsets of a one-dimensional neighborhood (0 if empty).
int extent(const Neighborhood& n);

Trace simulate(const LocalRule& rule, const CyclicConfig& init, const Scheme& scheme, int steps,
               std::uint64_t seed);

}  // namespace aca
