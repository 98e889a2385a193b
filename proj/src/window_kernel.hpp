#pragma once

// Flat enumeration machinery shared by the checkers. A window over T is a
// state array indexed like the sorted cell list; window number i is the
// mixed-radix value of that array with the first cell most significant, so
// increasing i is lexicographic window order.

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "aca/core.hpp"

namespace aca::detail {

/// A cell of T that gets updated, with its neighbors resolved to indices into T.
struct Probe {
  std::uint32_t self = 0;
  std::vector<std::uint32_t> neighbors;
};

inline std::uint32_t index_in(const std::vector<Cell>& cells, const Cell& c) {
  auto it = std::lower_bound(cells.begin(), cells.end(), c);
  if (it == cells.end() || *it != c) {
    throw Error(ErrorCode::OutOfDomain, "cell " + to_string(c) + " outside the test window");
  }
  return static_cast<std::uint32_t>(it - cells.begin());
}

inline Probe make_probe(const std::vector<Cell>& cells, const Cell& at, const Neighborhood& n) {
  Probe p;
  p.self = index_in(cells, at);
  for (const auto& off : n.offsets()) p.neighbors.push_back(index_in(cells, at + off));
  return p;
}

/// Table index of the local configuration seen by `p` in window `w`.
inline std::size_t local_index(const std::vector<State>& w, const Probe& p, std::size_t q) {
  std::size_t idx = 0;
  for (auto nb : p.neighbors) idx = idx * q + w[nb];
  return idx;
}

inline void decode_window(std::uint64_t index, int q, std::vector<State>& w) {
  for (std::size_t j = w.size(); j-- > 0;) {
    w[j] = static_cast<State>(index % static_cast<std::uint64_t>(q));
    index /= static_cast<std::uint64_t>(q);
  }
}

inline void next_window(std::vector<State>& w, int q) {
  for (std::size_t j = w.size(); j-- > 0;) {
    if (++w[j] < q) return;
    w[j] = 0;
  }
}

/// First violation inside a window: window number, then a per-window
/// ordinal (activation set / clause position).
struct Hit {
  std::uint64_t window = 0;
  std::uint32_t detail = 0;
  friend auto operator<=>(const Hit&, const Hit&) = default;
};

/// Runs `scan(begin, end)` over [0, total) split into chunks and returns the
/// least hit. `scan` must return the least hit inside its range. Chunks that
/// start after the best hit found so far are skipped, which cannot change
/// the minimum, so the result is independent of the thread count.
template <class Scan>
std::optional<Hit> find_first(std::uint64_t total, unsigned threads, Scan&& scan) {
  threads = std::max(1u, threads);
  const std::uint64_t chunk =
      std::clamp<std::uint64_t>(total / (std::uint64_t{threads} * 16), 1, std::uint64_t{1} << 14);
  const std::uint64_t chunks = (total + chunk - 1) / chunk;

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> bound{std::numeric_limits<std::uint64_t>::max()};
  std::mutex mu;
  std::optional<Hit> best;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      const std::uint64_t begin = c * chunk;
      if (begin > bound.load()) return;
      const std::uint64_t end = std::min(total, begin + chunk);
      if (auto hit = scan(begin, end)) {
        std::lock_guard lock(mu);
        if (!best || *hit < *best) {
          best = hit;
          bound.store(hit->window);
        }
      }
    }
  };

  if (threads == 1 || chunks == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    const auto n = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  return best;
}

}  // namespace aca::detail
