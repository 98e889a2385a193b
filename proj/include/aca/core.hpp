#pragma once

// Alphabets, neighborhoods, rule tables, finite window configurations and the
// asynchronous step operator.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aca/error.hpp"

namespace aca {

using State = std::uint8_t;

inline constexpr int kMaxAlphabet = 256;
inline constexpr std::size_t kMaxTableSize = std::size_t{1} << 26;

/// A point of Z^d.
class Cell {
 public:
  Cell() = default;
  Cell(std::initializer_list<int> coords) : coords_(coords) {}
  explicit Cell(std::vector<int> coords) : coords_(std::move(coords)) {}

  static Cell origin(int dimension) { return Cell(std::vector<int>(dimension, 0)); }

  int dimension() const { return static_cast<int>(coords_.size()); }
  int operator[](int axis) const { return coords_[axis]; }
  const std::vector<int>& coords() const { return coords_; }
  bool is_origin() const;

  Cell operator-() const;
  friend Cell operator+(const Cell& a, const Cell& b);
  friend Cell operator-(const Cell& a, const Cell& b);

  friend auto operator<=>(const Cell&, const Cell&) = default;
  friend bool operator==(const Cell&, const Cell&) = default;

 private:
  std::vector<int> coords_;
};

std::string to_string(const Cell& c);

using CellSet = std::set<Cell>;

class Alphabet {
 public:
  explicit Alphabet(int size);
  int size() const { return size_; }
  bool contains(int s) const { return s >= 0 && s < size_; }
  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int size_;
};

/// Ordered, duplicate-free set of offsets. Offsets are kept sorted so equal
/// neighborhoods compare equal element for element.
class Neighborhood {
 public:
  Neighborhood(int dimension, std::vector<Cell> offsets);

  /// One-dimensional convenience constructor.
  static Neighborhood line(std::initializer_list<int> offsets);
  static Neighborhood line(const std::vector<int>& offsets);

  int dimension() const { return dimension_; }
  std::size_t size() const { return offsets_.size(); }
  bool empty() const { return offsets_.empty(); }
  const std::vector<Cell>& offsets() const { return offsets_; }
  const Cell& operator[](std::size_t j) const { return offsets_[j]; }

  std::optional<std::size_t> index_of(const Cell& offset) const;
  bool contains(const Cell& offset) const { return index_of(offset).has_value(); }
  bool contains_origin() const { return contains(Cell::origin(dimension_)); }

  /// N ∪ other (same dimension).
  Neighborhood merged(const Neighborhood& other) const;
  /// N ∪ (−N) ∪ {0}.
  Neighborhood symmetrized() const;
  bool is_subset_of(const Neighborhood& other) const;

  friend bool operator==(const Neighborhood&, const Neighborhood&) = default;

 private:
  int dimension_;
  std::vector<Cell> offsets_;
};

/// Local transition function delta: Q^N -> Q stored as a full table.
///
/// A local configuration l is indexed by the mixed-radix number
/// sum_j l(n_j) * q^(k-1-j) over the offsets in canonical order, so the first
/// offset is the most significant digit. For elementary rules this index is
/// the Wolfram bit position.
class LocalRule {
 public:
  LocalRule(Alphabet alphabet, Neighborhood neighborhood, std::vector<State> table);

  static LocalRule tabulate(Alphabet alphabet, Neighborhood neighborhood,
                            const std::function<State(std::span<const State>)>& fn);

  const Alphabet& alphabet() const { return alphabet_; }
  int states() const { return alphabet_.size(); }
  const Neighborhood& neighborhood() const { return neighborhood_; }
  int dimension() const { return neighborhood_.dimension(); }
  const std::vector<State>& table() const { return table_; }
  std::size_t table_size() const { return table_.size(); }

  std::size_t index_of(std::span<const State> local) const;
  std::vector<State> local_at(std::size_t index) const;

  State operator()(std::span<const State> local) const { return table_[index_of(local)]; }
  State at_index(std::size_t index) const { return table_[index]; }

  friend bool operator==(const LocalRule&, const LocalRule&) = default;

 private:
  Alphabet alphabet_;
  Neighborhood neighborhood_;
  std::vector<State> table_;
};

/// q^k, throwing ResourceCapExceeded if it exceeds `limit`.
std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent, std::uint64_t limit);

/// Finite configuration: a finite set of cells mapped to states.
class WindowConfig {
 public:
  WindowConfig() = default;
  explicit WindowConfig(std::map<Cell, State> values) : values_(std::move(values)) {}

  /// One-dimensional window on first, first+1, ..., first+len-1.
  static WindowConfig interval(int first, const std::vector<State>& values);
  /// Every cell of `cells` set to the matching entry of `values`.
  static WindowConfig from(const std::vector<Cell>& cells, std::span<const State> values);

  std::size_t size() const { return values_.size(); }
  bool contains(const Cell& c) const { return values_.count(c) != 0; }
  State at(const Cell& c) const;
  std::vector<Cell> domain() const;
  const std::map<Cell, State>& values() const { return values_; }

  WindowConfig with(const Cell& c, State s) const;
  /// States on cells i..j of a one-dimensional window.
  std::vector<State> segment(int first, int last) const;

  friend bool operator==(const WindowConfig&, const WindowConfig&) = default;

 private:
  std::map<Cell, State> values_;
};

std::string to_string(const WindowConfig& c);

/// Set of cells active in one step. May be empty.
class ActivationSet {
 public:
  ActivationSet() = default;
  ActivationSet(std::initializer_list<Cell> cells) : cells_(cells) {}
  explicit ActivationSet(CellSet cells) : cells_(std::move(cells)) {}

  const CellSet& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }
  bool contains(const Cell& c) const { return cells_.count(c) != 0; }
  /// A − j.
  ActivationSet shifted(const Cell& j) const;

  friend bool operator==(const ActivationSet&, const ActivationSet&) = default;

 private:
  CellSet cells_;
};

std::vector<State> local_config(const WindowConfig& c, const Cell& i, const Neighborhood& n);

/// Delta_A: cells in A apply the rule to their (pre-step) neighborhood, all
/// other cells keep their state.
WindowConfig step(const LocalRule& rule, const WindowConfig& c, const ActivationSet& active);

CellSet difference(const WindowConfig& c, const WindowConfig& c2);

/// tau_j: result(i) = c(i + j).
WindowConfig translate(const WindowConfig& c, const Cell& j);

/// How the bits of an elementary rule number map onto table indices.
/// Standard: bit i is the output for table index i = 4·l(−1) + 2·l(0) + l(1).
/// Reflected: bit i is the output for table index 7 − i. The published
/// invertibility lists for elementary rules are numbered this way.
enum class WolframOrder { Standard, Reflected };

std::string_view to_string(WolframOrder order);
WolframOrder parse_wolfram_order(std::string_view name);

LocalRule eca_from_wolfram(int number, WolframOrder order = WolframOrder::Standard);
int wolfram_number(const LocalRule& rule, WolframOrder order = WolframOrder::Standard);
bool is_elementary(const LocalRule& rule);
/// Converts a rule number between the two orders (an involution).
int reflect_wolfram(int number);

/// Drops every dummy neighbor.
LocalRule minimize_neighborhood(const LocalRule& rule);

/// Re-expresses `rule` over a superset neighborhood; the added offsets are
/// dummies.
LocalRule expand_neighborhood(const LocalRule& rule, const Neighborhood& target);

/// True when delta(l) == l(0) for all l (requires 0 in N).
bool is_identity_rule(const LocalRule& rule);

}  // namespace aca
