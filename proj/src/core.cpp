#include "aca/core.hpp"

#include <algorithm>
#include <sstream>

namespace aca {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotElementary: return "NotElementary";
    case ErrorCode::LatticeTooSmall: return "LatticeTooSmall";
    case ErrorCode::NeighborhoodMismatch: return "NeighborhoodMismatch";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::NotOneDimensional: return "NotOneDimensional";
    case ErrorCode::CenterNotInNeighborhood: return "CenterNotInNeighborhood";
    case ErrorCode::CenterAhead: return "CenterAhead";
    case ErrorCode::CenterBehind: return "CenterBehind";
    case ErrorCode::ResourceCapExceeded: return "ResourceCapExceeded";
    case ErrorCode::MalformedRuleFile: return "MalformedRuleFile";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Cell

bool Cell::is_origin() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int x) { return x == 0; });
}

Cell Cell::operator-() const {
  std::vector<int> out(coords_.size());
  std::transform(coords_.begin(), coords_.end(), out.begin(), [](int x) { return -x; });
  return Cell(std::move(out));
}

Cell operator+(const Cell& a, const Cell& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::InvalidArgument, "cell dimension mismatch");
  }
  std::vector<int> out(a.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coords_[i] + b.coords_[i];
  return Cell(std::move(out));
}

Cell operator-(const Cell& a, const Cell& b) { return a + (-b); }

std::string to_string(const Cell& c) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < c.dimension(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Alphabet / Neighborhood

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 1 || size > kMaxAlphabet) {
    throw Error(ErrorCode::InvalidArgument,
                "alphabet size must be in 1.." + std::to_string(kMaxAlphabet));
  }
}

Neighborhood::Neighborhood(int dimension, std::vector<Cell> offsets)
    : dimension_(dimension), offsets_(std::move(offsets)) {
  if (dimension < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  for (const auto& o : offsets_) {
    if (o.dimension() != dimension) {
      throw Error(ErrorCode::InvalidArgument, "offset " + to_string(o) + " has wrong dimension");
    }
  }
  std::sort(offsets_.begin(), offsets_.end());
  if (std::adjacent_find(offsets_.begin(), offsets_.end()) != offsets_.end()) {
    throw Error(ErrorCode::InvalidArgument, "neighborhood offsets must be distinct");
  }
}

Neighborhood Neighborhood::line(std::initializer_list<int> offsets) {
  return line(std::vector<int>(offsets));
}

Neighborhood Neighborhood::line(const std::vector<int>& offsets) {
  std::vector<Cell> cells;
  cells.reserve(offsets.size());
  for (int o : offsets) cells.push_back(Cell{o});
  return Neighborhood(1, std::move(cells));
}

std::optional<std::size_t> Neighborhood::index_of(const Cell& offset) const {
  auto it = std::lower_bound(offsets_.begin(), offsets_.end(), offset);
  if (it == offsets_.end() || *it != offset) return std::nullopt;
  return static_cast<std::size_t>(it - offsets_.begin());
}

Neighborhood Neighborhood::merged(const Neighborhood& other) const {
  if (other.dimension_ != dimension_) {
    throw Error(ErrorCode::NeighborhoodMismatch, "cannot merge neighborhoods of different dimension");
  }
  CellSet all(offsets_.begin(), offsets_.end());
  all.insert(other.offsets_.begin(), other.offsets_.end());
  return Neighborhood(dimension_, std::vector<Cell>(all.begin(), all.end()));
}

Neighborhood Neighborhood::symmetrized() const {
  CellSet all(offsets_.begin(), offsets_.end());
  for (const auto& o : offsets_) all.insert(-o);
  all.insert(Cell::origin(dimension_));
  return Neighborhood(dimension_, std::vector<Cell>(all.begin(), all.end()));
}

bool Neighborhood::is_subset_of(const Neighborhood& other) const {
  if (other.dimension_ != dimension_) return false;
  return std::includes(other.offsets_.begin(), other.offsets_.end(), offsets_.begin(), offsets_.end());
}

// ---------------------------------------------------------------------------
// LocalRule

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent, std::uint64_t limit) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > limit / base) {
      throw Error(ErrorCode::ResourceCapExceeded,
                  std::to_string(base) + "^" + std::to_string(exponent) + " exceeds " +
                      std::to_string(limit));
    }
    result *= base;
  }
  if (result > limit) {
    throw Error(ErrorCode::ResourceCapExceeded, "size exceeds " + std::to_string(limit));
  }
  return result;
}

LocalRule::LocalRule(Alphabet alphabet, Neighborhood neighborhood, std::vector<State> table)
    : alphabet_(alphabet), neighborhood_(std::move(neighborhood)), table_(std::move(table)) {
  const auto expected = checked_power(static_cast<std::uint64_t>(alphabet_.size()),
                                      neighborhood_.size(), kMaxTableSize);
  if (table_.size() != expected) {
    throw Error(ErrorCode::InvalidArgument, "rule table has " + std::to_string(table_.size()) +
                                                " entries, expected " + std::to_string(expected));
  }
  for (State s : table_) {
    if (!alphabet_.contains(s)) {
      throw Error(ErrorCode::InvalidArgument, "rule table entry " + std::to_string(s) +
                                                  " outside alphabet");
    }
  }
}

LocalRule LocalRule::tabulate(Alphabet alphabet, Neighborhood neighborhood,
                              const std::function<State(std::span<const State>)>& fn) {
  const auto size = checked_power(static_cast<std::uint64_t>(alphabet.size()), neighborhood.size(),
                                  kMaxTableSize);
  std::vector<State> table(size);
  std::vector<State> local(neighborhood.size(), 0);
  const int q = alphabet.size();
  for (std::size_t idx = 0; idx < size; ++idx) {
    table[idx] = fn(local);
    for (std::size_t j = local.size(); j-- > 0;) {
      if (++local[j] < q) break;
      local[j] = 0;
    }
  }
  return LocalRule(alphabet, std::move(neighborhood), std::move(table));
}

std::size_t LocalRule::index_of(std::span<const State> local) const {
  if (local.size() != neighborhood_.size()) {
    throw Error(ErrorCode::InvalidArgument, "local configuration has wrong length");
  }
  std::size_t idx = 0;
  const auto q = static_cast<std::size_t>(alphabet_.size());
  for (State s : local) idx = idx * q + s;
  return idx;
}

std::vector<State> LocalRule::local_at(std::size_t index) const {
  std::vector<State> local(neighborhood_.size());
  const auto q = static_cast<std::size_t>(alphabet_.size());
  for (std::size_t j = local.size(); j-- > 0;) {
    local[j] = static_cast<State>(index % q);
    index /= q;
  }
  return local;
}

bool is_identity_rule(const LocalRule& rule) {
  const auto center = rule.neighborhood().index_of(Cell::origin(rule.dimension()));
  if (!center) return false;
  for (std::size_t idx = 0; idx < rule.table_size(); ++idx) {
    if (rule.at_index(idx) != rule.local_at(idx)[*center]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// WindowConfig / ActivationSet

WindowConfig WindowConfig::interval(int first, const std::vector<State>& values) {
  std::map<Cell, State> m;
  for (std::size_t i = 0; i < values.size(); ++i) m.emplace(Cell{first + static_cast<int>(i)}, values[i]);
  return WindowConfig(std::move(m));
}

WindowConfig WindowConfig::from(const std::vector<Cell>& cells, std::span<const State> values) {
  if (cells.size() != values.size()) {
    throw Error(ErrorCode::InvalidArgument, "cell and value counts differ");
  }
  std::map<Cell, State> m;
  for (std::size_t i = 0; i < cells.size(); ++i) m.emplace(cells[i], values[i]);
  return WindowConfig(std::move(m));
}

State WindowConfig::at(const Cell& c) const {
  auto it = values_.find(c);
  if (it == values_.end()) throw Error(ErrorCode::OutOfDomain, "cell " + to_string(c) + " not in window");
  return it->second;
}

std::vector<Cell> WindowConfig::domain() const {
  std::vector<Cell> out;
  out.reserve(values_.size());
  for (const auto& [cell, _] : values_) out.push_back(cell);
  return out;
}

WindowConfig WindowConfig::with(const Cell& c, State s) const {
  auto copy = values_;
  copy[c] = s;
  return WindowConfig(std::move(copy));
}

std::vector<State> WindowConfig::segment(int first, int last) const {
  std::vector<State> out;
  for (int i = first; i <= last; ++i) out.push_back(at(Cell{i}));
  return out;
}

std::string to_string(const WindowConfig& c) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [cell, s] : c.values()) {
    os << (first ? "" : ", ") << to_string(cell) << ':' << int(s);
    first = false;
  }
  os << '}';
  return os.str();
}

ActivationSet ActivationSet::shifted(const Cell& j) const {
  CellSet out;
  for (const auto& c : cells_) out.insert(c - j);
  return ActivationSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Operations

std::vector<State> local_config(const WindowConfig& c, const Cell& i, const Neighborhood& n) {
  std::vector<State> local;
  local.reserve(n.size());
  for (const auto& off : n.offsets()) local.push_back(c.at(i + off));
  return local;
}

WindowConfig step(const LocalRule& rule, const WindowConfig& c, const ActivationSet& active) {
  auto out = c.values();
  for (const auto& a : active.cells()) {
    if (!c.contains(a)) throw Error(ErrorCode::OutOfDomain, "active cell " + to_string(a) + " not in window");
    out[a] = rule(local_config(c, a, rule.neighborhood()));
  }
  return WindowConfig(std::move(out));
}

CellSet difference(const WindowConfig& c, const WindowConfig& c2) {
  if (c.size() != c2.size()) throw Error(ErrorCode::DomainMismatch, "windows have different domains");
  CellSet out;
  auto it2 = c2.values().begin();
  for (const auto& [cell, s] : c.values()) {
    if (it2->first != cell) throw Error(ErrorCode::DomainMismatch, "windows have different domains");
    if (it2->second != s) out.insert(cell);
    ++it2;
  }
  return out;
}

WindowConfig translate(const WindowConfig& c, const Cell& j) {
  std::map<Cell, State> out;
  for (const auto& [cell, s] : c.values()) out.emplace(cell - j, s);
  return WindowConfig(std::move(out));
}

std::string_view to_string(WolframOrder order) {
  return order == WolframOrder::Standard ? "standard" : "reflected";
}

WolframOrder parse_wolfram_order(std::string_view name) {
  if (name == "standard") return WolframOrder::Standard;
  if (name == "reflected") return WolframOrder::Reflected;
  throw Error(ErrorCode::InvalidArgument, "numbering must be 'standard' or 'reflected'");
}

namespace {

int bit_for_index(int idx, WolframOrder order) { return order == WolframOrder::Standard ? idx : 7 - idx; }

}  // namespace

LocalRule eca_from_wolfram(int number, WolframOrder order) {
  if (number < 0 || number > 255) {
    throw Error(ErrorCode::OutOfRange, "Wolfram number " + std::to_string(number) + " not in 0..255");
  }
  std::vector<State> table(8);
  for (int idx = 0; idx < 8; ++idx) table[idx] = static_cast<State>((number >> bit_for_index(idx, order)) & 1);
  return LocalRule(Alphabet(2), Neighborhood::line({-1, 0, 1}), std::move(table));
}

bool is_elementary(const LocalRule& rule) {
  return rule.states() == 2 && rule.neighborhood() == Neighborhood::line({-1, 0, 1});
}

int wolfram_number(const LocalRule& rule, WolframOrder order) {
  if (!is_elementary(rule)) {
    throw Error(ErrorCode::NotElementary, "rule is not binary with neighborhood (-1,0,1)");
  }
  int n = 0;
  for (int idx = 0; idx < 8; ++idx) n |= int(rule.at_index(idx)) << bit_for_index(idx, order);
  return n;
}

int reflect_wolfram(int number) {
  if (number < 0 || number > 255) {
    throw Error(ErrorCode::OutOfRange, "Wolfram number " + std::to_string(number) + " not in 0..255");
  }
  int out = 0;
  for (int i = 0; i < 8; ++i) out |= ((number >> i) & 1) << (7 - i);
  return out;
}

namespace {

bool depends_on(const LocalRule& rule, std::size_t digit) {
  const auto q = static_cast<std::size_t>(rule.states());
  const std::size_t k = rule.neighborhood().size();
  std::size_t weight = 1;
  for (std::size_t j = digit + 1; j < k; ++j) weight *= q;
  for (std::size_t idx = 0; idx < rule.table_size(); ++idx) {
    if ((idx / weight) % q != 0) continue;
    const State base = rule.at_index(idx);
    for (std::size_t v = 1; v < q; ++v) {
      if (rule.at_index(idx + v * weight) != base) return true;
    }
  }
  return false;
}

}  // namespace

LocalRule minimize_neighborhood(const LocalRule& rule) {
  const auto& n = rule.neighborhood();
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (depends_on(rule, j)) kept.push_back(j);
  }
  if (kept.size() == n.size()) return rule;

  std::vector<Cell> offsets;
  for (auto j : kept) offsets.push_back(n[j]);
  Neighborhood reduced(n.dimension(), offsets);
  return LocalRule::tabulate(rule.alphabet(), reduced, [&](std::span<const State> local) {
    std::vector<State> full(n.size(), 0);
    for (std::size_t i = 0; i < kept.size(); ++i) full[kept[i]] = local[i];
    return rule(full);
  });
}

LocalRule expand_neighborhood(const LocalRule& rule, const Neighborhood& target) {
  const auto& n = rule.neighborhood();
  if (!n.is_subset_of(target)) {
    throw Error(ErrorCode::NeighborhoodMismatch, "target neighborhood does not contain the rule's");
  }
  if (n == target) return rule;
  std::vector<std::size_t> pos;
  for (const auto& off : n.offsets()) pos.push_back(*target.index_of(off));
  return LocalRule::tabulate(rule.alphabet(), target, [&](std::span<const State> local) {
    std::vector<State> sub(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) sub[i] = local[pos[i]];
    return rule(sub);
  });
}

}  // namespace aca
