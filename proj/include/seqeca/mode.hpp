#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqeca/configuration.hpp"

namespace seqeca {

namespace detail {

inline int parse_int(std::string_view s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == start) throw std::invalid_argument("expected a cell index");
  int v = 0;
  for (std::size_t i = start; i < pos; ++i) v = v * 10 + (s[i] - '0');
  return v;
}

inline void expect(std::string_view s, std::size_t& pos, char c) {
  if (pos >= s.size() || s[pos] != c)
    throw std::invalid_argument(std::string("expected '") + c + "' in mode string");
  ++pos;
}

}  // namespace detail

// One cell per substep, every cell exactly once per step.
class SequentialMode {
 public:
  explicit SequentialMode(std::vector<int> order) : order_(std::move(order)) {
    const int n = static_cast<int>(order_.size());
    if (n < Configuration::kMinSize || n > Configuration::kMaxSize)
      throw std::out_of_range("mode length must be in [3, 30]");
    std::uint32_t seen = 0;
    for (int c : order_) {
      if (c < 0 || c >= n) throw std::invalid_argument("cell index out of range in mode");
      if ((seen >> c) & 1u) throw std::invalid_argument("cell repeated in sequential mode");
      seen |= 1u << c;
    }
  }

  static SequentialMode sweep_up(int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    return SequentialMode(std::move(order));
  }

  static SequentialMode sweep_down(int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = n - 1 - i;
    return SequentialMode(std::move(order));
  }

  // "(i0,i1,...,in-1)"
  static SequentialMode parse(std::string_view text) {
    std::size_t pos = 0;
    detail::expect(text, pos, '(');
    std::vector<int> order;
    while (true) {
      order.push_back(detail::parse_int(text, pos));
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    detail::expect(text, pos, ')');
    if (pos != text.size()) throw std::invalid_argument("trailing characters after mode");
    return SequentialMode(std::move(order));
  }

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  int at(int t) const { return order_[static_cast<std::size_t>(t)]; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(order_[i]);
    }
    s += ')';
    return s;
  }

  friend bool operator==(const SequentialMode&, const SequentialMode&) = default;

 private:
  std::vector<int> order_;
};

// Orientation of the update order on each adjacent cell pair: bit i is set
// when cell i updates before cell i+1 (mod n).  Equal signatures induce
// identical step maps, and a signature coming from a permutation is never
// all-zeros or all-ones (a cyclic chain of strict precedences cannot exist).
class ModeSignature {
 public:
  ModeSignature(int n, std::uint32_t bits) : n_(n), bits_(bits) {
    if (n < Configuration::kMinSize || n > Configuration::kMaxSize)
      throw std::out_of_range("signature length must be in [3, 30]");
    if (bits == 0 || bits == Configuration::mask_for(n))
      throw std::invalid_argument("signature cannot orient the whole ring one way");
    if ((bits >> n) != 0) throw std::invalid_argument("signature bits exceed ring size");
  }

  int size() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  bool before(int i) const { return (bits_ >> i) & 1u; }

  friend bool operator==(const ModeSignature&, const ModeSignature&) = default;

 private:
  int n_;
  std::uint32_t bits_;
};

inline ModeSignature mode_signature(const SequentialMode& mode) {
  const int n = mode.size();
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) position[static_cast<std::size_t>(mode.at(t))] = t;
  std::uint32_t bits = 0;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    if (position[static_cast<std::size_t>(i)] < position[static_cast<std::size_t>(j)])
      bits |= 1u << i;
  }
  return ModeSignature(n, bits);
}

// Lexicographically smallest topological order of the precedence relation a
// signature induces on adjacent cells (smallest available cell index first).
inline SequentialMode representative_mode(const ModeSignature& sig) {
  const int n = sig.size();
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  // edge i -> i+1 when bit i set, else i+1 -> i
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    if (sig.before(i))
      ++indegree[static_cast<std::size_t>(j)];
    else
      ++indegree[static_cast<std::size_t>(i)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int i = 0; i < n; ++i)
    if (indegree[static_cast<std::size_t>(i)] == 0) ready.push(i);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    int right = (v + 1) % n;
    int left = (v - 1 + n) % n;
    if (sig.before(v) && --indegree[static_cast<std::size_t>(right)] == 0) ready.push(right);
    if (!sig.before(left) && --indegree[static_cast<std::size_t>(left)] == 0) ready.push(left);
  }
  return SequentialMode(std::move(order));
}

// One sequential mode per realizable signature; there are 2^n - 2 of them.
inline std::vector<SequentialMode> representative_modes(int n) {
  if (n < Configuration::kMinSize || n > 12)
    throw std::out_of_range("representative enumeration supports n in [3, 12]");
  std::vector<SequentialMode> out;
  out.reserve((1u << n) - 2);
  for (std::uint32_t s = 1; s < Configuration::mask_for(n); ++s)
    out.push_back(representative_mode(ModeSignature(n, s)));
  return out;
}

// Periodic update mode: an ordered list of non-empty cell blocks, one block
// updated synchronously per substep.
class UpdateMode {
 public:
  UpdateMode(int n, std::vector<std::uint32_t> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n < Configuration::kMinSize || n > Configuration::kMaxSize)
      throw std::out_of_range("ring size must be in [3, 30]");
    if (blocks_.empty()) throw std::invalid_argument("update mode needs at least one block");
    for (std::uint32_t b : blocks_) {
      if (b == 0) throw std::invalid_argument("update blocks cannot be empty");
      if ((b >> n) != 0) throw std::invalid_argument("update block references cells outside the ring");
    }
  }

  static UpdateMode parallel(int n) {
    return UpdateMode(n, {Configuration::mask_for(n)});
  }

  static UpdateMode from_sequential(const SequentialMode& mode) {
    std::vector<std::uint32_t> blocks;
    blocks.reserve(static_cast<std::size_t>(mode.size()));
    for (int c : mode.order()) blocks.push_back(1u << c);
    return UpdateMode(mode.size(), std::move(blocks));
  }

  // ";"-separated blocks, each "{a,b,...}"
  static UpdateMode parse(int n, std::string_view text) {
    std::vector<std::uint32_t> blocks;
    std::size_t pos = 0;
    while (true) {
      detail::expect(text, pos, '{');
      std::uint32_t block = 0;
      while (true) {
        int cell = detail::parse_int(text, pos);
        if (cell < 0 || cell >= n) throw std::invalid_argument("cell index out of range in block");
        block |= 1u << cell;
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        break;
      }
      detail::expect(text, pos, '}');
      blocks.push_back(block);
      if (pos < text.size() && text[pos] == ';') {
        ++pos;
        continue;
      }
      break;
    }
    if (pos != text.size()) throw std::invalid_argument("trailing characters after mode");
    return UpdateMode(n, std::move(blocks));
  }

  int size() const { return n_; }
  int period() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::uint32_t>& blocks() const { return blocks_; }

  bool sequential() const {
    if (period() != n_) return false;
    std::uint32_t seen = 0;
    for (std::uint32_t b : blocks_) {
      if ((b & (b - 1)) != 0) return false;  // not a singleton
      seen |= b;
    }
    return seen == Configuration::mask_for(n_);
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      if (k) s += ';';
      s += '{';
      bool first = true;
      for (int i = 0; i < n_; ++i) {
        if ((blocks_[k] >> i) & 1u) {
          if (!first) s += ',';
          s += std::to_string(i);
          first = false;
        }
      }
      s += '}';
    }
    return s;
  }

  friend bool operator==(const UpdateMode&, const UpdateMode&) = default;

 private:
  int n_;
  std::vector<std::uint32_t> blocks_;
};

// Apply `first` for one step, then `second`: blocks concatenate verbatim and
// the induced step map is second's map composed with first's.
inline UpdateMode temporal_compose(const UpdateMode& first, const UpdateMode& second) {
  if (first.size() != second.size())
    throw std::invalid_argument("temporal composition needs equal ring sizes");
  std::vector<std::uint32_t> blocks = first.blocks();
  blocks.insert(blocks.end(), second.blocks().begin(), second.blocks().end());
  return UpdateMode(first.size(), std::move(blocks));
}

inline UpdateMode temporal_compose(const SequentialMode& first, const SequentialMode& second) {
  return temporal_compose(UpdateMode::from_sequential(first), UpdateMode::from_sequential(second));
}

}  // namespace seqeca
