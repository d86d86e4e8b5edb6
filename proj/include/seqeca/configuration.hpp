#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqeca/rule.hpp"

namespace seqeca {

// State of a ring of n cells, bit-packed: cell i is bit i of the word, and
// cell 0 is the leftmost character in text form.  Neighbors wrap modulo n.
class Configuration {
 public:
  static constexpr int kMinSize = 3;
  static constexpr int kMaxSize = 30;

  Configuration(int n, std::uint32_t bits) : n_(n), bits_(bits) {
    if (n < kMinSize || n > kMaxSize) throw std::out_of_range("ring size must be in [3, 30]");
    if (n < 32 && (bits >> n) != 0) throw std::invalid_argument("configuration bits exceed ring size");
  }

  static Configuration zeros(int n) { return Configuration(n, 0); }
  static Configuration ones(int n) { return Configuration(n, mask_for(n)); }

  static Configuration from_string(std::string_view text) {
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1')
        bits |= 1u << i;
      else if (text[i] != '0')
        throw std::invalid_argument("configuration strings use characters '0' and '1'");
    }
    return Configuration(static_cast<int>(text.size()), bits);
  }

  int size() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  std::uint32_t mask() const { return mask_for(n_); }

  unsigned cell(int i) const { return (bits_ >> index(i)) & 1u; }

  Configuration with_cell(int i, unsigned value) const {
    int k = index(i);
    std::uint32_t b = (bits_ & ~(1u << k)) | ((value & 1u) << k);
    return Configuration(n_, b);
  }

  // rotated(r).cell(i) == cell(i + r)
  Configuration rotated(int r) const {
    int k = ((r % n_) + n_) % n_;
    if (k == 0) return *this;
    std::uint32_t b = ((bits_ >> k) | (bits_ << (n_ - k))) & mask();
    return Configuration(n_, b);
  }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
      if (cell(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  friend bool operator==(const Configuration& a, const Configuration& b) = default;
  friend auto operator<=>(const Configuration& a, const Configuration& b) = default;

  static constexpr std::uint32_t mask_for(int n) {
    return n >= 32 ? ~0u : (1u << n) - 1u;
  }

 private:
  int index(int i) const { return ((i % n_) + n_) % n_; }

  int n_;
  std::uint32_t bits_;
};

// Bit-parallel synchronous application of the rule to every cell at once.
inline std::uint32_t parallel_step_bits(const RuleTable& rule, std::uint32_t x, int n) {
  const std::uint32_t mask = Configuration::mask_for(n);
  // bit i of left = state of cell i-1, bit i of right = state of cell i+1
  const std::uint32_t left = ((x << 1) | (x >> (n - 1))) & mask;
  const std::uint32_t right = ((x >> 1) | (x << (n - 1))) & mask;
  std::uint32_t out = 0;
  for (unsigned p = 0; p < 8; ++p) {
    if (!rule.output(p)) continue;
    std::uint32_t term = (p & 4u) ? left : ~left;
    term &= (p & 2u) ? x : ~x;
    term &= (p & 1u) ? right : ~right;
    out |= term;
  }
  return out & mask;
}

inline Configuration parallel_step(const RuleTable& rule, const Configuration& x) {
  return Configuration(x.size(), parallel_step_bits(rule, x.bits(), x.size()));
}

// Maximal cyclic runs of equal states.  The first run is the one containing
// cell 0, extended backwards across the wrap-around; `start` is the index of
// its first cell, so reconstruction is exact.
struct Run {
  unsigned value;
  int length;
  friend bool operator==(const Run&, const Run&) = default;
};

class RunDecomposition {
 public:
  RunDecomposition(int n, int start, std::vector<Run> runs)
      : n_(n), start_(start), runs_(std::move(runs)) {}

  int size() const { return n_; }
  int start() const { return start_; }
  const std::vector<Run>& runs() const { return runs_; }

  Configuration reconstruct() const {
    std::uint32_t bits = 0;
    int pos = start_;
    for (const Run& run : runs_) {
      for (int j = 0; j < run.length; ++j) {
        if (run.value) bits |= 1u << (pos % n_);
        ++pos;
      }
    }
    return Configuration(n_, bits);
  }

 private:
  int n_;
  int start_;
  std::vector<Run> runs_;
};

inline RunDecomposition run_decomposition(const Configuration& x) {
  const int n = x.size();
  const unsigned first = x.cell(0);
  bool uniform = true;
  for (int i = 1; i < n && uniform; ++i) uniform = x.cell(i) == first;
  if (uniform) return RunDecomposition(n, 0, {Run{first, n}});

  // walk backwards to the start of the run containing cell 0
  int start = 0;
  while (x.cell(start - 1) == first) --start;
  start = ((start % n) + n) % n;

  std::vector<Run> runs;
  int pos = start;
  int consumed = 0;
  while (consumed < n) {
    unsigned v = x.cell(pos);
    int len = 0;
    while (consumed < n && x.cell(pos) == v) {
      ++pos;
      ++len;
      ++consumed;
    }
    runs.push_back(Run{v, len});
  }
  return RunDecomposition(n, start, std::move(runs));
}

}  // namespace seqeca
