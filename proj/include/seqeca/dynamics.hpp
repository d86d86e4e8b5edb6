#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "seqeca/configuration.hpp"
#include "seqeca/mode.hpp"
#include "seqeca/rule.hpp"

namespace seqeca {

// Rule table re-indexed for contiguous bit extraction: entry at
// l | c<<1 | r<<2 instead of the Wolfram ordering 4l + 2c + r.
class CellStepper {
 public:
  CellStepper(const RuleTable& rule, int n) : n_(n) {
    for (unsigned p = 0; p < 8; ++p) {
      unsigned l = p & 1u, c = (p >> 1) & 1u, r = (p >> 2) & 1u;
      table_ |= rule.apply(l, c, r) << p;
    }
  }

  // Re-evaluate one cell against the current word.
  std::uint32_t update_cell(std::uint32_t x, int c) const {
    unsigned p;
    if (c == 0)
      p = ((x >> (n_ - 1)) & 1u) | ((x & 3u) << 1);
    else if (c == n_ - 1)
      p = ((x >> (n_ - 2)) & 3u) | ((x & 1u) << 2);
    else
      p = (x >> (c - 1)) & 7u;
    return (x & ~(1u << c)) | (((table_ >> p) & 1u) << c);
  }

  // One full pass in the given order.
  std::uint32_t sweep(std::uint32_t x, const std::vector<int>& order) const {
    for (int c : order) x = update_cell(x, c);
    return x;
  }

  int size() const { return n_; }

 private:
  int n_;
  std::uint32_t table_ = 0;
};

// Cells in `block` are re-evaluated simultaneously against x; others keep
// their state.
inline std::uint32_t substep_bits(const RuleTable& rule, std::uint32_t x, int n,
                                  std::uint32_t block) {
  const std::uint32_t out = parallel_step_bits(rule, x, n);
  return (x & ~block) | (out & block);
}

inline Configuration substep(const RuleTable& rule, const Configuration& x,
                             const std::vector<int>& block) {
  if (block.empty()) throw std::invalid_argument("substep block cannot be empty");
  std::uint32_t mask = 0;
  for (int c : block) {
    if (c < 0 || c >= x.size()) throw std::invalid_argument("substep cell index out of range");
    mask |= 1u << c;
  }
  return Configuration(x.size(), substep_bits(rule, x.bits(), x.size(), mask));
}

// An elementary rule on a ring of n cells driven by a periodic update mode.
struct DynamicalSystem {
  RuleTable rule;
  int n;
  UpdateMode mode;

  DynamicalSystem(RuleTable r, UpdateMode m) : rule(r), n(m.size()), mode(std::move(m)) {}
  DynamicalSystem(RuleTable r, const SequentialMode& m)
      : DynamicalSystem(r, UpdateMode::from_sequential(m)) {}
};

inline std::uint32_t step_bits(const DynamicalSystem& sys, std::uint32_t x) {
  for (std::uint32_t block : sys.mode.blocks()) x = substep_bits(sys.rule, x, sys.n, block);
  return x;
}

inline Configuration step(const DynamicalSystem& sys, const Configuration& x) {
  if (x.size() != sys.n) throw std::invalid_argument("configuration size does not match system");
  return Configuration(sys.n, step_bits(sys, x.bits()));
}

// Full step map over the 2^n configurations.
inline std::vector<std::uint32_t> step_map(const DynamicalSystem& sys) {
  const std::uint32_t count = 1u << sys.n;
  std::vector<std::uint32_t> next(count);
  for (std::uint32_t x = 0; x < count; ++x) next[x] = step_bits(sys, x);
  return next;
}

// Fast path for sequential modes; writes into a caller-owned buffer so the
// mode-enumeration loops do not allocate.
inline void sequential_step_map(const CellStepper& stepper, const std::vector<int>& order,
                                std::vector<std::uint32_t>& next) {
  const std::uint32_t count = 1u << stepper.size();
  next.resize(count);
  for (std::uint32_t x = 0; x < count; ++x) next[x] = stepper.sweep(x, order);
}

inline std::vector<std::uint32_t> step_map(const RuleTable& rule, const SequentialMode& mode) {
  CellStepper stepper(rule, mode.size());
  std::vector<std::uint32_t> next;
  sequential_step_map(stepper, mode.order(), next);
  return next;
}

// Transient length, cycle length and the configurations on the cycle, at step
// granularity.
struct OrbitRecord {
  int transient = 0;
  int cycle = 1;
  std::vector<Configuration> limit_set;  // in cycle order, starting at the first repeated config

  bool fixed_point() const { return cycle == 1; }
};

inline OrbitRecord orbit(const DynamicalSystem& sys, const Configuration& start,
                         long max_steps = -1) {
  if (start.size() != sys.n) throw std::invalid_argument("configuration size does not match system");
  if (max_steps < 0) max_steps = 1L << sys.n;
  std::unordered_map<std::uint32_t, int> seen_at;
  std::vector<std::uint32_t> trail;
  std::uint32_t x = start.bits();
  int t = 0;
  while (true) {
    auto it = seen_at.find(x);
    if (it != seen_at.end()) {
      OrbitRecord rec;
      rec.transient = it->second;
      rec.cycle = t - it->second;
      for (int k = it->second; k < t; ++k)
        rec.limit_set.emplace_back(sys.n, trail[static_cast<std::size_t>(k)]);
      return rec;
    }
    seen_at.emplace(x, t);
    trail.push_back(x);
    if (t > max_steps) throw std::logic_error("orbit did not close within max_steps");
    x = step_bits(sys, x);
    ++t;
  }
}

// All configurations the synchronous map leaves unchanged, ascending.  Under
// block-sequential modes (sequential ones included) the fixed points of the
// step map are exactly these.
inline std::vector<Configuration> fixed_points_parallel(const RuleTable& rule, int n) {
  if (n < Configuration::kMinSize || n > Configuration::kMaxSize)
    throw std::out_of_range("ring size must be in [3, 30]");
  std::vector<Configuration> out;
  const std::uint64_t count = 1ull << n;
  for (std::uint64_t x = 0; x < count; ++x) {
    auto bits = static_cast<std::uint32_t>(x);
    if (parallel_step_bits(rule, bits, n) == bits) out.emplace_back(n, bits);
  }
  return out;
}

}  // namespace seqeca
