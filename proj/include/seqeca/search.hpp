#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqeca/dynamics.hpp"
#include "seqeca/mode.hpp"
#include "seqeca/parallel.hpp"

namespace seqeca {

// Fixed-capacity bitset over the 2^n configurations.
class ConfigSet {
 public:
  ConfigSet() = default;
  explicit ConfigSet(std::uint32_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::uint32_t size() const { return size_; }
  bool test(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset() { std::fill(words_.begin(), words_.end(), 0); }

  void operator|=(const ConfigSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
  }

  std::uint32_t count() const {
    std::uint32_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::uint32_t>(__builtin_popcountll(w));
    return c;
  }

  // |this & ~taken|
  std::uint32_t count_new(const ConfigSet& taken) const {
    std::uint32_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += static_cast<std::uint32_t>(__builtin_popcountll(words_[k] & ~taken.words_[k]));
    return c;
  }

  bool all() const {
    std::uint32_t remaining = size_;
    for (std::uint64_t w : words_) {
      std::uint32_t chunk = remaining < 64 ? remaining : 64;
      std::uint64_t mask = chunk == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << chunk) - 1);
      if ((w & mask) != mask) return false;
      remaining -= chunk;
    }
    return true;
  }

  friend bool operator==(const ConfigSet&, const ConfigSet&) = default;

 private:
  std::uint32_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

namespace detail {

// Reusable scratch space for convergence analysis of one step map.
struct ConvergenceBuffers {
  std::vector<std::uint32_t> mark;
  std::vector<std::uint8_t> done;
  std::uint32_t pass = 0;
  // predecessor CSR for reverse reachability
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> preds;
  std::vector<std::uint32_t> queue;
};

// True when every configuration eventually sits on a fixed point; otherwise
// fills `witness` with the smallest non-convergent configuration.
inline bool all_converge(const std::vector<std::uint32_t>& next, ConvergenceBuffers& buf,
                         std::uint32_t* witness = nullptr) {
  const auto count = static_cast<std::uint32_t>(next.size());
  if (buf.mark.size() != next.size() || buf.pass > 0x7fffffffu) {
    buf.mark.assign(next.size(), 0);
    buf.pass = 0;
  }
  buf.done.assign(next.size(), 0);
  for (std::uint32_t s = 0; s < count; ++s) {
    if (buf.done[s]) continue;
    ++buf.pass;
    std::uint32_t u = s;
    while (!buf.done[u] && buf.mark[u] != buf.pass) {
      buf.mark[u] = buf.pass;
      u = next[u];
    }
    if (!buf.done[u] && next[u] != u) {
      if (witness) *witness = s;
      return false;
    }
    u = s;
    while (!buf.done[u]) {
      buf.done[u] = 1;
      u = next[u];
    }
  }
  return true;
}

// Set of configurations whose orbit reaches a fixed point: reverse reachability
// from the fixed points through a predecessor table.
inline void converged_set(const std::vector<std::uint32_t>& next, ConvergenceBuffers& buf,
                          ConfigSet& out) {
  const auto count = static_cast<std::uint32_t>(next.size());
  out = ConfigSet(count);
  buf.offsets.assign(count + 1, 0);
  for (std::uint32_t x = 0; x < count; ++x) ++buf.offsets[next[x] + 1];
  for (std::uint32_t v = 0; v < count; ++v) buf.offsets[v + 1] += buf.offsets[v];
  buf.preds.resize(count);
  {
    std::vector<std::uint32_t>& cursor = buf.queue;  // reuse as cursor scratch
    cursor.assign(buf.offsets.begin(), buf.offsets.end() - 1);
    for (std::uint32_t x = 0; x < count; ++x) buf.preds[cursor[next[x]]++] = x;
  }
  buf.queue.clear();
  for (std::uint32_t v = 0; v < count; ++v) {
    if (next[v] == v) {
      out.set(v);
      buf.queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < buf.queue.size(); ++head) {
    std::uint32_t v = buf.queue[head];
    for (std::uint32_t k = buf.offsets[v]; k < buf.offsets[v + 1]; ++k) {
      std::uint32_t p = buf.preds[k];
      if (!out.test(p)) {
        out.set(p);
        buf.queue.push_back(p);
      }
    }
  }
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Permutation of {0..n-1} at `rank` in lexicographic order.
inline std::vector<int> nth_permutation(int n, std::uint64_t rank) {
  std::vector<int> avail(static_cast<std::size_t>(n));
  std::iota(avail.begin(), avail.end(), 0);
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(n));
  std::uint64_t f = factorial(n - 1);
  for (int left = n - 1; left >= 0; --left) {
    auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    perm.push_back(avail[idx]);
    avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(idx));
    if (left > 0) f /= static_cast<std::uint64_t>(left);
  }
  return perm;
}

inline void check_search_size(int n, int limit, const char* what) {
  if (n < Configuration::kMinSize || n > limit)
    throw std::out_of_range(std::string(what) + " supports n in [3, " + std::to_string(limit) + "]");
}

}  // namespace detail

struct UniversalityVerdict {
  int rule_code;
  int n;
  SequentialMode mode;
  bool universal;
  std::optional<Configuration> witness;       // smallest non-convergent configuration
  std::optional<OrbitRecord> witness_orbit;   // its orbit, cycle length >= 2
};

inline UniversalityVerdict is_universal(const RuleTable& rule, int n, const SequentialMode& mode) {
  detail::check_search_size(n, 20, "universality check");
  if (mode.size() != n) throw std::invalid_argument("mode length does not match ring size");
  CellStepper stepper(rule, n);
  std::vector<std::uint32_t> next;
  sequential_step_map(stepper, mode.order(), next);
  detail::ConvergenceBuffers buf;
  std::uint32_t witness = 0;
  UniversalityVerdict v{rule.code().value(), n, mode, true, std::nullopt, std::nullopt};
  if (!detail::all_converge(next, buf, &witness)) {
    v.universal = false;
    v.witness = Configuration(n, witness);
    v.witness_orbit = orbit(DynamicalSystem(rule, mode), *v.witness);
  }
  return v;
}

enum class Counting { kRaw, kClasses };

inline const char* counting_name(Counting c) { return c == Counting::kRaw ? "raw" : "classes"; }

// Number of universal sequential modes, either over all n! permutations or
// over the 2^n - 2 signature classes (one representative each).
inline std::uint64_t count_universal_modes(const RuleTable& rule, int n, Counting counting,
                                           const SearchOptions& opts = {}) {
  if (counting == Counting::kRaw)
    detail::check_search_size(n, 9, "raw mode counting");
  else
    detail::check_search_size(n, 12, "class mode counting");

  const std::uint64_t total =
      counting == Counting::kRaw ? detail::factorial(n) : (std::uint64_t{1} << n) - 2;
  if (opts.progress) opts.progress->total = total;

  const int workers = resolve_workers(opts.workers);
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
  run_partitioned(total, workers, [&](int w, std::uint64_t begin, std::uint64_t end) {
    CellStepper stepper(rule, n);
    std::vector<std::uint32_t> next;
    detail::ConvergenceBuffers buf;
    std::uint64_t found = 0;
    if (counting == Counting::kRaw) {
      std::vector<int> perm = detail::nth_permutation(n, begin);
      for (std::uint64_t r = begin; r < end; ++r) {
        sequential_step_map(stepper, perm, next);
        if (detail::all_converge(next, buf)) ++found;
        std::next_permutation(perm.begin(), perm.end());
        if (opts.progress && ((r - begin) & 1023) == 1023)
          opts.progress->done.fetch_add(1024, std::memory_order_relaxed);
      }
    } else {
      for (std::uint64_t s = begin; s < end; ++s) {
        SequentialMode mode = representative_mode(ModeSignature(n, static_cast<std::uint32_t>(s) + 1));
        sequential_step_map(stepper, mode.order(), next);
        if (detail::all_converge(next, buf)) ++found;
      }
    }
    partial[static_cast<std::size_t>(w)] = found;
  });
  std::uint64_t sum = 0;
  for (std::uint64_t p : partial) sum += p;
  return sum;
}

// Converged set per representative mode, computed in parallel; index k holds
// the set for signature k+1.
inline std::vector<ConfigSet> converged_sets_by_class(const RuleTable& rule, int n,
                                                      const SearchOptions& opts = {}) {
  detail::check_search_size(n, 12, "mode class enumeration");
  const std::uint64_t total = (std::uint64_t{1} << n) - 2;
  std::vector<ConfigSet> sets(total);
  run_partitioned(total, opts.workers, [&](int, std::uint64_t begin, std::uint64_t end) {
    CellStepper stepper(rule, n);
    std::vector<std::uint32_t> next;
    detail::ConvergenceBuffers buf;
    for (std::uint64_t s = begin; s < end; ++s) {
      SequentialMode mode = representative_mode(ModeSignature(n, static_cast<std::uint32_t>(s) + 1));
      sequential_step_map(stepper, mode.order(), next);
      detail::converged_set(next, buf, sets[s]);
    }
  });
  return sets;
}

// Configurations that fail to reach a fixed point under every sequential mode
// (equal signatures give equal dynamics, so class representatives are
// exhaustive), ascending.
inline std::vector<Configuration> non_convergent_configs(const RuleTable& rule, int n,
                                                         const SearchOptions& opts = {}) {
  detail::check_search_size(n, 9, "non-convergence sweep");
  auto sets = converged_sets_by_class(rule, n, opts);
  ConfigSet any(std::uint32_t{1} << n);
  for (const auto& s : sets) any |= s;
  std::vector<Configuration> out;
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x)
    if (!any.test(x)) out.emplace_back(n, x);
  return out;
}

enum class CoverStrategy { kGreedy, kExact };

struct CoveringEntry {
  SequentialMode mode;
  std::vector<Configuration> covers;  // configurations assigned to this mode, ascending
};

struct CoveringResult {
  int rule_code;
  int n;
  std::optional<std::vector<CoveringEntry>> covering;
  std::vector<Configuration> witnesses;  // configurations convergent under no mode

  bool found() const { return covering.has_value(); }
};

namespace detail {

// Branch and bound for minimum set cover: branch over the sets containing the
// lowest uncovered configuration.
class ExactCover {
 public:
  ExactCover(const std::vector<ConfigSet>& sets, std::uint32_t universe)
      : sets_(sets), universe_(universe) {}

  std::vector<std::size_t> solve(const std::vector<std::size_t>& greedy) {
    best_ = greedy;
    covered_ = ConfigSet(universe_);
    chosen_.clear();
    descend();
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void descend() {
    std::uint32_t lowest = universe_;
    for (std::uint32_t x = 0; x < universe_; ++x) {
      if (!covered_.test(x)) {
        lowest = x;
        break;
      }
    }
    if (lowest == universe_) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + 1 >= best_.size()) return;
    for (std::size_t k = 0; k < sets_.size(); ++k) {
      if (!sets_[k].test(lowest)) continue;
      ConfigSet saved = covered_;
      covered_ |= sets_[k];
      chosen_.push_back(k);
      descend();
      chosen_.pop_back();
      covered_ = std::move(saved);
    }
  }

  const std::vector<ConfigSet>& sets_;
  std::uint32_t universe_;
  ConfigSet covered_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
};

}  // namespace detail

inline CoveringResult find_covering(const RuleTable& rule, int n,
                                    CoverStrategy strategy = CoverStrategy::kGreedy,
                                    const SearchOptions& opts = {}) {
  detail::check_search_size(n, strategy == CoverStrategy::kExact ? 9 : 12, "covering search");
  const std::uint32_t universe = std::uint32_t{1} << n;
  auto sets = converged_sets_by_class(rule, n, opts);

  CoveringResult result{rule.code().value(), n, std::nullopt, {}};
  ConfigSet any(universe);
  for (const auto& s : sets) any |= s;
  if (!any.all()) {
    for (std::uint32_t x = 0; x < universe; ++x)
      if (!any.test(x)) result.witnesses.emplace_back(n, x);
    return result;
  }

  // greedy: repeatedly take the mode converging the most uncovered configs
  std::vector<std::size_t> picked;
  {
    ConfigSet covered(universe);
    while (!covered.all()) {
      std::size_t best = sets.size();
      std::uint32_t best_gain = 0;
      for (std::size_t k = 0; k < sets.size(); ++k) {
        std::uint32_t gain = sets[k].count_new(covered);
        if (gain > best_gain) {
          best_gain = gain;
          best = k;
        }
      }
      picked.push_back(best);
      covered |= sets[best];
    }
  }
  if (strategy == CoverStrategy::kExact) {
    std::sort(picked.begin(), picked.end());
    picked = detail::ExactCover(sets, universe).solve(picked);
  }

  // assign every configuration to the first picked mode that converges it
  std::vector<CoveringEntry> entries;
  ConfigSet assigned(universe);
  for (std::size_t k : picked) {
    CoveringEntry entry{representative_mode(ModeSignature(n, static_cast<std::uint32_t>(k) + 1)), {}};
    for (std::uint32_t x = 0; x < universe; ++x) {
      if (!assigned.test(x) && sets[k].test(x)) {
        assigned.set(x);
        entry.covers.emplace_back(n, x);
      }
    }
    entries.push_back(std::move(entry));
  }
  result.covering = std::move(entries);
  return result;
}

struct FixedPointReport {
  int rule_code;
  int n;
  bool exists;
  std::vector<Configuration> fixed_points;
};

inline FixedPointReport fixed_point_existence(const RuleTable& rule, int n) {
  FixedPointReport report{rule.code().value(), n, false, fixed_points_parallel(rule, n)};
  report.exists = !report.fixed_points.empty();
  return report;
}

struct IsolatedReport {
  int rule_code;
  int n;
  std::vector<Configuration> fixed_points;
  std::vector<Configuration> isolated;  // unreachable from any other configuration under any mode
  bool degenerate;                      // every configuration is a fixed point
};

inline IsolatedReport isolated_fixed_points(const RuleTable& rule, int n,
                                            const SearchOptions& opts = {}) {
  detail::check_search_size(n, 8, "isolation sweep");
  const std::uint32_t universe = std::uint32_t{1} << n;
  IsolatedReport report{rule.code().value(), n, fixed_points_parallel(rule, n), {}, false};
  report.degenerate = report.fixed_points.size() == universe;
  if (report.degenerate || report.fixed_points.empty()) return report;

  ConfigSet fixed(universe);
  for (const auto& fp : report.fixed_points) fixed.set(fp.bits());

  const std::uint64_t total = (std::uint64_t{1} << n) - 2;
  const int workers = resolve_workers(opts.workers);
  std::vector<ConfigSet> reached(static_cast<std::size_t>(workers));
  run_partitioned(total, workers, [&](int w, std::uint64_t begin, std::uint64_t end) {
    CellStepper stepper(rule, n);
    std::vector<std::uint32_t> next;
    ConfigSet local(universe);
    for (std::uint64_t s = begin; s < end; ++s) {
      SequentialMode mode = representative_mode(ModeSignature(n, static_cast<std::uint32_t>(s) + 1));
      sequential_step_map(stepper, mode.order(), next);
      for (std::uint32_t x = 0; x < universe; ++x) {
        std::uint32_t v = next[x];
        if (v != x && fixed.test(v)) local.set(v);
      }
    }
    reached[static_cast<std::size_t>(w)] = std::move(local);
  });
  ConfigSet reachable(universe);
  for (const auto& r : reached)
    if (r.size()) reachable |= r;

  for (const auto& fp : report.fixed_points)
    if (!reachable.test(fp.bits())) report.isolated.push_back(fp);
  return report;
}

// True when every configuration containing the word (at any rotation) is
// non-convergent under every sequential mode.
inline bool word_blocker_check(const RuleTable& rule, int n, std::string_view word,
                               const SearchOptions& opts = {}) {
  detail::check_search_size(n, 9, "word blocker check");
  if (word.empty() || static_cast<int>(word.size()) > n)
    throw std::invalid_argument("word length must be in [1, n]");
  for (char c : word)
    if (c != '0' && c != '1') throw std::invalid_argument("word uses characters '0' and '1'");

  const std::uint32_t universe = std::uint32_t{1} << n;
  const int k = static_cast<int>(word.size());
  auto contains = [&](std::uint32_t x) {
    for (int r = 0; r < n; ++r) {
      bool match = true;
      for (int j = 0; j < k && match; ++j)
        match = (((x >> ((r + j) % n)) & 1u) == static_cast<unsigned>(word[static_cast<std::size_t>(j)] - '0'));
      if (match) return true;
    }
    return false;
  };

  auto sets = converged_sets_by_class(rule, n, opts);
  ConfigSet any(universe);
  for (const auto& s : sets) any |= s;
  for (std::uint32_t x = 0; x < universe; ++x)
    if (contains(x) && any.test(x)) return false;
  return true;
}

}  // namespace seqeca
