#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seqeca/search.hpp"

namespace seqeca {

enum class Category {
  kAllModesUniversal,
  kAllSequentialUniversal,
  kExistsUniversalSequential,
  kExistsCovering,
  kNoCovering,
  kRestrictedUniversalE,
  kRestrictedUniversalT,
  kRestrictedCoveringE,
  kRestrictedCoveringT,
  kNoFixedPoints,
};

inline const char* category_name(Category c) {
  switch (c) {
    case Category::kAllModesUniversal: return "all-modes-universal";
    case Category::kAllSequentialUniversal: return "all-sequential-universal";
    case Category::kExistsUniversalSequential: return "exists-universal-sequential";
    case Category::kExistsCovering: return "exists-covering";
    case Category::kNoCovering: return "no-covering";
    case Category::kRestrictedUniversalE: return "restricted-universal-E";
    case Category::kRestrictedUniversalT: return "restricted-universal-T";
    case Category::kRestrictedCoveringE: return "restricted-covering-E";
    case Category::kRestrictedCoveringT: return "restricted-covering-T";
    case Category::kNoFixedPoints: return "no-fixed-points";
  }
  return "?";
}

// Wolfram complexity class, used purely as a reporting label.
inline int wolfram_class(int rule) {
  static const std::vector<int> one = {0, 8, 32, 40, 128, 136, 160, 168};
  static const std::vector<int> three = {18, 22, 30, 45, 60, 90, 105, 122, 126, 146, 150};
  static const std::vector<int> four = {54, 106, 110};
  auto in = [&](const std::vector<int>& v) { return std::find(v.begin(), v.end(), rule) != v.end(); };
  if (in(one)) return 1;
  if (in(three)) return 3;
  if (in(four)) return 4;
  return 2;
}

// Published verdict for each of the 88 representatives; the classifier reports
// any empirical disagreement instead of silently overriding it.
inline std::optional<Category> published_category(int rule) {
  static const std::map<int, Category> table = [] {
    std::map<int, Category> m;
    for (int r : {0, 8, 128, 136, 4, 12, 36, 44, 72, 76, 78, 132, 140, 164, 200, 204})
      m[r] = Category::kAllModesUniversal;
    for (int r : {32, 40, 160, 168, 5, 13, 56, 77, 94, 152, 172, 184, 232})
      m[r] = Category::kAllSequentialUniversal;
    for (int r : {2, 10, 24, 26, 34, 42, 58, 130, 138, 154, 162, 170})
      m[r] = Category::kExistsUniversalSequential;
    for (int r : {50, 74, 104, 178, 18, 122, 146}) m[r] = Category::kExistsCovering;
    for (int r : {90, 106}) m[r] = Category::kNoCovering;
    for (int r : {7, 15}) m[r] = Category::kRestrictedUniversalE;
    m[45] = Category::kRestrictedUniversalT;
    for (int r : {23, 30}) m[r] = Category::kRestrictedCoveringE;
    for (int r : {6, 14, 28, 29, 37, 38, 46, 62, 73, 108, 134, 142, 156, 22, 60, 105, 126, 150, 54, 110})
      m[r] = Category::kNoCovering;
    for (int r : {1, 3, 9, 11, 19, 25, 27, 33, 35, 41, 43, 51, 57})
      m[r] = Category::kNoFixedPoints;
    return m;
  }();
  auto it = table.find(rule);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

inline bool published_as_conjecture(int rule) { return rule == 37 || rule == 45; }

// Fixed audit set of periodic (block) update modes used for the bounded
// "every update mode converges" check: the synchronous mode, two-block
// partitions, and one mode updating a cell twice per period.
inline std::vector<UpdateMode> audit_update_modes(int n) {
  const std::uint32_t full = Configuration::mask_for(n);
  std::uint32_t evens = 0;
  for (int i = 0; i < n; i += 2) evens |= 1u << i;
  const std::uint32_t odds = full ^ evens;
  const std::uint32_t lo = (1u << (n / 2)) - 1;
  const std::uint32_t hi = full ^ lo;
  std::vector<UpdateMode> modes;
  modes.push_back(UpdateMode::parallel(n));
  modes.push_back(UpdateMode(n, {evens, odds}));
  modes.push_back(UpdateMode(n, {odds, evens}));
  modes.push_back(UpdateMode(n, {lo, hi}));
  modes.push_back(UpdateMode(n, {hi, lo}));
  modes.push_back(UpdateMode(n, {1u, full}));
  std::vector<std::uint32_t> pairs;
  for (int i = 0; i + 1 < n; i += 2) pairs.push_back(3u << i);
  if (n % 2) pairs.push_back(1u << (n - 1));
  modes.push_back(UpdateMode(n, std::move(pairs)));
  return modes;
}

struct SizeEvidence {
  int n = 0;
  int fixed_point_count = 0;
  bool fixed_points_exist = false;
  bool reachable_fixed_point = false;  // some fixed point has another configuration leading to it
  bool degenerate = false;             // every configuration is a fixed point
  bool all_sequential_universal = false;
  bool exists_universal_sequential = false;
  bool covering_exists = false;
  bool audit_universal = false;  // parallel plus block audit modes all converge everywhere
  std::uint32_t non_convergent_count = 0;
};

struct ClassificationReport {
  int rule_code = 0;
  Category category = Category::kNoFixedPoints;
  std::optional<Category> expected;
  bool conjecture = false;
  bool discrepancy = false;
  std::vector<SizeEvidence> evidence;
};

namespace detail {

inline SizeEvidence gather_size_evidence(const RuleTable& rule, int n, const SearchOptions& opts) {
  SizeEvidence ev;
  ev.n = n;
  const std::uint32_t universe = std::uint32_t{1} << n;
  auto fps = fixed_points_parallel(rule, n);
  ev.fixed_point_count = static_cast<int>(fps.size());
  ev.fixed_points_exist = !fps.empty();
  ev.degenerate = fps.size() == universe;

  ConfigSet fixed(universe);
  for (const auto& fp : fps) fixed.set(fp.bits());

  const std::uint64_t total = (std::uint64_t{1} << n) - 2;
  const int workers = resolve_workers(opts.workers);
  struct Partial {
    ConfigSet any;
    ConfigSet reached;
    bool all_universal = true;
    bool some_universal = false;
  };
  std::vector<Partial> partials(static_cast<std::size_t>(workers));
  run_partitioned(total, workers, [&](int w, std::uint64_t begin, std::uint64_t end) {
    Partial part{ConfigSet(universe), ConfigSet(universe), true, false};
    CellStepper stepper(rule, n);
    std::vector<std::uint32_t> next;
    seqeca::detail::ConvergenceBuffers buf;
    ConfigSet conv(universe);
    for (std::uint64_t s = begin; s < end; ++s) {
      SequentialMode mode = representative_mode(ModeSignature(n, static_cast<std::uint32_t>(s) + 1));
      sequential_step_map(stepper, mode.order(), next);
      seqeca::detail::converged_set(next, buf, conv);
      part.any |= conv;
      bool universal = conv.all();
      part.all_universal = part.all_universal && universal;
      part.some_universal = part.some_universal || universal;
      for (std::uint32_t x = 0; x < universe; ++x) {
        std::uint32_t v = next[x];
        if (v != x && fixed.test(v)) part.reached.set(v);
      }
    }
    partials[static_cast<std::size_t>(w)] = std::move(part);
  });

  ConfigSet any(universe);
  ConfigSet reached(universe);
  ev.all_sequential_universal = true;
  for (const auto& part : partials) {
    if (!part.any.size()) continue;  // worker had no share
    any |= part.any;
    reached |= part.reached;
    ev.all_sequential_universal = ev.all_sequential_universal && part.all_universal;
    ev.exists_universal_sequential = ev.exists_universal_sequential || part.some_universal;
  }
  ev.covering_exists = any.all();
  ev.non_convergent_count = universe - any.count();
  for (const auto& fp : fps)
    if (reached.test(fp.bits())) ev.reachable_fixed_point = true;
  if (ev.degenerate) ev.reachable_fixed_point = true;

  ev.audit_universal = true;
  seqeca::detail::ConvergenceBuffers buf;
  for (const auto& mode : audit_update_modes(n)) {
    auto next = step_map(DynamicalSystem(rule, mode));
    if (!seqeca::detail::all_converge(next, buf)) {
      ev.audit_universal = false;
      break;
    }
  }
  return ev;
}

// 1 = no covering, 2 = covering, 3 = some universal mode, 4 = every sequential
// mode universal, 5 = audit modes universal as well.
inline int verdict_level(const SizeEvidence& ev) {
  if (ev.all_sequential_universal && ev.audit_universal) return 5;
  if (ev.all_sequential_universal) return 4;
  if (ev.exists_universal_sequential) return 3;
  if (ev.covering_exists) return 2;
  return 1;
}

inline Category unrestricted_category(int level) {
  switch (level) {
    case 5: return Category::kAllModesUniversal;
    case 4: return Category::kAllSequentialUniversal;
    case 3: return Category::kExistsUniversalSequential;
    case 2: return Category::kExistsCovering;
    default: return Category::kNoCovering;
  }
}

}  // namespace detail

inline ClassificationReport classify_rule(const RuleTable& rule, const std::vector<int>& sizes,
                                          const SearchOptions& opts = {}) {
  if (sizes.empty()) throw std::invalid_argument("classification needs at least one ring size");
  ClassificationReport report;
  report.rule_code = rule.code().value();
  report.expected = published_category(report.rule_code);
  report.conjecture = published_as_conjecture(report.rule_code);

  for (int n : sizes) report.evidence.push_back(detail::gather_size_evidence(rule, n, opts));
  std::sort(report.evidence.begin(), report.evidence.end(),
            [](const SizeEvidence& a, const SizeEvidence& b) { return a.n < b.n; });

  std::vector<int> fp_sizes, even_sizes, mult3_sizes;
  for (const auto& ev : report.evidence) {
    if (ev.fixed_points_exist) fp_sizes.push_back(ev.n);
    if (ev.n % 2 == 0) even_sizes.push_back(ev.n);
    if (ev.n % 3 == 0) mult3_sizes.push_back(ev.n);
  }

  if (fp_sizes.empty()) {
    report.category = Category::kNoFixedPoints;
  } else if (fp_sizes.size() == report.evidence.size()) {
    int min_level = 5;
    for (const auto& ev : report.evidence) min_level = std::min(min_level, detail::verdict_level(ev));
    if (min_level >= 2) {
      report.category = detail::unrestricted_category(min_level);
    } else {
      // convergence fails somewhere: promote to an even-size restriction only
      // when the failing odd sizes have no reachable fixed point at all
      std::vector<int> good;
      int even_min = 5;
      bool odd_hopeless = true;
      for (const auto& ev : report.evidence) {
        int level = detail::verdict_level(ev);
        if (level >= 2) good.push_back(ev.n);
        if (ev.n % 2 == 0)
          even_min = std::min(even_min, level);
        else
          odd_hopeless = odd_hopeless && !ev.reachable_fixed_point;
      }
      if (!even_sizes.empty() && good == even_sizes && odd_hopeless)
        report.category = even_min >= 3 ? Category::kRestrictedUniversalE
                                        : Category::kRestrictedCoveringE;
      else
        report.category = Category::kNoCovering;
    }
  } else {
    // fixed points only on a structured subset of sizes
    int min_level = 5;
    for (const auto& ev : report.evidence)
      if (ev.fixed_points_exist) min_level = std::min(min_level, detail::verdict_level(ev));
    if (fp_sizes == even_sizes && !even_sizes.empty() && min_level >= 2) {
      report.category = min_level >= 3 ? Category::kRestrictedUniversalE
                                       : Category::kRestrictedCoveringE;
    } else if (fp_sizes == mult3_sizes && !mult3_sizes.empty() && min_level >= 2) {
      report.category = min_level >= 3 ? Category::kRestrictedUniversalT
                                       : Category::kRestrictedCoveringT;
    } else {
      report.category = Category::kNoCovering;
    }
  }

  report.discrepancy = report.expected && report.category != *report.expected;
  return report;
}

inline std::vector<ClassificationReport> classify_representatives(const std::vector<int>& sizes,
                                                                  const SearchOptions& opts = {}) {
  std::vector<ClassificationReport> out;
  for (int rule : symmetry_representatives())
    out.push_back(classify_rule(RuleTable(rule), sizes, opts));
  return out;
}

// CSV mirroring the published layout: one row per category, Wolfram class
// columns I-IV, a total column.
inline std::string classification_csv(const std::vector<ClassificationReport>& reports) {
  static const Category order[] = {
      Category::kAllModesUniversal,    Category::kAllSequentialUniversal,
      Category::kExistsUniversalSequential, Category::kExistsCovering,
      Category::kNoCovering,           Category::kRestrictedUniversalE,
      Category::kRestrictedUniversalT, Category::kRestrictedCoveringE,
      Category::kRestrictedCoveringT,  Category::kNoFixedPoints,
  };
  std::string csv = "category,I,II,III,IV,total\n";
  for (Category cat : order) {
    std::vector<std::vector<int>> cols(4);
    int total = 0;
    for (const auto& r : reports) {
      if (r.category != cat) continue;
      cols[static_cast<std::size_t>(wolfram_class(r.rule_code) - 1)].push_back(r.rule_code);
      ++total;
    }
    if (total == 0) continue;
    csv += category_name(cat);
    for (auto& col : cols) {
      csv += ',';
      std::sort(col.begin(), col.end());
      for (std::size_t i = 0; i < col.size(); ++i) {
        if (i) csv += ' ';
        csv += std::to_string(col[i]);
      }
    }
    csv += ',' + std::to_string(total) + '\n';
  }
  return csv;
}

}  // namespace seqeca
