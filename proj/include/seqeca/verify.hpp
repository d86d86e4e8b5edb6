#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "seqeca/classify.hpp"
#include "seqeca/search.hpp"

namespace seqeca {

struct VerifyOptions {
  std::optional<std::vector<int>> sizes;  // restricts an entry's default size set
  int workers = 0;
};

struct Certificate {
  std::string id;
  std::string title;
  bool conjecture = false;
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& line) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
  }
  void note(const std::string& line) { details.push_back("note " + line); }
};

struct RegistryEntry {
  std::string id;
  std::string title;
  bool conjecture;
  std::function<Certificate(const VerifyOptions&)> run;
};

namespace detail {

inline std::vector<int> pick_sizes(const std::vector<int>& defaults, const VerifyOptions& opts) {
  if (!opts.sizes) return defaults;
  std::vector<int> out;
  for (int n : *opts.sizes)
    if (std::find(defaults.begin(), defaults.end(), n) != defaults.end()) out.push_back(n);
  return out.empty() ? defaults : out;
}

inline std::string repeat_word(const std::string& word, int n) {
  std::string s;
  while (static_cast<int>(s.size()) < n) s += word;
  s.resize(static_cast<std::size_t>(n));
  return s;
}

inline bool universal_under(const RuleTable& rule, int n, const SequentialMode& mode) {
  return is_universal(rule, n, mode).universal;
}

inline ConfigSet convergent_anywhere(const RuleTable& rule, int n, const SearchOptions& s) {
  auto sets = converged_sets_by_class(rule, n, s);
  ConfigSet any(std::uint32_t{1} << n);
  for (const auto& cs : sets) any |= cs;
  return any;
}

inline bool config_set_equals(const std::vector<Configuration>& got,
                              const std::vector<std::string>& want, int n) {
  if (got.size() != want.size()) return false;
  std::vector<std::uint32_t> a, b;
  for (const auto& c : got) a.push_back(c.bits());
  for (const auto& w : want) b.push_back(Configuration::from_string(w).bits());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  (void)n;
  return a == b;
}

}  // namespace detail

// Regression registry over the named convergence claims.  Each entry binds
// rules, ring sizes and expected outcomes; where bounded checking contradicts
// a published claim the deviation itself is asserted, so any behavior change
// surfaces.  Conjecture entries report supporting evidence, never proof.
inline const std::vector<RegistryEntry>& theorem_registry() {
  static const std::vector<RegistryEntry> registry = [] {
    std::vector<RegistryEntry> reg;

    reg.push_back({"THM2",
                   "right-to-left sweep is universal for rules 2,10,26,34,42,58,130,138,154,162,170",
                   false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"THM2", "", false, true, {}};
                     for (int n : detail::pick_sizes({5, 6, 7, 8, 9, 10}, o))
                       for (int rule : {2, 10, 26, 34, 42, 58, 130, 138, 154, 162, 170})
                         cert.check(detail::universal_under(RuleTable(rule), n, SequentialMode::sweep_down(n)),
                                    "rule " + std::to_string(rule) + " n=" + std::to_string(n) +
                                        " sweep-down universal");
                     return cert;
                   }});

    reg.push_back({"THM-R24", "left-to-right sweep is universal for rule 24", false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"THM-R24", "", false, true, {}};
                     for (int n : detail::pick_sizes({5, 6, 7, 8, 9, 10}, o))
                       cert.check(detail::universal_under(RuleTable(24), n, SequentialMode::sweep_up(n)),
                                  "rule 24 n=" + std::to_string(n) + " sweep-up universal");
                     return cert;
                   }});

    reg.push_back({"THM3", "rule 104: sweep-down universal on even rings, cycles on odd rings", false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"THM3", "", false, true, {}};
                     for (int n : detail::pick_sizes({5, 6, 7, 8, 9, 10}, o)) {
                       auto mode = SequentialMode::sweep_down(n);
                       auto verdict = is_universal(RuleTable(104), n, mode);
                       if (n % 2 == 0) {
                         cert.check(verdict.universal, "n=" + std::to_string(n) + " universal");
                       } else {
                         cert.check(!verdict.universal, "n=" + std::to_string(n) + " not universal");
                         auto probe = Configuration::from_string("01" + std::string(static_cast<std::size_t>(n - 2), '1'));
                         auto rec = orbit(DynamicalSystem(RuleTable(104), mode), probe);
                         cert.check(rec.cycle >= 2,
                                    "n=" + std::to_string(n) + " (01)1^{n-2} cycles (length " +
                                        std::to_string(rec.cycle) + ")");
                       }
                     }
                     cert.check(is_wall(RuleTable(104), "00"), "00 is a wall");
                     return cert;
                   }});

    reg.push_back({"THM4", "rule 106: sweep-down universal on even rings, no covering on odd rings", false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"THM4", "", false, true, {}};
                     SearchOptions s{o.workers, nullptr};
                     for (int n : detail::pick_sizes({5, 6, 7, 8, 9}, o)) {
                       if (n % 2 == 0) {
                         cert.check(detail::universal_under(RuleTable(106), n, SequentialMode::sweep_down(n)),
                                    "n=" + std::to_string(n) + " universal");
                       } else {
                         auto bad = non_convergent_configs(RuleTable(106), n, s);
                         cert.check(!bad.empty(), "n=" + std::to_string(n) + " has " +
                                                      std::to_string(bad.size()) +
                                                      " configurations convergent under no mode");
                       }
                     }
                     return cert;
                   }});

    reg.push_back({"THM5",
                   "rule 90: a pair of adjacent 1s never converges (odd rings and n>=9 off powers of two;"
                   " on rings of size 6 and 8 such configurations do converge)",
                   false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"THM5", "", false, true, {}};
                     SearchOptions s{o.workers, nullptr};
                     for (int n : detail::pick_sizes({5, 6, 7, 8, 9}, o)) {
                       ConfigSet any = detail::convergent_anywhere(RuleTable(90), n, s);
                       bool all_pairs_blocked = true;
                       for (int k = 0; k < n; ++k) {
                         std::uint32_t pair = (1u << k) | (1u << ((k + 1) % n));
                         all_pairs_blocked = all_pairs_blocked && !any.test(pair);
                       }
                       if (n == 6 || n == 8)
                         cert.check(!all_pairs_blocked,
                                    "n=" + std::to_string(n) + " deviation: adjacent pairs do converge here");
                       else
                         cert.check(all_pairs_blocked,
                                    "n=" + std::to_string(n) + " adjacent pairs converge under no mode");
                     }
                     return cert;
                   }});

    reg.push_back({"THM6",
                   "coverings exist for rules 18,50,146,178 (and 104 on odd rings); rules 74 and 122"
                   " deviate at small sizes",
                   false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"THM6", "", false, true, {}};
                     SearchOptions s{o.workers, nullptr};
                     for (int n : detail::pick_sizes({5, 6, 7, 8}, o)) {
                       for (int rule : {18, 50, 146, 178})
                         cert.check(find_covering(RuleTable(rule), n, CoverStrategy::kGreedy, s).found(),
                                    "rule " + std::to_string(rule) + " n=" + std::to_string(n) + " covering");
                       if (n % 2 == 1)
                         cert.check(find_covering(RuleTable(104), n, CoverStrategy::kGreedy, s).found(),
                                    "rule 104 n=" + std::to_string(n) + " covering");
                       bool c74 = find_covering(RuleTable(74), n, CoverStrategy::kGreedy, s).found();
                       cert.check(c74 == (n == 6), "rule 74 n=" + std::to_string(n) +
                                                       (n == 6 ? " covering" : " deviation: no covering"));
                       bool c122 = find_covering(RuleTable(122), n, CoverStrategy::kGreedy, s).found();
                       cert.check(!c122, "rule 122 n=" + std::to_string(n) + " deviation: no covering");
                     }
                     return cert;
                   }});

    reg.push_back({"THM7",
                   "rule 45 on rings of size 3k: staggered sweep sends the all-zero configuration to"
                   " (100)^k and composing two sequential modes converges every configuration",
                   false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"THM7", "", false, true, {}};
                     for (int n : detail::pick_sizes({6, 9}, o)) {
                       std::vector<int> order;
                       for (int phase = 0; phase < 3; ++phase)
                         for (int c = phase; c < n; c += 3) order.push_back(c);
                       DynamicalSystem staggered(RuleTable(45), SequentialMode(order));
                       auto image = step(staggered, Configuration::zeros(n));
                       cert.check(image.to_string() == detail::repeat_word("100", n),
                                  "n=" + std::to_string(n) + " staggered sweep: 0^n -> " + image.to_string());

                       // pairwise temporal compositions of class representatives
                       const std::uint32_t universe = std::uint32_t{1} << n;
                       std::vector<std::vector<std::uint32_t>> maps;
                       for (std::uint32_t sig = 1; sig < universe - 1; ++sig)
                         maps.push_back(step_map(RuleTable(45), representative_mode(ModeSignature(n, sig))));
                       ConfigSet genuine(universe);
                       for (const auto& fp : fixed_points_parallel(RuleTable(45), n)) genuine.set(fp.bits());
                       ConfigSet covered(universe);
                       std::vector<std::uint32_t> comp(universe);
                       seqeca::detail::ConvergenceBuffers buf;
                       ConfigSet conv(universe);
                       for (const auto& first : maps) {
                         for (const auto& second : maps) {
                           for (std::uint32_t x = 0; x < universe; ++x) comp[x] = second[first[x]];
                           seqeca::detail::converged_set(comp, buf, conv);
                           for (std::uint32_t x = 0; x < universe; ++x) {
                             if (conv.test(x) && !covered.test(x)) {
                               // require the reached rest point to be a genuine fixed point
                               std::uint32_t y = x;
                               for (int t = 0; t <= (1 << n); ++t) {
                                 std::uint32_t z = comp[y];
                                 if (z == y) break;
                                 y = z;
                               }
                               if (genuine.test(y)) covered.set(x);
                             }
                           }
                           if (covered.all()) break;
                         }
                         if (covered.all()) break;
                       }
                       cert.check(covered.all(),
                                  "n=" + std::to_string(n) +
                                      " every configuration converges under some two-mode composition");
                     }
                     return cert;
                   }});

    auto isolated_entry = [](std::string id, std::vector<int> rules, std::string title) {
      return RegistryEntry{id, title, false,
                           [rules, id](const VerifyOptions& o) {
                             Certificate cert{id, "", false, true, {}};
                             SearchOptions s{o.workers, nullptr};
                             for (int n : detail::pick_sizes({4, 5, 6, 7}, o)) {
                               for (int rule : rules) {
                                 auto rep = isolated_fixed_points(RuleTable(rule), n, s);
                                 bool ok = rep.fixed_points.size() == 1 &&
                                           rep.fixed_points[0].bits() == 0 && rep.isolated.size() == 1;
                                 cert.check(ok, "rule " + std::to_string(rule) + " n=" + std::to_string(n) +
                                                    " only fixed point 0^n, isolated");
                               }
                             }
                             return cert;
                           }};
    };
    reg.push_back(isolated_entry("THM8", {38, 46, 54, 60, 62},
                                 "rules 38,46,54,60,62: 0^n is the only fixed point and is isolated"));
    reg.push_back(isolated_entry("THM9", {110, 126},
                                 "rules 110,126: 0^n is the only fixed point and is isolated"));

    reg.push_back({"THM10", "rules 134,142,150,156: all fixed points are isolated (parity-dependent sets)",
                   false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"THM10", "", false, true, {}};
                     SearchOptions s{o.workers, nullptr};
                     for (int n : detail::pick_sizes({4, 5, 6, 7}, o)) {
                       std::vector<std::string> expect = {std::string(static_cast<std::size_t>(n), '0'),
                                                          std::string(static_cast<std::size_t>(n), '1')};
                       if (n % 2 == 0) {
                         expect.push_back(detail::repeat_word("01", n));
                         expect.push_back(detail::repeat_word("10", n));
                       }
                       for (int rule : {134, 142, 150, 156}) {
                         auto rep = isolated_fixed_points(RuleTable(rule), n, s);
                         cert.check(detail::config_set_equals(rep.isolated, expect, n) &&
                                        rep.isolated.size() == rep.fixed_points.size(),
                                    "rule " + std::to_string(rule) + " n=" + std::to_string(n) +
                                        " isolated set matches");
                       }
                     }
                     return cert;
                   }});

    reg.push_back({"THM11", "rule 108: 001 and 100 are walls; the word 0011100 blocks convergence", false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"THM11", "", false, true, {}};
                     SearchOptions s{o.workers, nullptr};
                     auto walls = find_walls(RuleTable(108), 3);
                     auto has = [&](const std::string& w) {
                       return std::find(walls.begin(), walls.end(), w) != walls.end();
                     };
                     cert.check(has("001") && has("100"), "walls 001 and 100 present");
                     for (int n : detail::pick_sizes({7, 8}, o))
                       cert.check(word_blocker_check(RuleTable(108), n, "0011100", s),
                                  "n=" + std::to_string(n) + " word 0011100 blocks convergence");
                     return cert;
                   }});

    reg.push_back({"THM12", "rule 105: fixed points exist only on rings of size 4k and are isolated", false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"THM12", "", false, true, {}};
                     SearchOptions s{o.workers, nullptr};
                     for (int n : detail::pick_sizes({4, 5, 6, 7, 8, 9, 10, 11, 12}, o)) {
                       auto rep = fixed_point_existence(RuleTable(105), n);
                       cert.check(rep.exists == (n % 4 == 0),
                                  "n=" + std::to_string(n) + " existence iff size is a multiple of 4");
                       if (n % 4 == 0 && n <= 8) {
                         std::vector<std::string> expect = {
                             detail::repeat_word("0011", n), detail::repeat_word("0110", n),
                             detail::repeat_word("1100", n), detail::repeat_word("1001", n)};
                         auto iso = isolated_fixed_points(RuleTable(105), n, s);
                         cert.check(detail::config_set_equals(iso.isolated, expect, n),
                                    "n=" + std::to_string(n) + " the four staggered pair words, isolated");
                       }
                     }
                     return cert;
                   }});

    reg.push_back({"THM13", "rules 28,29: 01 is a wall; the word 01001 blocks convergence", false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"THM13", "", false, true, {}};
                     SearchOptions s{o.workers, nullptr};
                     for (int rule : {28, 29}) {
                       auto walls = find_walls(RuleTable(rule), 2);
                       cert.check(std::find(walls.begin(), walls.end(), "01") != walls.end(),
                                  "rule " + std::to_string(rule) + ": 01 is a wall");
                       for (int n : detail::pick_sizes({7, 8}, o))
                         cert.check(word_blocker_check(RuleTable(rule), n, "01001", s),
                                    "rule " + std::to_string(rule) + " n=" + std::to_string(n) +
                                        " word 01001 blocks convergence");
                     }
                     return cert;
                   }});

    reg.push_back({"THM-73", "rule 73: configurations containing an isolated 1 never converge", false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"THM-73", "", false, true, {}};
                     SearchOptions s{o.workers, nullptr};
                     for (int n : detail::pick_sizes({5, 6, 7}, o)) {
                       ConfigSet any = detail::convergent_anywhere(RuleTable(73), n, s);
                       bool ok = true;
                       for (std::uint32_t x = 0; x < (std::uint32_t{1} << n) && ok; ++x) {
                         bool isolated_one = false;
                         for (int i = 0; i < n && !isolated_one; ++i)
                           isolated_one = ((x >> i) & 1u) && !((x >> ((i + 1) % n)) & 1u) &&
                                          !((x >> ((i - 1 + n) % n)) & 1u);
                         if (isolated_one) ok = !any.test(x);
                       }
                       cert.check(ok, "n=" + std::to_string(n) + " isolated-1 configurations never converge");
                     }
                     return cert;
                   }});

    reg.push_back({"THM-6-14-22",
                   "rules 6,14,22: isolated-1 configurations never converge on odd rings (on even rings"
                   " alternating words are fixed points, so the claim fails there)",
                   false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"THM-6-14-22", "", false, true, {}};
                     SearchOptions s{o.workers, nullptr};
                     for (int rule : {6, 14, 22}) {
                       for (int n : detail::pick_sizes({5, 6, 7}, o)) {
                         ConfigSet any = detail::convergent_anywhere(RuleTable(rule), n, s);
                         bool all_blocked = true;
                         std::uint32_t converging_example = 0;
                         for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x) {
                           bool isolated_one = false;
                           for (int i = 0; i < n && !isolated_one; ++i)
                             isolated_one = ((x >> i) & 1u) && !((x >> ((i + 1) % n)) & 1u) &&
                                            !((x >> ((i - 1 + n) % n)) & 1u);
                           if (isolated_one && any.test(x)) {
                             all_blocked = false;
                             converging_example = x;
                           }
                         }
                         std::string tag = "rule " + std::to_string(rule) + " n=" + std::to_string(n);
                         if (n % 2 == 1)
                           cert.check(all_blocked, tag + " isolated-1 configurations never converge");
                         else
                           cert.check(!all_blocked,
                                      tag + " deviation: " + Configuration(n, converging_example).to_string() +
                                          " converges");
                       }
                     }
                     return cert;
                   }});

    reg.push_back({"LEM1",
                   "rules 7,15,23 have exactly the two alternating fixed points on even rings and none on"
                   " odd rings; rule 30 adds 0^n",
                   false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"LEM1", "", false, true, {}};
                     for (int n : detail::pick_sizes({4, 5, 6, 7, 8, 9, 10, 11, 12}, o)) {
                       std::vector<std::string> alternating;
                       if (n % 2 == 0) {
                         alternating.push_back(detail::repeat_word("01", n));
                         alternating.push_back(detail::repeat_word("10", n));
                       }
                       for (int rule : {7, 15, 23})
                         cert.check(detail::config_set_equals(fixed_points_parallel(RuleTable(rule), n),
                                                              alternating, n),
                                    "rule " + std::to_string(rule) + " n=" + std::to_string(n));
                       auto with_zero = alternating;
                       with_zero.push_back(std::string(static_cast<std::size_t>(n), '0'));
                       cert.check(detail::config_set_equals(fixed_points_parallel(RuleTable(30), n),
                                                            with_zero, n),
                                  "rule 30 n=" + std::to_string(n));
                     }
                     return cert;
                   }});

    reg.push_back({"LEM4",
                   "rules 45 and 37 have exactly the three rotations of 001 as fixed points, and only on"
                   " rings of size 3k",
                   false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"LEM4", "", false, true, {}};
                     for (int n : detail::pick_sizes({4, 5, 6, 7, 8, 9, 10, 11, 12}, o)) {
                       std::vector<std::string> expect;
                       if (n % 3 == 0) {
                         expect.push_back(detail::repeat_word("001", n));
                         expect.push_back(detail::repeat_word("010", n));
                         expect.push_back(detail::repeat_word("100", n));
                       }
                       for (int rule : {45, 37})
                         cert.check(detail::config_set_equals(fixed_points_parallel(RuleTable(rule), n),
                                                              expect, n),
                                    "rule " + std::to_string(rule) + " n=" + std::to_string(n));
                     }
                     return cert;
                   }});

    reg.push_back({"THM-E-7-15", "left-to-right sweep is universal for rules 7 and 15 on even rings", false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"THM-E-7-15", "", false, true, {}};
                     for (int n : detail::pick_sizes({4, 6, 8, 10}, o))
                       for (int rule : {7, 15})
                         cert.check(detail::universal_under(RuleTable(rule), n, SequentialMode::sweep_up(n)),
                                    "rule " + std::to_string(rule) + " n=" + std::to_string(n));
                     return cert;
                   }});

    reg.push_back({"THM-E-COVER-23-30", "rules 23 and 30 admit coverings on even rings", false,
                   [](const VerifyOptions& o) {
                     Certificate cert{"THM-E-COVER-23-30", "", false, true, {}};
                     SearchOptions s{o.workers, nullptr};
                     for (int n : detail::pick_sizes({4, 6, 8}, o))
                       for (int rule : {23, 30})
                         cert.check(find_covering(RuleTable(rule), n, CoverStrategy::kGreedy, s).found(),
                                    "rule " + std::to_string(rule) + " n=" + std::to_string(n) + " covering");
                     return cert;
                   }});

    reg.push_back({"CONJ45", "evidence: left-to-right sweep converges everything for rule 45 on rings of"
                             " size 3k",
                   true,
                   [](const VerifyOptions& o) {
                     Certificate cert{"CONJ45", "", true, true, {}};
                     for (int n : detail::pick_sizes({6, 9, 12}, o))
                       cert.check(detail::universal_under(RuleTable(45), n, SequentialMode::sweep_up(n)),
                                  "n=" + std::to_string(n) + " sweep-up universal (evidence, not proof)");
                     return cert;
                   }});

    reg.push_back({"CONJ37",
                   "evidence: rule 37 has configurations convergent under no sequential mode on rings of"
                   " size 9 (on size 6 every configuration converges under some mode)",
                   true,
                   [](const VerifyOptions& o) {
                     Certificate cert{"CONJ37", "", true, true, {}};
                     SearchOptions s{o.workers, nullptr};
                     for (int n : detail::pick_sizes({6, 9}, o)) {
                       if (n == 9) {
                         ConfigSet any = detail::convergent_anywhere(RuleTable(37), 9, s);
                         cert.check(!any.test(Configuration::from_string("000010001").bits()),
                                    "n=9: 000010001 converges under no sequential mode");
                       } else {
                         ConfigSet any = detail::convergent_anywhere(RuleTable(37), 6, s);
                         cert.check(any.all() && any.test(Configuration::from_string("001000").bits()),
                                    "n=6 deviation: every configuration (001000 included) converges under"
                                    " some mode");
                       }
                     }
                     return cert;
                   }});

    for (auto& entry : reg) {
      // keep titles on the certificates themselves
      auto run = entry.run;
      std::string title = entry.title;
      bool conjecture = entry.conjecture;
      entry.run = [run, title, conjecture](const VerifyOptions& o) {
        Certificate cert = run(o);
        cert.title = title;
        cert.conjecture = conjecture;
        return cert;
      };
    }
    return reg;
  }();
  return registry;
}

struct UnknownTheoremError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Certificate verify_theorem(const std::string& id, const VerifyOptions& opts = {}) {
  for (const auto& entry : theorem_registry())
    if (entry.id == id) return entry.run(opts);
  throw UnknownTheoremError("unknown registry id: " + id);
}

inline std::vector<Certificate> verify_all(const VerifyOptions& opts = {}) {
  std::vector<Certificate> out;
  for (const auto& entry : theorem_registry()) out.push_back(entry.run(opts));
  return out;
}

}  // namespace seqeca
