#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqeca {

// Neighborhood patterns are 3-bit values 4l + 2c + r built from the states of
// the left neighbor, the cell itself and the right neighbor.
inline constexpr unsigned pattern_of(unsigned l, unsigned c, unsigned r) {
  return ((l & 1u) << 2) | ((c & 1u) << 1) | (r & 1u);
}

inline constexpr unsigned pattern_center(unsigned pattern) { return (pattern >> 1) & 1u; }

// Wolfram code of an elementary rule, range [0, 255].
class RuleCode {
 public:
  explicit constexpr RuleCode(int code) : code_(code) {
    if (code < 0 || code > 255) throw std::out_of_range("rule code must be in [0, 255]");
  }
  constexpr int value() const { return code_; }
  friend constexpr bool operator==(RuleCode a, RuleCode b) = default;
  friend constexpr auto operator<=>(RuleCode a, RuleCode b) = default;

 private:
  int code_;
};

// Truth table of a local rule: bit p holds the output for neighborhood pattern p.
// The packed byte is identical to the Wolfram code, so the code<->table round
// trip is the identity by construction.
class RuleTable {
 public:
  static constexpr int kPatterns = 8;

  explicit constexpr RuleTable(RuleCode code) : bits_(static_cast<std::uint8_t>(code.value())) {}
  explicit constexpr RuleTable(int code) : RuleTable(RuleCode(code)) {}

  constexpr RuleCode code() const { return RuleCode(bits_); }
  constexpr std::uint8_t packed() const { return bits_; }

  constexpr unsigned output(unsigned pattern) const { return (bits_ >> (pattern & 7u)) & 1u; }
  constexpr unsigned apply(unsigned l, unsigned c, unsigned r) const {
    return output(pattern_of(l, c, r));
  }

  // A pattern is active when the rule flips the center cell, passive otherwise.
  constexpr bool active(unsigned pattern) const { return output(pattern) != pattern_center(pattern); }
  constexpr bool passive(unsigned pattern) const { return !active(pattern); }

  // Swap the roles of the left and right neighbors.
  constexpr RuleTable reflected() const {
    std::uint8_t out = 0;
    for (unsigned p = 0; p < 8; ++p) {
      unsigned q = ((p & 1u) << 2) | (p & 2u) | ((p >> 2) & 1u);
      out |= static_cast<std::uint8_t>(output(q) << p);
    }
    return RuleTable(out);
  }

  // Complement all states: output for p is the complement of the output for ~p.
  constexpr RuleTable conjugated() const {
    std::uint8_t out = 0;
    for (unsigned p = 0; p < 8; ++p)
      out |= static_cast<std::uint8_t>((output(7u - p) ^ 1u) << p);
    return RuleTable(out);
  }

  friend constexpr bool operator==(RuleTable a, RuleTable b) = default;

 private:
  constexpr RuleTable(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_;
};

inline constexpr unsigned local_apply(const RuleTable& rule, unsigned l, unsigned c, unsigned r) {
  return rule.apply(l, c, r);
}

inline constexpr bool is_active(const RuleTable& rule, unsigned pattern) {
  return rule.active(pattern);
}

// Conditions guaranteeing that an asynchronous update exists under which the
// rule converges to fixed points.  Each clause includes its state-complemented
// dual; clauses are checked in order and the first hit is reported.
enum class ConvergenceCondition { kOne, kTwo, kThree };

inline const char* condition_name(ConvergenceCondition c) {
  switch (c) {
    case ConvergenceCondition::kOne: return "i";
    case ConvergenceCondition::kTwo: return "ii";
    case ConvergenceCondition::kThree: return "iii";
  }
  return "?";
}

inline std::optional<ConvergenceCondition> convergence_condition(const RuleTable& rule) {
  auto P = [&](unsigned p) { return rule.passive(p); };
  auto A = [&](unsigned p) { return rule.active(p); };
  if ((P(0b000) && A(0b010)) || (P(0b111) && A(0b101))) return ConvergenceCondition::kOne;
  if ((P(0b000) && P(0b001) && P(0b010) && P(0b100) && (A(0b011) || A(0b110))) ||
      (P(0b011) && P(0b101) && P(0b110) && P(0b111) && (A(0b001) || A(0b100))))
    return ConvergenceCondition::kTwo;
  if ((P(0b001) && P(0b010) && P(0b100) && P(0b101)) ||
      (P(0b010) && P(0b011) && P(0b101) && P(0b110)))
    return ConvergenceCondition::kThree;
  return std::nullopt;
}

// Rules closed under reflection and conjugation; the 256 codes fall into 88
// such classes.
struct SymmetryClass {
  std::vector<int> members;  // sorted, unique
  int representative() const { return members.front(); }
};

inline SymmetryClass symmetry_class(RuleCode code) {
  RuleTable t(code);
  std::array<int, 4> orbit = {
      t.code().value(),
      t.reflected().code().value(),
      t.conjugated().code().value(),
      t.reflected().conjugated().code().value(),
  };
  SymmetryClass cls;
  for (int w : orbit) {
    bool seen = false;
    for (int m : cls.members) seen = seen || m == w;
    if (!seen) cls.members.push_back(w);
  }
  std::sort(cls.members.begin(), cls.members.end());
  return cls;
}

inline std::vector<SymmetryClass> all_symmetry_classes() {
  std::vector<SymmetryClass> out;
  std::array<bool, 256> done{};
  for (int w = 0; w < 256; ++w) {
    if (done[w]) continue;
    SymmetryClass cls = symmetry_class(RuleCode(w));
    for (int m : cls.members) done[m] = true;
    out.push_back(std::move(cls));
  }
  return out;
}

inline std::vector<int> symmetry_representatives() {
  std::vector<int> reps;
  for (const auto& cls : all_symmetry_classes()) reps.push_back(cls.representative());
  return reps;
}

// A word u is a wall when every cell of u keeps its state under the rule no
// matter which states border it, hence no matter in which order cells update.
inline bool is_wall(const RuleTable& rule, const std::string& word) {
  const int k = static_cast<int>(word.size());
  for (unsigned a = 0; a < 2; ++a) {
    for (unsigned b = 0; b < 2; ++b) {
      for (int j = 0; j < k; ++j) {
        unsigned l = j == 0 ? a : static_cast<unsigned>(word[j - 1] - '0');
        unsigned c = static_cast<unsigned>(word[j] - '0');
        unsigned r = j == k - 1 ? b : static_cast<unsigned>(word[j + 1] - '0');
        if (rule.apply(l, c, r) != c) return false;
      }
    }
  }
  return true;
}

inline std::vector<std::string> find_walls(const RuleTable& rule, int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("wall length must be in [1, 4]");
  std::vector<std::string> walls;
  for (unsigned bits = 0; bits < (1u << k); ++bits) {
    std::string word(static_cast<std::size_t>(k), '0');
    for (int j = 0; j < k; ++j)
      if ((bits >> j) & 1u) word[static_cast<std::size_t>(j)] = '1';
    if (is_wall(rule, word)) walls.push_back(std::move(word));
  }
  return walls;
}

}  // namespace seqeca
