#include <catch2/catch_amalgamated.hpp>

#include "seqeca/rule.hpp"

#include <set>

using namespace seqeca;

TEST_CASE("rule code round-trips through the table for all 256 codes") {
  for (int w = 0; w < 256; ++w) {
    RuleTable t{RuleCode(w)};
    CHECK(t.code().value() == w);
  }
}

TEST_CASE("rule code range is enforced") {
  CHECK_THROWS_AS(RuleCode(-1), std::out_of_range);
  CHECK_THROWS_AS(RuleCode(256), std::out_of_range);
}

TEST_CASE("local application matches the published tables") {
  CHECK(local_apply(RuleTable(104), 1, 1, 0) == 1);
  CHECK(local_apply(RuleTable(45), 0, 0, 0) == 1);
  for (unsigned l = 0; l < 2; ++l)
    for (unsigned c = 0; c < 2; ++c)
      for (unsigned r = 0; r < 2; ++r) CHECK(local_apply(RuleTable(0), l, c, r) == 0);
}

TEST_CASE("activity is output versus center") {
  CHECK(is_active(RuleTable(90), 0b010));
  CHECK(is_active(RuleTable(104), 0b111));
  for (unsigned p = 0; p < 8; ++p) CHECK_FALSE(is_active(RuleTable(204), p));
}

TEST_CASE("reflection and conjugation are involutions and commute") {
  for (int w = 0; w < 256; ++w) {
    RuleTable t{RuleCode(w)};
    CHECK(t.reflected().reflected() == t);
    CHECK(t.conjugated().conjugated() == t);
    CHECK(t.reflected().conjugated() == t.conjugated().reflected());
  }
}

TEST_CASE("the 256 rules fall into 88 symmetry classes") {
  auto classes = all_symmetry_classes();
  CHECK(classes.size() == 88);
  std::set<int> covered;
  for (const auto& cls : classes) {
    CHECK(cls.representative() == cls.members.front());
    for (int m : cls.members) covered.insert(m);
  }
  CHECK(covered.size() == 256);
}

TEST_CASE("symmetry class is identical from every member") {
  auto cls = symmetry_class(RuleCode(110));
  CHECK(cls.members == std::vector<int>{110, 124, 137, 193});
  for (int m : cls.members) CHECK(symmetry_class(RuleCode(m)).members == cls.members);
  CHECK(symmetry_class(RuleCode(204)).members == std::vector<int>{204});
}

TEST_CASE("convergence condition fires for known rules") {
  CHECK(convergence_condition(RuleTable(90)) == ConvergenceCondition::kOne);
  CHECK_FALSE(convergence_condition(RuleTable(37)).has_value());
  CHECK(convergence_condition(RuleTable(204)) == ConvergenceCondition::kThree);
  CHECK(convergence_condition(RuleTable(36)) == ConvergenceCondition::kTwo);
}

TEST_CASE("exactly 50 of the 88 representatives satisfy a convergence condition") {
  int fired = 0;
  for (int rep : symmetry_representatives())
    if (convergence_condition(RuleTable(rep))) ++fired;
  CHECK(fired == 50);
}

TEST_CASE("walls from the published proofs are found") {
  auto walls104 = find_walls(RuleTable(104), 2);
  CHECK(std::find(walls104.begin(), walls104.end(), "00") != walls104.end());
  auto walls28 = find_walls(RuleTable(28), 2);
  CHECK(std::find(walls28.begin(), walls28.end(), "01") != walls28.end());
  auto walls108 = find_walls(RuleTable(108), 3);
  CHECK(std::find(walls108.begin(), walls108.end(), "001") != walls108.end());
  CHECK(std::find(walls108.begin(), walls108.end(), "100") != walls108.end());
}

TEST_CASE("wall length is bounded") {
  CHECK_THROWS_AS(find_walls(RuleTable(104), 0), std::invalid_argument);
  CHECK_THROWS_AS(find_walls(RuleTable(104), 5), std::invalid_argument);
}
