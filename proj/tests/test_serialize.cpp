#include <catch2/catch_amalgamated.hpp>

#include "seqeca/serialize.hpp"

using namespace seqeca;

TEST_CASE("orbit records serialize with limit set strings") {
  DynamicalSystem sys(RuleTable(2), SequentialMode::sweep_down(5));
  auto rec = orbit(sys, Configuration::from_string("10000"));
  auto j = to_json(rec);
  CHECK(j["transient"] == 2);
  CHECK(j["cycle"] == 1);
  CHECK(j["limit_set"] == json::array({"00000"}));
}

TEST_CASE("configuration strings round-trip through the parser") {
  for (std::uint32_t bits = 0; bits < 64; ++bits) {
    Configuration x(6, bits);
    CHECK(Configuration::from_string(x.to_string()) == x);
  }
}

TEST_CASE("mode strings round-trip through the parser") {
  for (const auto& mode : representative_modes(5))
    CHECK(SequentialMode::parse(mode.to_string()) == mode);
  auto periodic = UpdateMode::parse(6, "{0,1};{2};{3,4,5}");
  CHECK(UpdateMode::parse(6, periodic.to_string()) == periodic);
}

TEST_CASE("verdict serialization is deterministic") {
  auto v = is_universal(RuleTable(104), 5, SequentialMode::sweep_down(5));
  auto a = to_json(v).dump();
  auto b = to_json(is_universal(RuleTable(104), 5, SequentialMode::sweep_down(5))).dump();
  CHECK(a == b);
  CHECK(a.find("\"universal\":false") != std::string::npos);
}

TEST_CASE("covering serialization uses null for absent coverings") {
  auto r = find_covering(RuleTable(90), 5, CoverStrategy::kGreedy);
  auto j = to_json(r);
  CHECK(j["covering"].is_null());
  CHECK_FALSE(j["witnesses"].empty());
}

TEST_CASE("classification serialization carries evidence and discrepancy flags") {
  auto rep = classify_rule(RuleTable(90), {4, 5});
  auto j = to_json(rep);
  CHECK(j["rule"] == 90);
  CHECK(j["category"] == "no-covering");
  CHECK(j["evidence"].size() == 2);
}

TEST_CASE("diagrams render with step markers") {
  DynamicalSystem sys(RuleTable(204), SequentialMode({0, 1, 2, 3}));
  auto d = trace_orbit(sys, Configuration::from_string("0110"), TraceGranularity::kSteps);
  REQUIRE(d.rows.size() == 2);
  CHECK(d.rows[0].config.to_string() == "0110");
  CHECK(d.rows[1].config.to_string() == "0110");
  auto text = render_text(d);
  CHECK(text == "0110 |0\n0110 |1\n");

  auto sub = trace_orbit(sys, Configuration::from_string("0110"), TraceGranularity::kSubsteps);
  CHECK(sub.rows.size() == 5);  // start + 3 substeps + closing step row
  int boundaries = 0;
  for (const auto& row : sub.rows) boundaries += row.step_boundary ? 1 : 0;
  CHECK(boundaries == 2);
}

TEST_CASE("substep rows differ only at the updated block") {
  DynamicalSystem sys(RuleTable(30), SequentialMode({2, 0, 3, 1}));
  auto d = trace_orbit(sys, Configuration::from_string("1011"), TraceGranularity::kSubsteps);
  for (std::size_t k = 1; k < d.rows.size(); ++k) {
    if (d.rows[k].step_boundary) continue;
    std::uint32_t diff = d.rows[k].config.bits() ^ d.rows[k - 1].config.bits();
    int block_index = d.rows[k].substep_index - 1;
    std::uint32_t block = sys.mode.blocks()[static_cast<std::size_t>(block_index)];
    CHECK((diff & ~block) == 0);
  }
}
