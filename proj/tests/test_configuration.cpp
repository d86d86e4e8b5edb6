#include <catch2/catch_amalgamated.hpp>

#include "seqeca/configuration.hpp"
#include "support/oracles.hpp"

using namespace seqeca;

TEST_CASE("text form puts cell 0 leftmost") {
  auto x = Configuration::from_string("01101");
  CHECK(x.size() == 5);
  CHECK(x.cell(0) == 0);
  CHECK(x.cell(1) == 1);
  CHECK(x.cell(4) == 1);
  CHECK(x.to_string() == "01101");
}

TEST_CASE("indices wrap around the ring") {
  auto x = Configuration::from_string("100");
  CHECK(x.cell(-1) == 0);
  CHECK(x.cell(3) == 1);
  CHECK(x.cell(-3) == 1);
}

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(Configuration::from_string("01"), std::out_of_range);
  CHECK_THROWS_AS(Configuration::from_string("01a01"), std::invalid_argument);
  CHECK_THROWS_AS(Configuration(4, 0x10), std::invalid_argument);
  CHECK_THROWS_AS(Configuration(31, 0), std::out_of_range);
}

TEST_CASE("rotation shifts cell indices") {
  auto x = Configuration::from_string("100110");
  for (int r = -7; r <= 7; ++r)
    for (int i = 0; i < 6; ++i) CHECK(x.rotated(r).cell(i) == x.cell(i + r));
}

TEST_CASE("parallel step agrees with the per-cell oracle") {
  CHECK(parallel_step(RuleTable(2), Configuration::from_string("00100")).to_string() == "01000");
  CHECK(parallel_step(RuleTable(90), Configuration::from_string("011011")).to_string() == "011011");
  for (int n = 3; n <= 7; ++n) {
    for (int rule : {2, 30, 45, 90, 104, 110, 150, 204}) {
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        Configuration x(n, bits);
        CHECK(parallel_step(RuleTable(rule), x).to_string() ==
              oracle::parallel_step(rule, x.to_string()));
      }
    }
  }
}

TEST_CASE("identity rule fixes everything") {
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    Configuration x(4, bits);
    CHECK(parallel_step(RuleTable(204), x) == x);
  }
}

TEST_CASE("parallel step commutes with rotation") {
  for (int n = 3; n <= 7; ++n) {
    for (int rule : {30, 90, 104, 184}) {
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        Configuration x(n, bits);
        for (int r = 0; r < n; ++r) {
          CHECK(parallel_step(RuleTable(rule), x.rotated(r)) ==
                parallel_step(RuleTable(rule), x).rotated(r));
        }
      }
    }
  }
}

TEST_CASE("run decomposition matches the documented examples") {
  auto uniform = run_decomposition(Configuration::from_string("000000"));
  REQUIRE(uniform.runs().size() == 1);
  CHECK(uniform.runs()[0] == Run{0, 6});
  CHECK(uniform.start() == 0);

  auto wrapped = run_decomposition(Configuration::from_string("001100"));
  REQUIRE(wrapped.runs().size() == 2);
  CHECK(wrapped.runs()[0] == Run{0, 4});
  CHECK(wrapped.runs()[1] == Run{1, 2});
  CHECK(wrapped.start() == 4);

  auto plain = run_decomposition(Configuration::from_string("010011"));
  REQUIRE(plain.runs().size() == 4);
  CHECK(plain.runs()[0] == Run{0, 1});
  CHECK(plain.runs()[1] == Run{1, 1});
  CHECK(plain.runs()[2] == Run{0, 2});
  CHECK(plain.runs()[3] == Run{1, 2});
}

TEST_CASE("run decomposition reconstructs exactly and alternates values") {
  for (int n = 3; n <= 10; ++n) {
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      Configuration x(n, bits);
      auto runs = run_decomposition(x);
      CHECK(runs.reconstruct() == x);
      int total = 0;
      for (std::size_t k = 0; k < runs.runs().size(); ++k) {
        total += runs.runs()[k].length;
        if (k) CHECK(runs.runs()[k].value != runs.runs()[k - 1].value);
      }
      CHECK(total == n);
    }
  }
}
