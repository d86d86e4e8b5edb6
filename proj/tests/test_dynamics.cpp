#include <catch2/catch_amalgamated.hpp>

#include "seqeca/dynamics.hpp"
#include "support/oracles.hpp"

#include <algorithm>

using namespace seqeca;

TEST_CASE("substep re-evaluates exactly the block") {
  CHECK(substep(RuleTable(45), Configuration::from_string("0100"), {3}).to_string() == "0101");
  CHECK(substep(RuleTable(104), Configuration::from_string("0110"), {1}).to_string() == "0110");
  CHECK_THROWS_AS(substep(RuleTable(45), Configuration::from_string("0100"), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(substep(RuleTable(45), Configuration::from_string("0100"), {4}),
                  std::invalid_argument);
}

TEST_CASE("substep changes only cells in the block") {
  for (int rule : {30, 45, 90, 110}) {
    for (std::uint32_t bits = 0; bits < 64; ++bits) {
      Configuration x(6, bits);
      for (std::uint32_t block = 1; block < 64; ++block) {
        std::vector<int> cells;
        for (int i = 0; i < 6; ++i)
          if ((block >> i) & 1u) cells.push_back(i);
        auto y = substep(RuleTable(rule), x, cells);
        for (int i = 0; i < 6; ++i)
          if (!((block >> i) & 1u)) CHECK(y.cell(i) == x.cell(i));
      }
    }
  }
}

TEST_CASE("steps follow the documented traces") {
  DynamicalSystem sys2(RuleTable(2), SequentialMode::sweep_down(5));
  auto x = Configuration::from_string("10000");
  auto s1 = step(sys2, x);
  CHECK(s1.to_string() == "00111");
  CHECK(step(sys2, s1).to_string() == "00000");

  DynamicalSystem sys45(RuleTable(45), SequentialMode({0, 3, 1, 4, 2, 5}));
  CHECK(step(sys45, Configuration::zeros(6)).to_string() == "100100");

  DynamicalSystem sys204(RuleTable(204), SequentialMode({1, 0, 3, 2}));
  for (std::uint32_t bits = 0; bits < 16; ++bits)
    CHECK(step(sys204, Configuration(4, bits)).bits() == bits);
}

TEST_CASE("sequential stepping agrees with the per-cell oracle") {
  for (int n : {4, 5, 6}) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int k = 0; k < 5; ++k) std::next_permutation(perm.begin(), perm.end());
    for (int rule : {6, 37, 45, 73, 90, 104, 106, 150}) {
      DynamicalSystem sys{RuleTable(rule), SequentialMode(perm)};
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        Configuration x(n, bits);
        CHECK(step(sys, x).to_string() == oracle::sequential_step(rule, x.to_string(), perm));
      }
    }
  }
}

TEST_CASE("orbit records transient, cycle and limit set") {
  DynamicalSystem sys(RuleTable(104), SequentialMode::sweep_down(5));
  auto rec = orbit(sys, Configuration::from_string("01111"));
  CHECK(rec.transient == 0);
  CHECK(rec.cycle == 8);
  CHECK(rec.limit_set.size() == 8);

  DynamicalSystem sys2(RuleTable(2), SequentialMode::sweep_down(5));
  auto rec2 = orbit(sys2, Configuration::from_string("10000"));
  CHECK(rec2.transient == 2);
  CHECK(rec2.cycle == 1);
  CHECK(rec2.limit_set[0].to_string() == "00000");

  DynamicalSystem sys3(RuleTable(204), SequentialMode({0, 1, 2, 3}));
  auto rec3 = orbit(sys3, Configuration::from_string("0110"));
  CHECK(rec3.transient == 0);
  CHECK(rec3.cycle == 1);
}

TEST_CASE("orbit agrees with the string-based oracle") {
  std::vector<int> perm = {2, 0, 4, 1, 3};
  for (int rule : {37, 90, 105, 108}) {
    DynamicalSystem sys{RuleTable(rule), SequentialMode(perm)};
    for (std::uint32_t bits = 0; bits < 32; ++bits) {
      Configuration x(5, bits);
      auto got = orbit(sys, x);
      auto want = oracle::step_orbit(rule, x.to_string(), perm);
      CHECK(got.transient == want.transient);
      CHECK(got.cycle == want.cycle);
    }
  }
}

TEST_CASE("re-running the step from any limit configuration returns in cycle length") {
  DynamicalSystem sys(RuleTable(104), SequentialMode::sweep_down(5));
  auto rec = orbit(sys, Configuration::from_string("01111"));
  for (const auto& c : rec.limit_set) {
    Configuration y = c;
    for (int t = 0; t < rec.cycle; ++t) y = step(sys, y);
    CHECK(y == c);
  }
}

TEST_CASE("parallel fixed points match the published sets") {
  auto fp45 = fixed_points_parallel(RuleTable(45), 6);
  std::vector<std::string> got;
  for (const auto& c : fp45) got.push_back(c.to_string());
  // ascending by numeric value, cell 0 being the least significant bit
  CHECK(got == std::vector<std::string>{"100100", "010010", "001001"});
  CHECK(fixed_points_parallel(RuleTable(45), 5).empty());
  CHECK(fixed_points_parallel(RuleTable(204), 3).size() == 8);
}

TEST_CASE("step maps of sequential systems fix exactly the parallel fixed points") {
  for (int rule : {8, 30, 45, 90, 104, 110}) {
    for (int n : {4, 5, 6}) {
      auto fps = fixed_points_parallel(RuleTable(rule), n);
      for (const auto& mode : representative_modes(n)) {
        auto next = step_map(RuleTable(rule), mode);
        std::vector<Configuration> fixed;
        for (std::uint32_t x = 0; x < (1u << n); ++x)
          if (next[x] == x) fixed.emplace_back(n, x);
        CHECK(fixed == fps);
      }
    }
  }
}

TEST_CASE("block partitions fix exactly the parallel fixed points") {
  for (int rule : {30, 45, 90, 104, 150}) {
    for (int n : {5, 6}) {
      auto fps = fixed_points_parallel(RuleTable(rule), n);
      const std::uint32_t full = Configuration::mask_for(n);
      std::uint32_t evens = 0;
      for (int i = 0; i < n; i += 2) evens |= 1u << i;
      const std::uint32_t lo = (1u << (n / 2)) - 1;
      for (const auto& blocks :
           {std::vector<std::uint32_t>{full}, {evens, full ^ evens}, {lo, full ^ lo}}) {
        DynamicalSystem sys(RuleTable(rule), UpdateMode(n, blocks));
        std::vector<Configuration> fixed;
        for (std::uint32_t x = 0; x <= full; ++x)
          if (step_bits(sys, x) == x) fixed.emplace_back(n, x);
        CHECK(fixed == fps);
      }
    }
  }
}

TEST_CASE("temporal composition composes the step maps") {
  auto first = SequentialMode({0, 2, 1, 3});
  auto second = SequentialMode({3, 1, 2, 0});
  DynamicalSystem fs(RuleTable(110), first);
  DynamicalSystem ss(RuleTable(110), second);
  DynamicalSystem cs(RuleTable(110), temporal_compose(first, second));
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    Configuration x(4, bits);
    CHECK(step(cs, x) == step(ss, step(fs, x)));
  }
}

TEST_CASE("wall cells never change under any single-cell substep") {
  for (int rule : {28, 104, 108, 204}) {
    for (int k = 1; k <= 3; ++k) {
      for (const auto& wall : find_walls(RuleTable(rule), k)) {
        const int n = 6;
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
          Configuration x(n, bits);
          for (int at = 0; at < n; ++at) {
            bool embedded = true;
            for (int j = 0; j < k; ++j)
              embedded = embedded &&
                         x.cell(at + j) == static_cast<unsigned>(wall[static_cast<std::size_t>(j)] - '0');
            if (!embedded) continue;
            for (int j = 0; j < k; ++j) {
              int cell = (at + j) % n;
              CHECK(substep(RuleTable(rule), x, {cell}).cell(cell) == x.cell(cell));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("equal signatures induce identical step maps") {
  for (int n : {4, 5}) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int rule : {30, 37, 90, 104}) {
      std::vector<std::vector<std::uint32_t>> by_sig(1u << n);
      std::vector<int> p = perm;
      do {
        SequentialMode mode(p);
        auto sig = mode_signature(mode).bits();
        auto map = step_map(RuleTable(rule), mode);
        if (by_sig[sig].empty())
          by_sig[sig] = std::move(map);
        else
          CHECK(by_sig[sig] == map);
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
}
