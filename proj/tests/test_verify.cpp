#include <catch2/catch_amalgamated.hpp>

#include "seqeca/verify.hpp"

using namespace seqeca;

TEST_CASE("registry contains the named entries") {
  std::vector<std::string> want = {"THM2",  "THM-R24", "THM3",  "THM4",  "THM5",
                                   "THM6",  "THM7",    "THM8",  "THM9",  "THM10",
                                   "THM11", "THM12",   "THM13", "LEM1",  "LEM4",
                                   "CONJ45", "CONJ37"};
  for (const auto& id : want) {
    bool found = false;
    for (const auto& entry : theorem_registry()) found = found || entry.id == id;
    CHECK(found);
  }
}

TEST_CASE("unknown ids raise") {
  CHECK_THROWS_AS(verify_theorem("THM99"), UnknownTheoremError);
}

TEST_CASE("small-scope certificates pass") {
  VerifyOptions small;
  small.sizes = std::vector<int>{5, 6};
  CHECK(verify_theorem("THM2", small).pass);
  CHECK(verify_theorem("THM-R24", small).pass);
  CHECK(verify_theorem("THM3", small).pass);
  CHECK(verify_theorem("THM5", small).pass);

  VerifyOptions tiny;
  tiny.sizes = std::vector<int>{4, 5};
  CHECK(verify_theorem("THM8", tiny).pass);
  CHECK(verify_theorem("THM10", tiny).pass);
  CHECK(verify_theorem("LEM1", tiny).pass);
  CHECK(verify_theorem("LEM4", tiny).pass);
}

TEST_CASE("conjecture entries are marked and report evidence") {
  VerifyOptions small;
  small.sizes = std::vector<int>{6};
  auto c45 = verify_theorem("CONJ45", small);
  CHECK(c45.conjecture);
  CHECK(c45.pass);
  REQUIRE_FALSE(c45.details.empty());
  auto c37 = verify_theorem("CONJ37", small);
  CHECK(c37.conjecture);
  CHECK(c37.pass);
}

TEST_CASE("certificates carry one detail line per check") {
  VerifyOptions small;
  small.sizes = std::vector<int>{7};
  auto cert = verify_theorem("THM13", small);
  CHECK(cert.pass);
  // wall checks for both rules plus one blocker line each
  CHECK(cert.details.size() == 4);
}

TEST_CASE("two-mode compositions converge everything for rule 45 on a size-6 ring") {
  VerifyOptions small;
  small.sizes = std::vector<int>{6};
  auto cert = verify_theorem("THM7", small);
  CHECK(cert.pass);
  CHECK(cert.details.size() == 2);  // staggered sweep image + composition coverage
}
