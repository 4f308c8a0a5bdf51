#include <doctest.h>

#include <algorithm>

#include "fitt/errors.hpp"
#include "fitt/suites.hpp"

using namespace fitt;

TEST_CASE("suite registry") {
  auto names = suite_names();
  CHECK(names.size() == 9);
  CHECK(std::find(names.begin(), names.end(), "containment") != names.end());
  CHECK(std::find(names.begin(), names.end(), "edge-formula") != names.end());
  CHECK(std::find(names.begin(), names.end(), "semigroup-examples") != names.end());
  CHECK_THROWS_AS((void)run_suite("nonsense", SuiteConfig{}), PreconditionViolated);
}

TEST_CASE("sampling is deterministic") {
  SuiteConfig cfg;
  cfg.count = 10;
  auto a = sample_ideals(cfg);
  auto b = sample_ideals(cfg);
  REQUIRE(a.size() == 10);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  for (const auto& ideal : a) {
    CHECK(ideal.ring().var_count() <= cfg.max_vars);
    CHECK(ideal.mu() <= cfg.max_gens);
    CHECK(!ideal.is_zero());
    CHECK(ideal.is_proper());
  }

  SuiteConfig other = cfg;
  other.seed = 7;
  auto c = sample_ideals(other);
  bool all_same = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == c[i])) all_same = false;
  CHECK_FALSE(all_same);
}

TEST_CASE("small containment sweep") {
  SuiteConfig cfg;
  cfg.count = 15;
  SuiteReport rep = run_suite("containment", cfg);
  CHECK(rep.pass());
  CHECK(rep.instances == 15);
  CHECK(rep.checks > 15);
}

TEST_CASE("small radical sweep") {
  SuiteConfig cfg;
  cfg.count = 10;
  SuiteReport rep = run_suite("radical", cfg);
  CHECK(rep.pass());
  CHECK(rep.instances == 10);
}

TEST_CASE("small invariance sweep") {
  SuiteConfig cfg;
  cfg.count = 8;
  SuiteReport rep = run_suite("presentation", cfg);
  CHECK(rep.pass());
  CHECK(rep.instances == 8);
}

TEST_CASE("complete graph table") {
  SuiteReport rep = run_suite("complete-graphs", SuiteConfig{});
  CHECK(rep.pass());
  // one instance per table entry: j = 0..m for each of K3, K4, K5
  CHECK(rep.instances == 4 + 7 + 11);
  CHECK(!rep.notes.empty());
}

TEST_CASE("semigroup worked examples") {
  SuiteReport rep = run_suite("semigroup-examples", SuiteConfig{});
  CHECK(rep.pass());
  CHECK(rep.checks > 30);
}
