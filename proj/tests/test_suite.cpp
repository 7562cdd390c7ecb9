#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>

#include "stlogic/suite.hpp"

using namespace stlogic;

namespace {
const std::filesystem::path kFixtures = STLOGIC_FIXTURES_DIR;
}

TEST_CASE("fixture directory loads with expectations") {
  const auto fixtures = load_fixture_dir(kFixtures);
  REQUIRE(fixtures.size() == 4);
  REQUIRE(fixtures[0].name == "conjunction_meta");
  REQUIRE(fixtures[1].name == "explosion_meta");
  REQUIRE(fixtures[2].name == "glivenko_witness");
  REQUIRE(fixtures[3].name == "trivial");
  for (const Fixture& f : fixtures) REQUIRE_FALSE(f.expectations.empty());
}

TEST_CASE("expectation lines parse into payload and value") {
  std::istringstream in(
      "# comment\n"
      "eval w1 ~a -> b = 0\n"
      "true a & b = yes\n"
      "inference a, b => c = fails\n"
      "meta [ => a ] =>* [ => b ] = holds\n");
  const auto parsed = parse_expectations(in, "inline");
  REQUIRE(parsed.size() == 4);
  REQUIRE(parsed[0].directive == "eval");
  REQUIRE(parsed[0].world == "w1");
  REQUIRE(parsed[0].payload == "~a -> b");
  REQUIRE(parsed[0].expected == "0");
  REQUIRE(parsed[2].payload == "a, b => c");
  REQUIRE(parsed[3].payload == "[ => a ] =>* [ => b ]");

  std::istringstream bad("eval w1 a\n");
  REQUIRE_THROWS_AS(parse_expectations(bad, "inline"), SuiteError);
  std::istringstream unknown("frob a = yes\n");
  REQUIRE_THROWS_AS(parse_expectations(unknown, "inline"), SuiteError);
}

TEST_CASE("expectation checking reports diffs") {
  const Fixture fixture = load_fixture(kFixtures / "trivial.model");
  Expectation wrong;
  wrong.raw = "true a = no";
  wrong.directive = "true";
  wrong.payload = "a";
  wrong.expected = "no";
  const std::string diff = check_expectation(fixture.model, wrong);
  REQUIRE(diff.find("expected no, got yes") != std::string::npos);
  for (const Expectation& e : fixture.expectations)
    REQUIRE(check_expectation(fixture.model, e).empty());
}

TEST_CASE("full suite passes on the shipped fixtures") {
  SuiteOptions opts;
  opts.fixtures_dir = kFixtures;
  opts.seed = 42;
  const SuiteResult result = run_suite(opts);
  INFO(result.to_text());
  REQUIRE(result.all_passed());
  REQUIRE(result.items.size() == 13);  // 4 fixtures + 9 batteries
}

TEST_CASE("suite is deterministic for a fixed seed") {
  SuiteOptions opts;
  opts.fixtures_dir = kFixtures;
  opts.seed = 7;
  REQUIRE(run_suite(opts).to_text() == run_suite(opts).to_text());
}

TEST_CASE("weakened implication reading breaks the witness fixture") {
  SuiteOptions opts;
  opts.fixtures_dir = kFixtures;
  opts.check.eval.implication = ImplicationRule::SufficientOnly;
  const SuiteResult result = run_suite(opts);
  REQUIRE_FALSE(result.all_passed());
  bool witness_failed = false;
  for (const SuiteItem& item : result.items)
    if (item.name == "fixture glivenko_witness") witness_failed = !item.passed;
  REQUIRE(witness_failed);
}

TEST_CASE("pinning bot in minimal models breaks the universal-failure batteries") {
  SuiteOptions opts;
  opts.fixtures_dir = kFixtures;
  opts.check.pin_bottom_false_in_minimal = true;
  const SuiteResult result = run_suite(opts);
  REQUIRE_FALSE(result.all_passed());
  bool st_failure_broken = false;
  bool totality_broken = false;
  for (const SuiteItem& item : result.items) {
    if (item.name == "battery minimal-st-failure") st_failure_broken = !item.passed;
    if (item.name == "battery trivial-model-totality") totality_broken = !item.passed;
  }
  REQUIRE(st_failure_broken);
  REQUIRE(totality_broken);
}

TEST_CASE("suite reports missing fixture directories instead of throwing") {
  SuiteOptions opts;
  opts.fixtures_dir = "no-such-directory";
  const SuiteResult result = run_suite(opts);
  REQUIRE_FALSE(result.all_passed());
  REQUIRE(result.items.size() == 1);
  REQUIRE(result.items.front().name == "fixtures");
}
