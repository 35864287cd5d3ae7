// Acceptance suite: one test case per verification criterion, each printing
// a single pass/fail line. `lagnp verify` runs the same checks.
#include <doctest.h>

#include <iostream>

#include "lagnp/acceptance.hpp"

using namespace lagnp;

namespace {

const fixtures::Fixtures& fx() {
  static const auto fixtures = fixtures::load();
  return fixtures;
}

acceptance::CriterionResult run(int index) {
  const auto result = acceptance::run_criterion(index, fx(), {});
  std::cout << acceptance::format_line(result) << std::endl;
  return result;
}

}  // namespace

TEST_CASE("criterion 1: S1 cardinality is 148") {
  const auto r = run(1);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("criterion 2: inner-regime survivors") {
  const auto r = run(2);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("criterion 3: Dumas-table elimination") {
  const auto r = run(3);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("criterion 4: Newton polygon fixtures") {
  const auto r = run(4);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("criterion 5: full exception-set assembly") {
  const auto r = run(5);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("criterion 6: smooth windows match the printed sets") {
  const auto r = run(6);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("criterion 7: largest nine-window solution") {
  const auto r = run(7);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("criterion 8: prime gaps") {
  const auto r = run(8);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("criterion 9: property suites") {
  const auto r = run(9);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("criterion 10: factor-oracle cross-check") {
  const auto r = run(10);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("criterion 11: overlapping-row witness report") {
  const auto r = run(11);
  CHECK_MESSAGE(r.pass, r.detail);
}
