#pragma once

#include <string>
#include <vector>

#include "lagnp/fixtures.hpp"
#include "lagnp/search.hpp"

// The verification suite behind `lagnp verify` and the acceptance tests:
// one entry per claim, each reporting pass/fail plus a one-line detail.
namespace lagnp::acceptance {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

CriterionResult run_criterion(int index, const fixtures::Fixtures& fx,
                              const search::ScanOptions& opts);

inline constexpr int kCriterionCount = 11;

std::vector<CriterionResult> run_all(const fixtures::Fixtures& fx,
                                     const search::ScanOptions& opts = {});

std::string format_line(const CriterionResult& r);

}  // namespace lagnp::acceptance
