#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lagnp/criteria.hpp"

// Machine-readable transcriptions of the reference tables, loaded from
// data/fixtures. Reproduction code compares computed results to these
// row-by-row so a single transcription error stays localized.
namespace lagnp::fixtures {

struct WitnessRow {
  std::uint64_t n, k, s, p;
};

struct OmegaRow {
  std::uint64_t n, k, s, p;
};

struct Fixtures {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> t_pairs;  // (n, k)
  std::vector<WitnessRow> table1;                                // k = 2 witness rows
  std::vector<WitnessRow> table2;                                // k = 2 Filaseta rows (l = 1)
  std::vector<WitnessRow> table3;                                // k > 2 witness rows
  std::vector<OmegaRow> omega;
  std::vector<criteria::Triple> s2, s3, s4, thm3, s_gt9, inner_exceptions;
  std::map<unsigned, std::vector<std::uint64_t>> dk_printed;  // k -> printed members
  std::string najman_path;

  bool omega_contains(const criteria::Triple& t) const;
};

// Resolution order: explicit argument, LAGNP_DATA_DIR, compiled-in default.
std::string default_data_dir();
Fixtures load(const std::string& data_dir = "");

}  // namespace lagnp::fixtures
