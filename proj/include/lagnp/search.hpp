#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lagnp/criteria.hpp"
#include "lagnp/fixtures.hpp"
#include "lagnp/rational.hpp"

// Exhaustive scan drivers: the inner/outer parameter sweeps, smooth-window
// candidate sets, ingestion of the external odd-solution list, and the
// row-by-row reproduction of the reference tables.
namespace lagnp::search {

struct Interval {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool contains(std::uint64_t v) const { return lo <= v && v <= hi; }
};

enum class Regime { Inner, Outer, Unconstrained };

std::string_view to_string(Regime r);

struct TripleRange {
  Interval k;
  Interval n;
  Interval s;
  Regime regime = Regime::Unconstrained;

  // n interval for a fixed k after applying the regime constraint.
  std::optional<Interval> n_for(std::uint64_t k_value) const;
  std::uint64_t triple_count() const;
};

struct ScanOptions {
  unsigned jobs = 0;  // 0 = hardware concurrency
  std::uint64_t budget = 100'000'000;
  criteria::PipelineOptions pipeline;
  bool weak_filaseta = false;  // l = k-1 staging for table reproduction
};

struct ScanReport {
  TripleRange range;
  std::vector<criteria::Triple> survivors;            // NotExcluded or Inconclusive
  std::vector<criteria::ExclusionVerdict> verdicts;   // every triple, (k, n, s) order
  std::uint64_t no_witness_count = 0;
  double seconds = 0;  // in-memory only; never serialized
};

// Runs the pipeline on every triple in range. Deterministic: the report is
// identical for any worker count. Throws if the triple count exceeds budget.
ScanReport scan(const TripleRange& range, const ScanOptions& opts = {});

struct SmoothWindowSet {
  std::uint64_t k = 2;
  std::uint64_t bound = 100;
  std::vector<std::uint64_t> members;  // ascending, all > 300
};

// All n in (300, n_max] whose falling k-window has every prime factor below
// prime_bound. Factors each term against a shared table; no floating point.
SmoothWindowSet smooth_window_scan(std::uint64_t k, std::uint64_t n_max,
                                   std::uint64_t prime_bound);

// Parses the odd-solution list (one odd decimal per line, '#' comments) and
// maps x -> n = (x+1)/2, keeping n > 300. Throws with a line number on
// malformed input.
std::vector<std::uint64_t> ingest_najman(const std::string& path);

// Pipeline over a smooth-window candidate set for every s in s_range; for
// k = 2 the minimum-shift bound is cross-checked against the witness route.
ScanReport eliminate_dk_triples(const SmoothWindowSet& dk, Interval s_range,
                                const ScanOptions& opts = {});

// True iff every m in [m_lo, m_hi] has a prime in (m, ratio * m]. Exact
// cross-multiplied comparisons against a sieve.
bool verify_prime_gap(std::uint64_t m_lo, std::uint64_t m_hi, const Rational& ratio);

struct RowResult {
  std::string row;
  bool agree = false;
  std::string detail;
};

struct TableReport {
  std::string name;
  bool all_agree = false;
  std::vector<RowResult> rows;
};

inline constexpr std::string_view kTableNames[] = {"table1", "table2", "table3", "omega",
                                                   "s2",     "s3",     "s4",     "thm3",
                                                   "s>9"};

// Recomputes one reference table and reports per-row agreement.
// Disagreements are reported, not fatal.
TableReport reproduce_table(std::string_view name, const fixtures::Fixtures& fx,
                            const ScanOptions& opts = {});

struct ExceptionSetReport {
  std::vector<criteria::Triple> survivors;
  // survivors that the perturbation-closed Dumas check would exclude as well
  std::vector<criteria::ExclusionVerdict> excludable_beyond_tables;
  std::vector<std::string> header;  // how the search space was assembled
};

// Assembles the full s <= 92 search space the way the proofs dictate and
// returns its exception set. D_2 candidates come from the odd-solution file.
ExceptionSetReport exception_set_assembly(const fixtures::Fixtures& fx, const ScanOptions& opts = {});

}  // namespace lagnp::search
