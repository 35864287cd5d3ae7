#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lagnp/newton.hpp"
#include "lagnp/polys.hpp"
#include "lagnp/rational.hpp"

// The elimination criteria as verdict-producing checks and the combined
// pipeline (prime witness, then Filaseta, then perturbation-closed Dumas).
namespace lagnp::criteria {

struct Triple {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t s = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Canonical report order: ascending (k, n, s).
struct TripleOrder {
  bool operator()(const Triple& a, const Triple& b) const {
    if (a.k != b.k) return a.k < b.k;
    if (a.n != b.n) return a.n < b.n;
    return a.s < b.s;
  }
};

enum class VerdictKind {
  ExcludedByPrimeWitness,
  ExcludedByFilaseta,
  ExcludedByRobustDumas,
  NotExcluded,
  Inconclusive,
};

std::string_view to_string(VerdictKind kind);

struct ExclusionVerdict {
  Triple triple;
  VerdictKind kind = VerdictKind::NotExcluded;
  std::uint64_t prime = 0;       // witness or polygon prime; 0 when absent
  std::uint64_t filaseta_l = 0;  // only meaningful for Filaseta verdicts
  bool excluded() const {
    return kind == VerdictKind::ExcludedByPrimeWitness || kind == VerdictKind::ExcludedByFilaseta ||
           kind == VerdictKind::ExcludedByRobustDumas;
  }
};

// nu_p(C(n+s, s)) via Legendre sums; safe for n up to the full u64 range.
std::uint64_t shift_binomial_valuation(std::uint64_t n, std::uint64_t s, std::uint64_t p);

// Distinct primes dividing the falling window n(n-1)...(n-k+1), ascending.
std::vector<std::uint64_t> window_primes(std::uint64_t n, std::uint64_t k);

// Smallest prime p > k with p | n(n-1)...(n-k+1) and nu_p(C(n+s, s)) = 0.
// Such a p certifies that no perturbation has a factor of degree k.
std::optional<std::uint64_t> prime_witness(const polys::LaguerreInstance& inst, std::uint64_t k);
// Same, against precomputed window primes (scans fix (n, k) and sweep s).
std::optional<std::uint64_t> prime_witness(const polys::LaguerreInstance& inst, std::uint64_t k,
                                           const std::vector<std::uint64_t>& window);

// p^r - delta: the least shift compatible with a degree-2 factor when
// p^r | (n - delta). For delta = 1 the caller must ensure gcd(s+1, p) = 1
// before concluding.
mpz_class spr_min_shift(std::uint64_t p, unsigned r, unsigned delta);

// s^pi(s): a degree-1 factor forces n <= this bound. Requires s >= 2.
mpz_class degree_one_bound(std::uint64_t s);

struct GapThreshold {
  std::uint64_t n_threshold;
  Rational coefficient;  // s > coefficient * k for n >= n_threshold
};

// Shift lower bound from prime gaps, for phi in (0, 1/9) with theta =
// phi/(1-phi) among the supported gap parameters (1/39 -> m0 = 800,
// 1/1000 -> m0 = 48683).
GapThreshold prime_gap_threshold(const Rational& phi);

struct PipelineOptions {
  std::uint64_t dumas_budget = newton::kDefaultNodeBudget;
  // Above this degree the polygon stages are not attempted and a failed
  // witness search yields Inconclusive instead of NotExcluded.
  std::uint64_t max_polygon_degree = 1'000'000;
};

// All primes that divide some c_j with j <= n-2 (equivalently, all primes
// up to n + s); the only primes the polygon criteria can use.
std::vector<std::uint64_t> candidate_primes(const polys::LaguerreInstance& inst);

// witness -> Filaseta (l = 1, primes ascending) -> robust Dumas (ascending).
// Requires 2 <= k <= n/2. The window overload skips refactoring the falling
// window when a scan sweeps s at fixed (n, k).
ExclusionVerdict excludes_factor_degree(const polys::LaguerreInstance& inst, std::uint64_t k,
                                        const PipelineOptions& opts = {});
ExclusionVerdict excludes_factor_degree(const polys::LaguerreInstance& inst, std::uint64_t k,
                                        const PipelineOptions& opts,
                                        const std::vector<std::uint64_t>& window);

// Same staging but with Filaseta applied at l = k-1, the weakest hypothesis
// that still excludes degree k; the reference tables were built this way.
ExclusionVerdict excludes_factor_degree_weak_filaseta(const polys::LaguerreInstance& inst,
                                                      std::uint64_t k,
                                                      const PipelineOptions& opts = {});
ExclusionVerdict excludes_factor_degree_weak_filaseta(const polys::LaguerreInstance& inst,
                                                      std::uint64_t k,
                                                      const PipelineOptions& opts,
                                                      const std::vector<std::uint64_t>& window);

// Re-check a verdict's certificate from its stored data alone.
bool reverify(const ExclusionVerdict& verdict);

}  // namespace lagnp::criteria
