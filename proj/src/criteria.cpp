#include "lagnp/criteria.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lagnp/arith.hpp"

namespace lagnp::criteria {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::ExcludedByPrimeWitness: return "ExcludedByPrimeWitness";
    case VerdictKind::ExcludedByFilaseta: return "ExcludedByFilaseta";
    case VerdictKind::ExcludedByRobustDumas: return "ExcludedByRobustDumas";
    case VerdictKind::NotExcluded: return "NotExcluded";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::uint64_t shift_binomial_valuation(std::uint64_t n, std::uint64_t s, std::uint64_t p) {
  return arith::valuation_of_binomial(n + s, s, p);
}

std::vector<std::uint64_t> window_primes(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || k > n) throw std::domain_error("window requires 1 <= k <= n");
  std::set<std::uint64_t> primes;
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t term = n - i;
    if (term < 2) continue;
    for (std::uint64_t p : arith::prime_divisors(term)) primes.insert(p);
  }
  return {primes.begin(), primes.end()};
}

std::optional<std::uint64_t> prime_witness(const polys::LaguerreInstance& inst, std::uint64_t k) {
  return prime_witness(inst, k, window_primes(inst.n, k));
}

std::optional<std::uint64_t> prime_witness(const polys::LaguerreInstance& inst, std::uint64_t k,
                                           const std::vector<std::uint64_t>& window) {
  if (k < 1 || k > inst.n) throw std::domain_error("prime_witness requires 1 <= k <= n");
  for (std::uint64_t p : window) {
    if (p <= k) continue;
    if (shift_binomial_valuation(inst.n, inst.s, p) == 0) return p;
  }
  return std::nullopt;
}

mpz_class spr_min_shift(std::uint64_t p, unsigned r, unsigned delta) {
  if (r == 0) throw std::domain_error("spr_min_shift requires r >= 1");
  if (delta > 1) throw std::domain_error("spr_min_shift requires delta in {0, 1}");
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), p, r);
  return v - delta;
}

mpz_class degree_one_bound(std::uint64_t s) {
  if (s < 2) throw std::domain_error("degree_one_bound requires s >= 2");
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), s, arith::prime_pi(s));
  return v;
}

GapThreshold prime_gap_threshold(const Rational& phi) {
  if (!(Rational(0, 1) < phi) || !(phi < Rational(1, 9)))
    throw std::domain_error("phi must lie in (0, 1/9)");
  // theta = phi / (1 - phi)
  const Rational theta(phi.num, phi.den - phi.num);
  std::uint64_t m0 = 0;
  if (theta == Rational(1, 39))
    m0 = 800;
  else if (theta == Rational(1, 1000))
    m0 = 48683;
  else
    throw std::domain_error("unsupported gap parameter theta = " + theta.str() +
                            "; supported: 1/39 (m0 = 800), 1/1000 (m0 = 48683)");
  // n_threshold = ceil(m0 / (1 - phi)) = ceil(m0 * den / (den - num))
  const std::uint64_t denom = static_cast<std::uint64_t>(phi.den - phi.num);
  const std::uint64_t numer = m0 * static_cast<std::uint64_t>(phi.den);
  const std::uint64_t threshold = (numer + denom - 1) / denom;
  return GapThreshold{threshold, Rational(2 * (phi.den - 2 * phi.num), phi.den)};
}

std::vector<std::uint64_t> candidate_primes(const polys::LaguerreInstance& inst) {
  // Every prime <= n divides c_0 through nu_p(n!), and every prime in
  // (n, n+s] divides a_j for j <= n+s-p; no prime beyond n+s divides any c_j.
  std::vector<std::uint64_t> out;
  const std::uint64_t top = inst.n + inst.s;
  if (top <= 1'000'000) {
    for (std::uint32_t p : arith::small_primes()) {
      if (p > top) break;
      out.push_back(p);
    }
  } else {
    out = arith::sieve_primes(top);
  }
  return out;
}

namespace {

ExclusionVerdict run_pipeline(const polys::LaguerreInstance& inst, std::uint64_t k,
                              const PipelineOptions& opts, bool weak_l,
                              const std::vector<std::uint64_t>* window) {
  if (k < 2 || 2 * k > inst.n)
    throw std::domain_error("pipeline requires 2 <= k <= n/2");
  ExclusionVerdict verdict;
  verdict.triple = {inst.n, k, inst.s};
  const auto witness =
      window ? prime_witness(inst, k, *window) : prime_witness(inst, k);
  if (witness) {
    verdict.kind = VerdictKind::ExcludedByPrimeWitness;
    verdict.prime = *witness;
    return verdict;
  }
  if (inst.n > opts.max_polygon_degree) {
    verdict.kind = VerdictKind::Inconclusive;
    return verdict;
  }
  const std::uint64_t l = weak_l ? k - 1 : 1;
  const auto primes = candidate_primes(inst);
  for (std::uint64_t p : primes) {
    if (newton::filaseta_excludes(inst, p, k, l)) {
      verdict.kind = VerdictKind::ExcludedByFilaseta;
      verdict.prime = p;
      verdict.filaseta_l = l;
      return verdict;
    }
  }
  bool inconclusive = false;
  for (std::uint64_t p : primes) {
    switch (newton::robust_dumas_excludes(inst, p, k, opts.dumas_budget)) {
      case newton::RobustVerdict::Excluded:
        verdict.kind = VerdictKind::ExcludedByRobustDumas;
        verdict.prime = p;
        return verdict;
      case newton::RobustVerdict::Inconclusive:
        inconclusive = true;
        break;
      case newton::RobustVerdict::NotExcluded:
        break;
    }
  }
  verdict.kind = inconclusive ? VerdictKind::Inconclusive : VerdictKind::NotExcluded;
  return verdict;
}

}  // namespace

ExclusionVerdict excludes_factor_degree(const polys::LaguerreInstance& inst, std::uint64_t k,
                                        const PipelineOptions& opts) {
  return run_pipeline(inst, k, opts, /*weak_l=*/false, nullptr);
}

ExclusionVerdict excludes_factor_degree(const polys::LaguerreInstance& inst, std::uint64_t k,
                                        const PipelineOptions& opts,
                                        const std::vector<std::uint64_t>& window) {
  return run_pipeline(inst, k, opts, /*weak_l=*/false, &window);
}

ExclusionVerdict excludes_factor_degree_weak_filaseta(const polys::LaguerreInstance& inst,
                                                      std::uint64_t k,
                                                      const PipelineOptions& opts) {
  return run_pipeline(inst, k, opts, /*weak_l=*/true, nullptr);
}

ExclusionVerdict excludes_factor_degree_weak_filaseta(const polys::LaguerreInstance& inst,
                                                      std::uint64_t k,
                                                      const PipelineOptions& opts,
                                                      const std::vector<std::uint64_t>& window) {
  return run_pipeline(inst, k, opts, /*weak_l=*/true, &window);
}

bool reverify(const ExclusionVerdict& verdict) {
  const polys::LaguerreInstance inst{verdict.triple.n, verdict.triple.s};
  const std::uint64_t k = verdict.triple.k;
  switch (verdict.kind) {
    case VerdictKind::ExcludedByPrimeWitness: {
      const std::uint64_t p = verdict.prime;
      if (p <= k || !arith::is_prime(p)) return false;
      bool divides_window = false;
      for (std::uint64_t i = 0; i < k && !divides_window; ++i)
        divides_window = (inst.n - i) % p == 0;
      return divides_window && shift_binomial_valuation(inst.n, inst.s, p) == 0;
    }
    case VerdictKind::ExcludedByFilaseta:
      return arith::is_prime(verdict.prime) &&
             newton::filaseta_excludes(inst, verdict.prime, k, verdict.filaseta_l);
    case VerdictKind::ExcludedByRobustDumas:
      return arith::is_prime(verdict.prime) &&
             newton::robust_dumas_excludes(inst, verdict.prime, k) ==
                 newton::RobustVerdict::Excluded;
    case VerdictKind::NotExcluded:
    case VerdictKind::Inconclusive:
      return true;  // nothing claimed, nothing to re-check
  }
  return false;
}

}  // namespace lagnp::criteria
