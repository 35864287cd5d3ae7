#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

// Construction of the Laguerre-derived polynomials: for a pair (n, s) the
// degree-n polynomial with coefficients a_j = C(n+s-j, n-j), its monic
// integer form g_1 with c_j = (n!/j!) a_j, and unit-endpoint coefficient
// perturbations. Values are immutable once built and safe to share.
namespace lagnp::polys {

struct LaguerreInstance {
  std::uint64_t n = 1;  // degree, >= 1
  std::uint64_t s = 0;  // shift, >= 0; the implied parameter is -n-s-1
};

struct IntegerPolynomial {
  std::vector<mpz_class> coeffs;  // index j = coefficient of x^j
  std::uint64_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

// Integer multipliers b_0..b_n with |b_0| = |b_n| = 1.
struct PerturbationVector {
  std::vector<long long> b;
};

// a_j = C(n+s-j, n-j), strictly positive. Throws on j > n.
mpz_class coeff_a(const LaguerreInstance& inst, std::uint64_t j);

// Degree cap for materializing exact coefficients; the valuation profile
// below has no such cap and is what the scans use.
inline constexpr std::uint64_t kMaxMaterializedDegree = 4096;

// c_j = (n!/j!) a_j for j = 0..n. c_n = 1, c_0 = n! C(n+s, n).
IntegerPolynomial g1_coefficients(const LaguerreInstance& inst);

// coeffs[j] *= b_j. Throws unless |b_0| = |b_n| = 1 and lengths match.
IntegerPolynomial perturb(const IntegerPolynomial& g1, const PerturbationVector& b);

// nu_p(c_j) for j = 0..n, computed with Legendre sums only. Cheap even when
// the coefficients themselves would have thousands of digits.
std::vector<long> g1_valuation_profile(const LaguerreInstance& inst, std::uint64_t p);
long g1_coeff_valuation(const LaguerreInstance& inst, std::uint64_t j, std::uint64_t p);

// Brute-force factor oracle via Kronecker interpolation: evaluates at small
// integer points, enumerates divisor tuples, interpolates monic candidates
// and trial-divides. Limits: degree <= 12, factor degree <= 3, about 10^6
// divisor combinations. Independent of the polygon/criteria code paths.
struct FactorSearchResult {
  bool applicable = false;
  std::vector<IntegerPolynomial> factors;  // monic factors, degree in [1, min(k, n-1)]
};

FactorSearchResult kronecker_factor_oracle(const IntegerPolynomial& poly, unsigned max_degree);

inline constexpr unsigned kOracleMaxPolyDegree = 12;
inline constexpr unsigned kOracleMaxFactorDegree = 3;
inline constexpr std::uint64_t kOracleCombinationBudget = 1'000'000;

}  // namespace lagnp::polys
