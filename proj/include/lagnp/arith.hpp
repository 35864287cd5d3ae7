#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

// Exact integer number theory: primes, factorization, valuations, binomials
// and greatest-prime-factor queries over integer windows. Everything is a
// pure function of its inputs; the shared sieve tables are immutable after
// first construction and safe to use from many threads.
namespace lagnp::arith {

// Primes in [2, limit], ascending. limit < 2 yields an empty list.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);
// Trial division + mpz_probab_prime_p for values beyond 64 bits.
bool is_prime(const mpz_class& n);

struct Factorization {
  mpz_class value;
  std::vector<std::pair<mpz_class, unsigned>> factors;  // primes ascending
};

// Requires m >= 2. Trial division by sieved primes, then deterministic
// primality testing plus Pollard rho splitting for what remains.
Factorization factorize(const mpz_class& m);
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t m);

inline constexpr long kValuationInfinity = std::numeric_limits<long>::max();

// Largest e with p^e | |x|; x == 0 maps to kValuationInfinity. The infinity
// value is never fed to hull construction (zero coefficients are dropped
// before the polygon is built).
long p_adic_valuation(const mpz_class& x, std::uint64_t p);
long p_adic_valuation_u64(std::uint64_t x, std::uint64_t p);

// Legendre sum: nu_p(n!) = sum_i floor(n / p^i).
std::uint64_t valuation_of_factorial(std::uint64_t n, std::uint64_t p);
// nu_p(C(a, b)) for a >= b, via Legendre sums (no big integers involved).
std::uint64_t valuation_of_binomial(std::uint64_t a, std::uint64_t b, std::uint64_t p);

// Exact binomial coefficient; k > n yields 0.
mpz_class binomial(std::uint64_t n, std::uint64_t k);

// Greatest prime dividing m (m >= 2).
std::uint64_t gpf(std::uint64_t m);
// Greatest prime dividing n(n-1)...(n-k+1). Requires n >= k >= 1 and a
// window that contains an integer >= 2.
std::uint64_t gpf_falling_factorial(std::uint64_t n, std::uint64_t k);
// Greatest prime dividing n(n+2)...(n+2(k-1)). Requires n >= 2, k >= 1.
std::uint64_t gpf_arith_progression(std::uint64_t n, std::uint64_t k);

// Distinct primes dividing m (m >= 2), ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t m);

// pi(x) for x up to the shared sieve limit (10^6).
std::uint64_t prime_pi(std::uint64_t x);

// Shared table of primes up to 10^6, built once.
const std::vector<std::uint32_t>& small_primes();

}  // namespace lagnp::arith
