#include <doctest.h>

#include "lagnp/arith.hpp"
#include "lagnp/fixtures.hpp"
#include "oracles.hpp"

using namespace lagnp;

TEST_CASE("sieve_primes small and boundary") {
  CHECK(arith::sieve_primes(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(arith::sieve_primes(2) == std::vector<std::uint64_t>{2});
  CHECK(arith::sieve_primes(1).empty());
  CHECK(arith::sieve_primes(0).empty());
}

TEST_CASE("sieve_primes matches trial division up to 1000") {
  CHECK(arith::sieve_primes(100).size() == oracles::primes_by_trial_division(100).size());
  CHECK(arith::sieve_primes(1000) == oracles::primes_by_trial_division(1000));
}

TEST_CASE("factorize small composite") {
  const auto f = arith::factorize(72);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair<mpz_class, unsigned>{2, 3});
  CHECK(f.factors[1] == std::pair<mpz_class, unsigned>{3, 2});
}

TEST_CASE("factorize reference values") {
  const auto f1 = arith::factorize(3939649);
  REQUIRE(f1.factors.size() == 4);
  CHECK(f1.factors[0] == std::pair<mpz_class, unsigned>{7, 2});
  CHECK(f1.factors[1] == std::pair<mpz_class, unsigned>{37, 1});
  CHECK(f1.factors[2] == std::pair<mpz_class, unsigned>{41, 1});
  CHECK(f1.factors[3] == std::pair<mpz_class, unsigned>{53, 1});

  const auto f2 = arith::factorize(mpz_class("332110803172167361"));
  REQUIRE(f2.factors.size() == 3);
  CHECK(f2.factors[0] == std::pair<mpz_class, unsigned>{2521, 1});
  CHECK(f2.factors[1] == std::pair<mpz_class, unsigned>{187177, 1});
  CHECK(f2.factors[2] == std::pair<mpz_class, unsigned>{mpz_class(703813633), 1});
}

TEST_CASE("factorize rejects m < 2") {
  CHECK_THROWS_AS(arith::factorize(1), std::domain_error);
  CHECK_THROWS_AS(arith::factorize(0), std::domain_error);
  CHECK_THROWS_AS(arith::factorize(-6), std::domain_error);
}

TEST_CASE("factorization reconstructs every m up to 10^6") {
  for (std::uint64_t m = 2; m <= 1'000'000; ++m) {
    const auto fs = arith::factorize_u64(m);
    std::uint64_t prod = 1;
    std::uint64_t prev = 0;
    for (const auto& [p, e] : fs) {
      REQUIRE(p > prev);
      REQUIRE(e >= 1);
      prev = p;
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    if (prod != m) {
      CAPTURE(m);
      REQUIRE(prod == m);
    }
    if (m % 9973 == 0) {
      for (const auto& [p, e] : fs) REQUIRE(oracles::is_prime_by_trial_division(p));
    }
  }
  CHECK(true);
}

TEST_CASE("p-adic valuation") {
  CHECK(arith::p_adic_valuation(1, 2) == 0);
  CHECK(arith::p_adic_valuation(1, 97) == 0);
  CHECK(arith::p_adic_valuation(720, 2) == oracles::valuation_by_division(720, 2));
  CHECK(arith::p_adic_valuation(720, 2) == 4);
  // 9! * C(21,9)
  mpz_class v = 362880;
  v *= arith::binomial(21, 9);
  CHECK(arith::p_adic_valuation(v, 3) == 4);
  CHECK(arith::p_adic_valuation(0, 5) == arith::kValuationInfinity);
  CHECK(arith::p_adic_valuation(-48, 2) == 4);
}

TEST_CASE("factorial valuation via Legendre sums") {
  CHECK(arith::valuation_of_factorial(0, 5) == 0);
  CHECK(arith::valuation_of_factorial(10, 3) == 4);
  CHECK(arith::valuation_of_factorial(92, 17) == 5);
  // direct cross-check on 10! and 92!
  mpz_class f = 1;
  for (int i = 2; i <= 10; ++i) f *= i;
  CHECK(oracles::valuation_by_division(f, 3) == 4);
  for (int i = 11; i <= 92; ++i) f *= i;
  CHECK(oracles::valuation_by_division(f, 17) == 5);
}

TEST_CASE("factorial valuation equals direct valuation for n <= 500, p <= 100") {
  const auto primes = arith::sieve_primes(100);
  mpz_class factorial = 1;
  for (std::uint64_t n = 1; n <= 500; ++n) {
    factorial *= n;
    for (std::uint64_t p : primes)
      REQUIRE(arith::valuation_of_factorial(n, p) ==
              static_cast<std::uint64_t>(arith::p_adic_valuation(factorial, p)));
  }
  CHECK(true);
}

TEST_CASE("binomial basics and Pascal identity") {
  const oracles::PascalTriangle pascal(300);
  CHECK(arith::binomial(17, 0) == 1);
  CHECK(arith::binomial(12, 9) == 220);
  CHECK(arith::binomial(12, 9) == pascal.at(12, 9));
  CHECK(arith::binomial(21, 9) == 293930);
  CHECK(arith::binomial(21, 9) == pascal.at(21, 9));
  CHECK(arith::binomial(5, 6) == 0);
  for (std::uint64_t n = 1; n <= 300; ++n)
    for (std::uint64_t k = 1; k < n; ++k)
      REQUIRE(arith::binomial(n, k) == arith::binomial(n - 1, k - 1) + arith::binomial(n - 1, k));
}

TEST_CASE("greatest prime factor of falling windows") {
  CHECK(arith::gpf_falling_factorial(9, 2) == 3);
  CHECK(arith::gpf_falling_factorial(9, 2) == oracles::gpf_by_trial_division(72));
  CHECK(arith::gpf_falling_factorial(292, 9) == 97);
  CHECK(arith::gpf_falling_factorial(292, 9) < 100);
  CHECK(arith::gpf_falling_factorial(14, 2) == 13);
  CHECK_THROWS_AS(arith::gpf_falling_factorial(1, 1), std::domain_error);
  CHECK_THROWS_AS(arith::gpf_falling_factorial(2, 3), std::domain_error);
}

TEST_CASE("greatest prime factor of step-2 progressions") {
  CHECK(arith::gpf_arith_progression(5, 3) == 7);   // 5*7*9
  CHECK(arith::gpf_arith_progression(3, 2) == 5);   // 3*5
  CHECK(arith::gpf_arith_progression(9, 4) == 13);  // 9*11*13*15
  CHECK_THROWS_AS(arith::gpf_arith_progression(1, 2), std::domain_error);
}

TEST_CASE("desk-scale check: consecutive windows beat 2k") {
  for (std::uint64_t k = 2; k <= 40; ++k) {
    const std::uint64_t lo = std::max(2 * k + 13, (541 * k + 261) / 262);
    for (std::uint64_t n = lo; n <= 2000; ++n)
      REQUIRE(arith::gpf_falling_factorial(n, k) > 2 * k);
  }
  CHECK(true);
}

TEST_CASE("desk-scale check: windows beyond the exception pairs beat 4.42k") {
  // The exception pairs index windows by their smallest term: pair (n, k)
  // covers n(n+1)...(n+k-1), the falling window of n+k-1.
  const auto fx = fixtures::load();
  auto in_t = [&](std::uint64_t n, std::uint64_t k) {
    for (const auto& [tn, tk] : fx.t_pairs)
      if (tn == n && tk == k) return true;
    return false;
  };
  for (std::uint64_t k = 2; k <= 40; ++k)
    for (std::uint64_t n = 4 * k + 1; n + k - 1 <= 2000; ++n) {
      if (in_t(n, k)) continue;
      REQUIRE(100 * arith::gpf_falling_factorial(n + k - 1, k) > 442 * k);
    }
  // and every listed pair is a genuine exception at the 4.5k bound
  for (const auto& [n, k] : fx.t_pairs)
    REQUIRE(10 * arith::gpf_falling_factorial(n + k - 1, k) <= 45 * k);
  CHECK(true);
}

TEST_CASE("desk-scale check: odd step-2 progressions beat 2k") {
  for (std::uint64_t n = 3; n <= 2000; n += 2)
    for (std::uint64_t k = 2; k <= 40 && k < n; ++k)
      REQUIRE(arith::gpf_arith_progression(n, k) > 2 * k);
  CHECK(true);
}

TEST_CASE("primality spans the reference sizes") {
  CHECK(arith::is_prime(std::uint64_t{2521}));
  CHECK(arith::is_prime(std::uint64_t{187177}));
  CHECK(arith::is_prime(std::uint64_t{703813633}));
  CHECK(!arith::is_prime(std::uint64_t{3939649}));
  for (std::uint64_t m = 2; m <= 5000; ++m)
    REQUIRE(arith::is_prime(m) == oracles::is_prime_by_trial_division(m));
  CHECK(arith::is_prime(mpz_class("170141183460469231731687303715884105727")));  // 2^127 - 1
}
