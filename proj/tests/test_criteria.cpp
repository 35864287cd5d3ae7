#include <doctest.h>

#include "lagnp/arith.hpp"
#include "lagnp/criteria.hpp"
#include "oracles.hpp"

using namespace lagnp;
using criteria::VerdictKind;

TEST_CASE("prime witnesses on the reference rows") {
  CHECK(criteria::prime_witness({9, 1}, 2) == 3);
  CHECK(criteria::prime_witness({14, 3}, 3) == 7);
  CHECK(!criteria::prime_witness({10, 4}, 5).has_value());
  // the blocking value: 7 | C(14, 10) = 1001 = 7 * 11 * 13
  CHECK(criteria::shift_binomial_valuation(10, 4, 7) == 1);
}

TEST_CASE("witness verdicts re-verify from stored data") {
  for (std::uint64_t n = 4; n <= 60; ++n)
    for (std::uint64_t k = 2; 2 * k <= n; ++k)
      for (std::uint64_t s = 1; s <= 9; ++s) {
        if (const auto p = criteria::prime_witness({n, s}, k)) {
          criteria::ExclusionVerdict v;
          v.triple = {n, k, s};
          v.kind = VerdictKind::ExcludedByPrimeWitness;
          v.prime = *p;
          REQUIRE(criteria::reverify(v));
        }
      }
  CHECK(true);
}

TEST_CASE("minimum shift compatible with a degree-2 factor") {
  CHECK(criteria::spr_min_shift(3, 2, 0) == 9);
  CHECK(criteria::spr_min_shift(2521, 1, 0) == 2521);
  CHECK(criteria::spr_min_shift(17, 2, 1) == 288);
  CHECK_THROWS_AS(criteria::spr_min_shift(3, 0, 0), std::domain_error);
  CHECK_THROWS_AS(criteria::spr_min_shift(3, 1, 2), std::domain_error);
}

TEST_CASE("minimum shift telescoping: p = 3, r = 2, n = 9") {
  // 3^2 | 9, so nu_3(C(9+s, s)) stays zero for every s below 9
  for (std::uint64_t s = 1; s <= 8; ++s)
    REQUIRE(criteria::shift_binomial_valuation(9, s, 3) == 0);
  // a base-3 carry: 9 + 18 = 27
  CHECK(criteria::shift_binomial_valuation(9, 18, 3) == 1);
}

TEST_CASE("degree-one bound") {
  CHECK(criteria::degree_one_bound(2) == 2);
  CHECK(criteria::degree_one_bound(4) == 16);
  CHECK(criteria::degree_one_bound(10) == 10000);
  CHECK_THROWS_AS(criteria::degree_one_bound(1), std::domain_error);
}

TEST_CASE("prime gap thresholds") {
  const auto a = criteria::prime_gap_threshold(Rational(1, 40));
  CHECK(a.n_threshold == 821);
  CHECK(a.coefficient == Rational(19, 10));
  const auto b = criteria::prime_gap_threshold(Rational(1, 1001));
  CHECK(b.n_threshold == 48732);
  CHECK(b.coefficient == Rational(1998, 1001));
  CHECK_THROWS_AS(criteria::prime_gap_threshold(Rational(1, 50)), std::domain_error);
  CHECK_THROWS_AS(criteria::prime_gap_threshold(Rational(1, 8)), std::domain_error);
  CHECK_THROWS_AS(criteria::prime_gap_threshold(Rational(0, 1)), std::domain_error);
  // the coefficient approaches 2 from below as phi shrinks
  CHECK(b.coefficient < Rational(2, 1));
  CHECK(a.coefficient < b.coefficient);
}

TEST_CASE("pipeline verdicts on the reference triples") {
  const auto v1 = criteria::excludes_factor_degree({6, 47}, 3);
  CHECK(v1.kind == VerdictKind::ExcludedByRobustDumas);
  CHECK(v1.prime == 2);
  CHECK(criteria::reverify(v1));

  const auto v2 = criteria::excludes_factor_degree({9, 19}, 2);
  CHECK(v2.kind == VerdictKind::NotExcluded);

  const auto v3 = criteria::excludes_factor_degree({4, 2}, 2);
  CHECK(v3.kind == VerdictKind::ExcludedByRobustDumas);
  CHECK(v3.prime == 2);

  const auto v4 = criteria::excludes_factor_degree({9, 12}, 3);
  CHECK(v4.kind == VerdictKind::ExcludedByFilaseta);
  CHECK(v4.prime == 13);
  CHECK(v4.filaseta_l == 1);
  CHECK(criteria::reverify(v4));

  CHECK_THROWS_AS(criteria::excludes_factor_degree({9, 12}, 1), std::domain_error);
  CHECK_THROWS_AS(criteria::excludes_factor_degree({9, 12}, 5), std::domain_error);
}

TEST_CASE("weak staging uses the loosest Filaseta hypothesis") {
  // (9, 19) at k = 3 needs the case analysis under l = 1 but falls to
  // Filaseta directly once l = k-1 relaxes the divisibility range
  const auto spec = criteria::excludes_factor_degree({9, 19}, 3);
  CHECK(spec.kind == VerdictKind::ExcludedByRobustDumas);
  const auto weak = criteria::excludes_factor_degree_weak_filaseta({9, 19}, 3);
  CHECK(weak.kind == VerdictKind::ExcludedByFilaseta);
  CHECK(weak.prime == 11);
  CHECK(weak.filaseta_l == 2);
  CHECK(criteria::reverify(weak));
  // both stagings agree where Filaseta fails outright
  const auto dumas = criteria::excludes_factor_degree_weak_filaseta({6, 47}, 3);
  CHECK(dumas.kind == VerdictKind::ExcludedByRobustDumas);
  CHECK(dumas.prime == 2);
}

TEST_CASE("excluded verdicts agree with the factor oracle on small instances") {
  for (const auto& t : {criteria::Triple{9, 3, 5}, {9, 3, 6}, {8, 3, 6}, {12, 2, 43}}) {
    const auto verdict = criteria::excludes_factor_degree({t.n, t.s}, t.k);
    REQUIRE(verdict.excluded());
    const auto oracle = polys::kronecker_factor_oracle(polys::g1_coefficients({t.n, t.s}), 3);
    REQUIRE(oracle.applicable);
    for (const auto& f : oracle.factors) REQUIRE(f.degree() != t.k);
  }
  CHECK(true);
}

TEST_CASE("two valuation routes agree on a sample") {
  for (std::uint64_t n : {9, 92, 134849, 3939649})
    for (std::uint64_t s : {1, 9, 47, 92})
      for (std::uint64_t p : {3, 17, 41, 599}) {
        mpz_class prod = 1;
        for (std::uint64_t j = 1; j <= s; ++j) prod *= mpz_class(std::to_string(n + j));
        mpz_class sfact = 1;
        for (std::uint64_t j = 2; j <= s; ++j) sfact *= j;
        const long direct =
            oracles::valuation_by_division(prod, p) - oracles::valuation_by_division(sfact, p);
        REQUIRE(static_cast<long>(criteria::shift_binomial_valuation(n, s, p)) == direct);
      }
  CHECK(true);
}
