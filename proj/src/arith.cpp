#include "lagnp/arith.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace lagnp::arith {

namespace {

constexpr std::uint64_t kSieveLimit = 1'000'000;

std::vector<std::uint32_t> build_small_primes() {
  std::vector<bool> composite(kSieveLimit + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= kSieveLimit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= kSieveLimit; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Brent's cycle variant; n must be odd composite with no factor <= 37.
std::uint64_t pollard_rho(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto step = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    std::uint64_t saved_x = x, saved_y = y;
    while (d == 1) {
      std::uint64_t prod = 1;
      saved_x = x;
      saved_y = y;
      for (int i = 0; i < 64 && d == 1; ++i) {
        x = step(x);
        y = step(step(y));
        const std::uint64_t diff = x > y ? x - y : y - x;
        if (diff == 0) {
          d = n;  // cycle without factor, retry with next c
          break;
        }
        prod = mulmod(prod, diff, n);
      }
      if (d == 1) d = std::gcd(prod, n);
    }
    if (d == n) {
      // backtrack one step at a time
      std::uint64_t xx = saved_x, yy = saved_y;
      d = 1;
      while (d == 1) {
        xx = step(xx);
        yy = step(step(yy));
        const std::uint64_t diff = xx > yy ? xx - yy : yy - xx;
        if (diff == 0) break;
        d = std::gcd(diff, n);
      }
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_u64_into(std::uint64_t m, std::vector<std::pair<std::uint64_t, unsigned>>& out) {
  if (m < 2) return;
  if (is_prime(m)) {
    out.emplace_back(m, 1);
    return;
  }
  const std::uint64_t d = pollard_rho(m);
  factor_u64_into(d, out);
  factor_u64_into(m / d, out);
}

bool fits_u64(const mpz_class& m) { return m.fits_ulong_p() || mpz_sizeinbase(m.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const mpz_class& m) {
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, -1, sizeof(r), 0, 0, m.get_mpz_t());
  return r;
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = build_small_primes();
  return primes;
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  const std::uint64_t d = (n - 1) >> std::countr_zero(n - 1);
  const int r = std::countr_zero(n - 1);
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < r - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 64) > 0;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t m) {
  if (m < 2) throw std::domain_error("factorize requires m >= 2");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint32_t p : small_primes()) {
    const std::uint64_t pp = p;
    if (pp * pp > m) break;
    if (m % pp == 0) {
      unsigned e = 0;
      while (m % pp == 0) {
        m /= pp;
        ++e;
      }
      out.emplace_back(pp, e);
    }
  }
  if (m > 1) {
    std::vector<std::pair<std::uint64_t, unsigned>> rest;
    factor_u64_into(m, rest);
    std::sort(rest.begin(), rest.end());
    // merge equal primes from recursive splitting
    for (auto& [p, e] : rest) {
      if (!out.empty() && out.back().first == p)
        out.back().second += e;
      else
        out.emplace_back(p, e);
    }
  }
  return out;
}

Factorization factorize(const mpz_class& m) {
  if (m < 2) throw std::domain_error("factorize requires m >= 2");
  Factorization fact;
  fact.value = m;
  if (fits_u64(m)) {
    for (auto [p, e] : factorize_u64(to_u64(m)))
      fact.factors.emplace_back(mpz_class(std::to_string(p)), e);
    return fact;
  }
  mpz_class rest = m;
  for (std::uint32_t p : small_primes()) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      fact.factors.emplace_back(mpz_class(p), e);
    }
  }
  // Remaining cofactor: split with GMP-backed rho until prime pieces remain.
  std::vector<mpz_class> stack;
  if (rest > 1) stack.push_back(rest);
  std::vector<std::pair<mpz_class, unsigned>> big;
  while (!stack.empty()) {
    mpz_class v = stack.back();
    stack.pop_back();
    if (fits_u64(v)) {
      for (auto [p, e] : factorize_u64(to_u64(v))) big.emplace_back(mpz_class(std::to_string(p)), e);
      continue;
    }
    if (is_prime(v)) {
      big.emplace_back(v, 1);
      continue;
    }
    // Pollard rho on mpz
    mpz_class x = 2, y = 2, d = 1, c = 1;
    while (d == 1 || d == v) {
      x = (x * x + c) % v;
      y = (y * y + c) % v;
      y = (y * y + c) % v;
      mpz_class diff = x > y ? x - y : y - x;
      if (diff == 0) {
        c += 1;
        x = y = 2;
        d = 1;
        continue;
      }
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), v.get_mpz_t());
    }
    stack.push_back(d);
    stack.push_back(v / d);
  }
  std::sort(big.begin(), big.end());
  for (auto& [p, e] : big) {
    if (!fact.factors.empty() && fact.factors.back().first == p)
      fact.factors.back().second += e;
    else
      fact.factors.emplace_back(p, e);
  }
  std::sort(fact.factors.begin(), fact.factors.end());
  return fact;
}

long p_adic_valuation(const mpz_class& x, std::uint64_t p) {
  if (x == 0) return kValuationInfinity;
  mpz_class a = abs(x);
  if (fits_u64(a)) return p_adic_valuation_u64(to_u64(a), p);
  long e = 0;
  while (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
    mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), p);
    ++e;
  }
  return e;
}

long p_adic_valuation_u64(std::uint64_t x, std::uint64_t p) {
  if (x == 0) return kValuationInfinity;
  long e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return e;
}

std::uint64_t valuation_of_factorial(std::uint64_t n, std::uint64_t p) {
  std::uint64_t total = 0;
  while (n) {
    n /= p;
    total += n;
  }
  return total;
}

std::uint64_t valuation_of_binomial(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b > a) throw std::domain_error("valuation_of_binomial requires a >= b");
  return valuation_of_factorial(a, p) - valuation_of_factorial(b, p) -
         valuation_of_factorial(a - b, p);
}

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class r;
  if (k > n) return r;  // 0 by convention
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

std::uint64_t gpf(std::uint64_t m) {
  if (m < 2) throw std::domain_error("gpf requires m >= 2");
  auto fs = factorize_u64(m);
  return fs.back().first;
}

std::uint64_t gpf_falling_factorial(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || n < k) throw std::domain_error("gpf_falling_factorial requires n >= k >= 1");
  std::uint64_t best = 0;
  for (std::uint64_t t = n - k + 1; t <= n; ++t) {
    if (t < 2) continue;
    best = std::max(best, gpf(t));
  }
  if (best == 0) throw std::domain_error("window contains no integer >= 2");
  return best;
}

std::uint64_t gpf_arith_progression(std::uint64_t n, std::uint64_t k) {
  if (n < 2 || k < 1) throw std::domain_error("gpf_arith_progression requires n >= 2, k >= 1");
  std::uint64_t best = 0;
  for (std::uint64_t i = 0; i < k; ++i) best = std::max(best, gpf(n + 2 * i));
  return best;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize_u64(m)) out.push_back(p);
  return out;
}

std::uint64_t prime_pi(std::uint64_t x) {
  const auto& primes = small_primes();
  if (x > kSieveLimit) throw std::domain_error("prime_pi bounded by the shared sieve (10^6)");
  auto it = std::upper_bound(primes.begin(), primes.end(), x);
  return static_cast<std::uint64_t>(it - primes.begin());
}

}  // namespace lagnp::arith
