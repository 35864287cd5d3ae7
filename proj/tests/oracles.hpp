#pragma once

// Test-only oracles, deliberately written along different lines than the
// library code they check: trial division, Pascal's triangle, repeated
// division, and a definition-level polygon validator.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "lagnp/newton.hpp"

namespace oracles {

inline std::vector<std::uint64_t> primes_by_trial_division(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 2; m <= limit; ++m) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(m);
  }
  return out;
}

inline bool is_prime_by_trial_division(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

// Rows 0..n_max of Pascal's triangle.
class PascalTriangle {
 public:
  explicit PascalTriangle(std::size_t n_max) {
    rows_.resize(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
      rows_[n].resize(n + 1);
      rows_[n][0] = rows_[n][n] = 1;
      for (std::size_t k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
  }
  const mpz_class& at(std::size_t n, std::size_t k) const { return rows_[n][k]; }

 private:
  std::vector<std::vector<mpz_class>> rows_;
};

inline long valuation_by_division(mpz_class x, std::uint64_t p) {
  x = abs(x);
  long e = 0;
  while (x != 0 && mpz_divisible_ui_p(x.get_mpz_t(), p)) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
    ++e;
  }
  return e;
}

inline std::uint64_t gpf_by_trial_division(std::uint64_t m) {
  std::uint64_t best = 0;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    while (m % d == 0) {
      m /= d;
      best = d;
    }
  return m > 1 ? m : best;
}

// Checks that a polygon satisfies the defining properties of the lower
// convex hull of the given points: endpoints pinned, vertices drawn from the
// points, slopes strictly increasing, every point on or above the path, and
// every interior vertex strictly below the chord of its neighbors.
inline bool is_lower_hull_of(const lagnp::newton::NewtonPolygon& np,
                             const std::vector<lagnp::newton::Point>& pts) {
  const auto& v = np.vertices;
  if (v.size() < 2) return false;
  if (v.front() != pts.front() || v.back() != pts.back()) return false;
  for (const auto& vert : v) {
    bool found = false;
    for (const auto& p : pts) found = found || p == vert;
    if (!found) return false;
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i].x >= v[i + 1].x) return false;
  for (std::size_t i = 0; i + 2 < v.size(); ++i) {
    // slope(v[i], v[i+1]) < slope(v[i+1], v[i+2]), exactly
    const __int128 lhs = static_cast<__int128>(v[i + 1].y - v[i].y) * (v[i + 2].x - v[i + 1].x);
    const __int128 rhs = static_cast<__int128>(v[i + 2].y - v[i + 1].y) * (v[i + 1].x - v[i].x);
    if (lhs >= rhs) return false;
  }
  for (const auto& p : pts)
    if (!lagnp::newton::on_or_above(np, p.x, p.y)) return false;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const auto& a = v[i - 1];
    const auto& b = v[i + 1];
    const __int128 lhs = static_cast<__int128>(v[i].y - a.y) * (b.x - a.x);
    const __int128 rhs = static_cast<__int128>(v[i].x - a.x) * (b.y - a.y);
    if (lhs >= rhs) return false;  // vertex must lie strictly below the chord
  }
  return true;
}

}  // namespace oracles
