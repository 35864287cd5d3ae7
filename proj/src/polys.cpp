#include "lagnp/polys.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "lagnp/arith.hpp"

namespace lagnp::polys {

mpz_class coeff_a(const LaguerreInstance& inst, std::uint64_t j) {
  if (j > inst.n) throw std::domain_error("coeff_a index out of range");
  return arith::binomial(inst.n + inst.s - j, inst.n - j);
}

IntegerPolynomial g1_coefficients(const LaguerreInstance& inst) {
  if (inst.n < 1) throw std::domain_error("instance degree must be >= 1");
  if (inst.n > kMaxMaterializedDegree)
    throw std::domain_error("degree too large to materialize exact coefficients");
  IntegerPolynomial poly;
  poly.coeffs.resize(inst.n + 1);
  mpz_class falling = 1;  // n!/j! for the current j
  for (std::uint64_t j = inst.n;; --j) {
    poly.coeffs[j] = falling * coeff_a(inst, j);
    if (j == 0) break;
    falling *= j;
  }
  return poly;
}

IntegerPolynomial perturb(const IntegerPolynomial& g1, const PerturbationVector& b) {
  if (b.b.size() != g1.coeffs.size())
    throw std::invalid_argument("perturbation vector length mismatch");
  if (b.b.front() != 1 && b.b.front() != -1)
    throw std::invalid_argument("perturbation requires |b_0| = 1");
  if (b.b.back() != 1 && b.b.back() != -1)
    throw std::invalid_argument("perturbation requires |b_n| = 1");
  IntegerPolynomial out;
  out.coeffs.resize(g1.coeffs.size());
  for (std::size_t j = 0; j < g1.coeffs.size(); ++j)
    out.coeffs[j] = g1.coeffs[j] * static_cast<long>(b.b[j]);
  return out;
}

long g1_coeff_valuation(const LaguerreInstance& inst, std::uint64_t j, std::uint64_t p) {
  if (j > inst.n) throw std::domain_error("coefficient index out of range");
  const std::uint64_t n = inst.n, s = inst.s;
  // nu_p(n!/j!) + nu_p(C(n+s-j, n-j))
  const std::uint64_t tail = arith::valuation_of_factorial(n, p) - arith::valuation_of_factorial(j, p);
  return static_cast<long>(tail + arith::valuation_of_binomial(n + s - j, n - j, p));
}

std::vector<long> g1_valuation_profile(const LaguerreInstance& inst, std::uint64_t p) {
  if (inst.n > 100'000'000)
    throw std::domain_error("valuation profile would not fit in memory");
  std::vector<long> vals(inst.n + 1);
  for (std::uint64_t j = 0; j <= inst.n; ++j) vals[j] = g1_coeff_valuation(inst, j, p);
  return vals;
}

namespace {

mpz_class eval(const IntegerPolynomial& f, long x) {
  mpz_class acc = 0;
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<mpz_class> divisors_of(const mpz_class& v) {
  std::vector<mpz_class> divs{1};
  if (v == 1) return divs;
  const auto fact = arith::factorize(v);
  for (const auto& [p, e] : fact.factors) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t d = 0; d < base; ++d) divs.push_back(divs[d] * pk);
    }
  }
  return divs;
}

// Remainder of f divided by monic g; true if the division is exact.
bool divides_exactly(const IntegerPolynomial& f, const std::vector<mpz_class>& g) {
  std::vector<mpz_class> rem = f.coeffs;
  const std::size_t dg = g.size() - 1;
  while (rem.size() >= g.size()) {
    const mpz_class lead = rem.back();
    const std::size_t shift = rem.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) rem[shift + i] -= lead * g[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.size() > shift + dg) return false;  // leading term did not cancel
  }
  return rem.empty();
}

struct EvalPoint {
  long x;
  mpz_class value;
  std::vector<mpz_class> divisors;
};

}  // namespace

FactorSearchResult kronecker_factor_oracle(const IntegerPolynomial& poly, unsigned max_degree) {
  FactorSearchResult result;
  const std::uint64_t n = poly.degree();
  if (n > kOracleMaxPolyDegree || max_degree > kOracleMaxFactorDegree) return result;  // not applicable
  result.applicable = true;
  if (n < 1) return result;

  static constexpr std::array<long, 17> kPool = {0, 1, -1, 2, -2, 3, -3, 4, -4,
                                                 5, -5, 6, -6, 7, -7, 8, -8};
  std::vector<EvalPoint> points;
  std::vector<long> integer_roots;
  for (long x : kPool) {
    mpz_class v = eval(poly, x);
    if (v == 0) {
      integer_roots.push_back(x);
      continue;
    }
    EvalPoint pt;
    pt.x = x;
    pt.value = abs(v);
    points.push_back(std::move(pt));
  }
  for (auto& pt : points) pt.divisors = divisors_of(pt.value);
  std::sort(points.begin(), points.end(),
            [](const EvalPoint& a, const EvalPoint& b) { return a.divisors.size() < b.divisors.size(); });

  auto push_unique = [&](std::vector<mpz_class> g) {
    IntegerPolynomial cand;
    cand.coeffs = std::move(g);
    for (const auto& f : result.factors)
      if (f.coeffs == cand.coeffs) return;
    result.factors.push_back(std::move(cand));
  };

  const unsigned top = static_cast<unsigned>(std::min<std::uint64_t>(max_degree, n - 1));
  for (long r : integer_roots)
    if (top >= 1) push_unique({mpz_class(-r), mpz_class(1)});

  for (unsigned d = 1; d <= top; ++d) {
    if (points.size() < d) continue;
    std::uint64_t combos = 1;
    bool feasible = true;
    for (unsigned i = 0; i < d; ++i) {
      combos *= 2 * points[i].divisors.size();
      if (combos > kOracleCombinationBudget) {
        feasible = false;
        break;
      }
    }
    if (!feasible) {
      result.applicable = false;
      return result;
    }

    std::vector<const EvalPoint*> pts;
    for (unsigned i = 0; i < d; ++i) pts.push_back(&points[i]);

    // Candidate values v_i = +-divisor at each chosen point; the monic factor
    // is N(x) + q(x) with N = prod (x - x_i) and q interpolating v_i.
    std::vector<std::size_t> idx(d, 0);
    std::vector<int> sign(d, 0);  // 0 -> +, 1 -> -
    while (true) {
      std::vector<mpz_class> v(d);
      for (unsigned i = 0; i < d; ++i) {
        v[i] = pts[i]->divisors[idx[i]];
        if (sign[i]) v[i] = -v[i];
      }
      // Build q by Lagrange over the d points with exact rational arithmetic.
      bool integral = true;
      std::vector<mpz_class> g(d + 1, mpz_class(0));
      g[d] = 1;
      {
        std::vector<mpq_class> q(d, mpq_class(0));
        for (unsigned i = 0; i < d && integral; ++i) {
          mpq_class scale(v[i]);
          std::vector<mpq_class> basis{mpq_class(1)};
          for (unsigned j = 0; j < d; ++j) {
            if (j == i) continue;
            const long xi = pts[i]->x, xj = pts[j]->x;
            scale /= (xi - xj);
            std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
            for (std::size_t t = 0; t < basis.size(); ++t) {
              next[t] += basis[t] * (-xj);
              next[t + 1] += basis[t];
            }
            basis = std::move(next);
          }
          for (std::size_t t = 0; t < basis.size(); ++t) q[t] += scale * basis[t];
        }
        // N(x) = prod (x - x_i)
        std::vector<mpz_class> N{1};
        for (unsigned i = 0; i < d; ++i) {
          std::vector<mpz_class> next(N.size() + 1, mpz_class(0));
          for (std::size_t t = 0; t < N.size(); ++t) {
            next[t] += N[t] * mpz_class(-pts[i]->x);
            next[t + 1] += N[t];
          }
          N = std::move(next);
        }
        for (unsigned t = 0; t < d && integral; ++t) {
          mpq_class total = q[t];
          total.canonicalize();
          if (total.get_den() != 1) {
            integral = false;
            break;
          }
          g[t] = total.get_num() + N[t];
        }
        if (integral)
          g[d] = N[d];  // = 1
      }
      if (integral && divides_exactly(poly, g)) push_unique(g);

      // advance the odometer over (divisor index, sign) pairs
      unsigned pos = 0;
      while (pos < d) {
        if (sign[pos] == 0) {
          sign[pos] = 1;
          break;
        }
        sign[pos] = 0;
        if (++idx[pos] < pts[pos]->divisors.size()) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == d) break;
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const IntegerPolynomial& a, const IntegerPolynomial& b) {
              if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
              return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                                  b.coeffs.end());
            });
  return result;
}

}  // namespace lagnp::polys
