#include "lagnp/newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lagnp/arith.hpp"

namespace lagnp::newton {

namespace {

// cross((b - a) x (c - a)); <= 0 means c is not strictly left of a->b,
// i.e. keeping b would break strict lower convexity.
__int128 cross(const Point& a, const Point& b, const Point& c) {
  return static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
         static_cast<__int128>(b.y - a.y) * (c.x - a.x);
}

std::vector<Point> lower_hull(const std::vector<Point>& pts) {
  std::vector<Point> hull;
  for (const Point& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

std::vector<Point> instance_points(const polys::LaguerreInstance& inst, std::uint64_t p) {
  if (inst.n > 100'000'000)
    throw std::domain_error("polygon point set would not fit in memory");
  std::vector<Point> pts(inst.n + 1);
  for (std::uint64_t i = 0; i <= inst.n; ++i)
    pts[i] = {static_cast<std::int64_t>(i), polys::g1_coeff_valuation(inst, inst.n - i, p)};
  return pts;
}

}  // namespace

std::vector<Edge> NewtonPolygon::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.push_back({vertices[i], vertices[i + 1]});
  return out;
}

NewtonPolygon polygon_from_points(const std::vector<Point>& pts, std::uint64_t p,
                                  std::uint64_t degree) {
  if (pts.size() < 2) throw std::domain_error("polygon needs at least two points");
  NewtonPolygon np;
  np.prime = p;
  np.degree = degree;
  np.vertices = lower_hull(pts);
  return np;
}

NewtonPolygon newton_polygon(const polys::IntegerPolynomial& poly, std::uint64_t p) {
  const std::uint64_t n = poly.degree();
  if (n < 1) throw std::domain_error("polygon requires degree >= 1");
  if (poly.coeffs[0] == 0) throw std::domain_error("constant term vanishes");
  if (poly.coeffs[n] == 0) throw std::domain_error("leading term vanishes");
  std::vector<Point> pts;
  pts.reserve(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) {
    const mpz_class& c = poly.coeffs[n - i];
    if (c == 0) continue;  // +infinity, never on the lower hull
    pts.push_back({static_cast<std::int64_t>(i), arith::p_adic_valuation(c, p)});
  }
  return polygon_from_points(pts, p, n);
}

NewtonPolygon newton_polygon(const polys::LaguerreInstance& inst, std::uint64_t p) {
  return polygon_from_points(instance_points(inst, p), p, inst.n);
}

std::vector<Point> edge_lattice_points(const Edge& e) {
  const std::int64_t dx = e.b.x - e.a.x;
  const std::int64_t dy = e.b.y - e.a.y;
  if (dx <= 0) throw std::domain_error("edge must have positive run");
  const std::int64_t g = std::gcd(dx, dy < 0 ? -dy : dy);
  std::vector<Point> out;
  for (std::int64_t t = 1; t < g; ++t) out.push_back({e.a.x + t * dx / g, e.a.y + t * dy / g});
  return out;
}

DegreeSet::DegreeSet(std::uint64_t n) : n_(n), words_(n / 64 + 1, 0) {}

void DegreeSet::add(std::uint64_t d) {
  if (d > n_) return;
  words_[d / 64] |= std::uint64_t{1} << (d % 64);
}

bool DegreeSet::contains(std::uint64_t d) const {
  if (d > n_) return false;
  return (words_[d / 64] >> (d % 64)) & 1;
}

void DegreeSet::fold_segment(std::uint64_t len) {
  const std::size_t word_shift = len / 64;
  const unsigned bit_shift = len % 64;
  for (std::size_t i = words_.size(); i-- > 0;) {
    std::uint64_t v = 0;
    if (i >= word_shift) {
      v = words_[i - word_shift] << bit_shift;
      if (bit_shift && i > word_shift) v |= words_[i - word_shift - 1] >> (64 - bit_shift);
    }
    words_[i] |= v;
  }
  // mask tail bits beyond n_
  const unsigned tail = static_cast<unsigned>(n_ % 64);
  words_.back() &= tail == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (tail + 1)) - 1);
}

std::vector<std::uint64_t> DegreeSet::to_list() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 0; d <= n_; ++d)
    if (contains(d)) out.push_back(d);
  return out;
}

DegreeSet dumas_degree_set(const NewtonPolygon& np) {
  DegreeSet set(np.degree);
  set.add(0);
  for (const Edge& e : np.edges()) {
    const std::int64_t dx = e.b.x - e.a.x;
    const std::int64_t dy = e.b.y - e.a.y;
    const std::int64_t g = std::gcd(dx, dy < 0 ? -dy : dy);
    const std::uint64_t seg = static_cast<std::uint64_t>(dx / g);
    for (std::int64_t rep = 0; rep < g; ++rep) set.fold_segment(seg);
  }
  return set;
}

bool filaseta_excludes(const polys::LaguerreInstance& inst, std::uint64_t p, std::uint64_t k,
                       std::uint64_t l) {
  if (k <= l) throw std::domain_error("filaseta requires k > l >= 0");
  const std::uint64_t n = inst.n, s = inst.s;
  // (i) p does not divide the leading coefficient (c_n = 1 for g_1).
  if (polys::g1_coeff_valuation(inst, n, p) != 0) return false;
  // (ii) p | c_j for all j in [0, n-l-1]. Divisibility is automatic whenever
  // (j, n] contains a multiple of p, so only j at or past the last multiple
  // need an explicit binomial-valuation check.
  const std::uint64_t lo = p <= n ? p * (n / p) : 0;
  if (l + 1 <= n) {
    for (std::uint64_t j = lo; j <= n - l - 1; ++j)
      if (arith::valuation_of_binomial(n + s - j, n - j, p) == 0) return false;
  }
  // (iii) rightmost edge slope < 1/k, i.e. k (nu(c_0) - nu(c_j)) < j for all j.
  const long v0 = polys::g1_coeff_valuation(inst, 0, p);
  for (std::uint64_t j = 1; j <= n; ++j) {
    const long vj = polys::g1_coeff_valuation(inst, j, p);
    if (static_cast<long>(k) * (v0 - vj) >= static_cast<long>(j)) return false;
  }
  return true;
}

namespace {

struct HullView {
  const std::vector<Point>& verts;
  // height comparison at integer x against y: -1 below, 0 on, 1 above
  int side(std::int64_t x, std::int64_t y) const {
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
      const Point& a = verts[i];
      const Point& b = verts[i + 1];
      if (x < a.x || x > b.x) continue;
      const __int128 lhs = static_cast<__int128>(y - a.y) * (b.x - a.x);
      const __int128 rhs = static_cast<__int128>(x - a.x) * (b.y - a.y);
      if (lhs < rhs) return -1;
      return lhs == rhs ? 0 : 1;
    }
    return 1;
  }
};

struct CaseEnumeration {
  std::vector<std::vector<Point>> hulls;
  bool budget_exhausted = false;
};

CaseEnumeration enumerate_cases(std::vector<std::int64_t> base_heights, std::uint64_t budget) {
  CaseEnumeration result;
  const std::size_t m = base_heights.size();
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> stack{std::move(base_heights)};
  std::uint64_t nodes = 0;
  while (!stack.empty()) {
    std::vector<std::int64_t> hs = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(hs).second) continue;
    if (++nodes > budget) {
      result.budget_exhausted = true;
      return result;
    }
    std::vector<Point> pts(m);
    for (std::size_t i = 0; i < m; ++i) pts[i] = {static_cast<std::int64_t>(i), hs[i]};
    std::vector<Point> hull = lower_hull(pts);
    HullView view{hull};

    for (std::size_t i = 1; i + 1 < m; ++i) {
      if (view.side(static_cast<std::int64_t>(i), hs[i]) != 0) continue;
      // hull of the remaining points decides how far a raise can matter
      std::vector<Point> others;
      others.reserve(m - 1);
      for (std::size_t jj = 0; jj < m; ++jj)
        if (jj != i) others.push_back(pts[jj]);
      std::vector<Point> other_hull = lower_hull(others);
      HullView oview{other_hull};
      std::int64_t cap = 1;
      while (oview.side(static_cast<std::int64_t>(i), hs[i] + cap) < 0) ++cap;
      for (std::int64_t delta = 1; delta <= cap; ++delta) {
        std::vector<std::int64_t> next = hs;
        next[i] += delta;
        if (!seen.contains(next)) stack.push_back(std::move(next));
      }
    }
    result.hulls.push_back(std::move(hull));
  }
  return result;
}

}  // namespace

RobustVerdict robust_dumas_excludes(const polys::LaguerreInstance& inst, std::uint64_t p,
                                    std::uint64_t k, std::uint64_t node_budget) {
  const auto pts = instance_points(inst, p);
  std::vector<std::int64_t> heights(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) heights[i] = pts[i].y;
  const CaseEnumeration cases = enumerate_cases(std::move(heights), node_budget);
  if (cases.budget_exhausted) return RobustVerdict::Inconclusive;
  for (const auto& hull : cases.hulls) {
    NewtonPolygon np;
    np.prime = p;
    np.degree = inst.n;
    np.vertices = hull;
    if (dumas_degree_set(np).contains(k)) return RobustVerdict::NotExcluded;
  }
  return RobustVerdict::Excluded;
}

std::vector<NewtonPolygon> robust_case_polygons(const polys::LaguerreInstance& inst,
                                                std::uint64_t p, std::uint64_t node_budget) {
  const auto pts = instance_points(inst, p);
  std::vector<std::int64_t> heights(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) heights[i] = pts[i].y;
  const CaseEnumeration cases = enumerate_cases(std::move(heights), node_budget);
  std::vector<NewtonPolygon> out;
  std::set<std::vector<Point>> distinct;
  for (const auto& hull : cases.hulls) {
    if (!distinct.insert(hull).second) continue;
    NewtonPolygon np;
    np.prime = p;
    np.degree = inst.n;
    np.vertices = hull;
    out.push_back(std::move(np));
  }
  return out;
}

bool on_or_above(const NewtonPolygon& np, std::int64_t x, std::int64_t y) {
  return HullView{np.vertices}.side(x, y) >= 0;
}

bool on_polygon(const NewtonPolygon& np, std::int64_t x, std::int64_t y) {
  return HullView{np.vertices}.side(x, y) == 0;
}

}  // namespace lagnp::newton
