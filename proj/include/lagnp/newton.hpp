#pragma once

#include <cstdint>
#include <vector>

#include "lagnp/polys.hpp"
#include "lagnp/rational.hpp"

// Newton polygons with respect to a prime, Dumas achievable-degree sets,
// Filaseta's exclusion test and the perturbation-closed Dumas exclusion.
// The polygon convention follows the classical definition: the point with
// x = i carries the valuation of the coefficient of x^(n-i), so x = 0 is
// the leading coefficient and x = n the constant term.
namespace lagnp::newton {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct Edge {
  Point a;
  Point b;
  Rational slope() const { return Rational(b.y - a.y, b.x - a.x); }
};

struct NewtonPolygon {
  std::uint64_t prime = 2;
  std::uint64_t degree = 0;
  std::vector<Point> vertices;  // x strictly increasing, slopes strictly increasing
  std::vector<Edge> edges() const;
};

// Lower convex hull of the valuation points of an exact polynomial. Requires
// nonzero constant and leading coefficients; interior zero coefficients are
// treated as +infinity and dropped from the hull input.
NewtonPolygon newton_polygon(const polys::IntegerPolynomial& poly, std::uint64_t p);
// Same polygon computed from Legendre-sum valuations, no big integers.
NewtonPolygon newton_polygon(const polys::LaguerreInstance& inst, std::uint64_t p);
// Hull construction over explicit points (exposed for tests and perturbation
// case analysis). Points must be sorted by x with distinct x.
NewtonPolygon polygon_from_points(const std::vector<Point>& pts, std::uint64_t p,
                                  std::uint64_t degree);

// Integer points strictly between the endpoints; count = gcd(dx, |dy|) - 1.
std::vector<Point> edge_lattice_points(const Edge& e);

// Achievable factor degrees under Dumas' theorem: subset sums of the minimal
// lattice segments of every edge. A factor of degree k is impossible when k
// is absent.
class DegreeSet {
 public:
  explicit DegreeSet(std::uint64_t n);
  void add(std::uint64_t d);
  bool contains(std::uint64_t d) const;
  std::uint64_t degree_bound() const { return n_; }
  std::vector<std::uint64_t> to_list() const;

  // shifted OR: this |= this << len
  void fold_segment(std::uint64_t len);

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> words_;
};

DegreeSet dumas_degree_set(const NewtonPolygon& np);

// Filaseta's lemma for h = g_1(inst): true certifies that no unit-endpoint
// perturbation has a factor with degree in [l+1, k]. Requires k > l >= 0.
bool filaseta_excludes(const polys::LaguerreInstance& inst, std::uint64_t p, std::uint64_t k,
                       std::uint64_t l);

enum class RobustVerdict { Excluded, NotExcluded, Inconclusive };

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000;

// True exclusion over every Newton polygon reachable by a perturbation:
// interior valuation points may only move up, endpoints are pinned. Case
// polygons are enumerated by raising on-hull points up to the least height
// that clears the hull of the remaining points, recursing to a fixpoint.
RobustVerdict robust_dumas_excludes(const polys::LaguerreInstance& inst, std::uint64_t p,
                                    std::uint64_t k,
                                    std::uint64_t node_budget = kDefaultNodeBudget);

// The distinct case polygons visited by the enumeration (test hook).
std::vector<NewtonPolygon> robust_case_polygons(const polys::LaguerreInstance& inst,
                                                std::uint64_t p,
                                                std::uint64_t node_budget = kDefaultNodeBudget);

// Piecewise-linear hull height comparison: is (x, y) on/above the polygon?
bool on_or_above(const NewtonPolygon& np, std::int64_t x, std::int64_t y);
bool on_polygon(const NewtonPolygon& np, std::int64_t x, std::int64_t y);

}  // namespace lagnp::newton
