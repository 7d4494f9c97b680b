#pragma once

// Rational polytopes in low dimension: hulls, box feasibility with strict faces,
// realizable floor/ceiling lattice vectors and the min-max ratio linear program.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fourier_motzkin.hpp"
#include "rational.hpp"

namespace detideals {

// Upper limit on the number of box-feasibility probes a single lattice scan may issue.
// IT_GUARD_CELLS in the environment overrides it.
inline std::int64_t default_guard_cells() {
  if (const char* env = std::getenv("IT_GUARD_CELLS")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}

class RationalPolytope {
 public:
  std::size_t dim() const { return dim_; }
  const std::vector<QVector>& vertices() const { return vertices_; }
  // Affine-hull equations (empty when full-dimensional).
  const std::vector<fm::Constraint>& equalities() const { return equalities_; }
  // Irredundant facet inequalities <n, a> >= c relative to the affine hull.
  const std::vector<fm::Constraint>& facets() const { return facets_; }

  std::vector<fm::Constraint> h_representation() const {
    std::vector<fm::Constraint> out = equalities_;
    out.insert(out.end(), facets_.begin(), facets_.end());
    return out;
  }

  bool contains(const QVector& x) const {
    if (x.size() != dim_) return false;
    for (const auto& c : equalities_)
      if (!c.satisfied_by(x)) return false;
    for (const auto& c : facets_)
      if (!c.satisfied_by(x)) return false;
    return true;
  }

  // Componentwise min/max over the vertices.
  Rational coord_min(std::size_t i) const {
    Rational m = vertices_.front()[i];
    for (const auto& v : vertices_) m = std::min(m, v[i]);
    return m;
  }
  Rational coord_max(std::size_t i) const {
    Rational m = vertices_.front()[i];
    for (const auto& v : vertices_) m = std::max(m, v[i]);
    return m;
  }

  // s * P.
  RationalPolytope scaled(const Rational& s) const;

  friend RationalPolytope hull(std::vector<QVector> points);

 private:
  std::size_t dim_ = 0;
  std::vector<QVector> vertices_;
  std::vector<fm::Constraint> equalities_;
  std::vector<fm::Constraint> facets_;
};

namespace detail {

// {a : a = sum_j mu_j v_j, mu >= 0, sum mu = 1} over variables (a_0..a_{k-1}, mu_0..mu_{n-1}).
inline std::vector<fm::Constraint> barycentric_system(const std::vector<QVector>& pts, std::size_t k) {
  const std::size_t n = pts.size(), total = k + n;
  std::vector<fm::Constraint> cs;
  for (std::size_t i = 0; i < k; ++i) {
    QVector c(total, 0);
    c[i] = 1;
    for (std::size_t j = 0; j < n; ++j) c[k + j] = -pts[j][i];
    cs.push_back(fm::eq(std::move(c), 0));
  }
  QVector sum(total, 0);
  for (std::size_t j = 0; j < n; ++j) sum[k + j] = 1;
  cs.push_back(fm::eq(std::move(sum), 1));
  for (std::size_t j = 0; j < n; ++j) cs.push_back(fm::lower_bound(total, k + j, 0, false));
  return cs;
}

inline bool in_convex_hull(const QVector& x, const std::vector<QVector>& pts) {
  if (pts.empty()) return false;
  const std::size_t k = x.size();
  auto cs = barycentric_system(pts, k);
  const std::size_t total = k + pts.size();
  for (std::size_t i = 0; i < k; ++i) {
    QVector c(total, 0);
    c[i] = 1;
    cs.push_back(fm::eq(std::move(c), x[i]));
  }
  return fm::feasible(std::move(cs), total);
}

}  // namespace detail

// Convex hull of a finite point set: extreme points plus a derived H-representation.
inline RationalPolytope hull(std::vector<QVector> points) {
  if (points.empty()) throw DomainError("hull of an empty point set");
  const std::size_t k = points.front().size();
  for (const auto& p : points)
    if (p.size() != k) throw DomainError("hull: points of mixed dimension");

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<QVector> extreme;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<QVector> others;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (!detail::in_convex_hull(points[i], others)) extreme.push_back(points[i]);
  }

  RationalPolytope P;
  P.dim_ = k;
  P.vertices_ = extreme;
  auto projected = fm::project(detail::barycentric_system(extreme, k), k + extreme.size(), k);
  if (!projected) throw ConsistencyError("hull: projection of a nonempty hull is infeasible");
  auto rows = fm::remove_redundant(std::move(*projected), k);
  for (auto& r : rows) (r.rel == fm::Relation::Equal ? P.equalities_ : P.facets_).push_back(std::move(r));
  return P;
}

inline RationalPolytope RationalPolytope::scaled(const Rational& s) const {
  std::vector<QVector> pts = vertices_;
  for (auto& v : pts)
    for (auto& x : v) x *= s;
  return hull(std::move(pts));
}

// Per-coordinate constraints. Each side is optional and independently strict.
struct BoxQuery {
  struct Side {
    Rational value;
    bool strict = false;
  };
  struct Range {
    std::optional<Side> lower, upper;
  };
  std::vector<Range> ranges;

  explicit BoxQuery(std::size_t dim) : ranges(dim) {}

  BoxQuery& at_least(std::size_t i, Rational v) { return set_lower(i, std::move(v), false); }
  BoxQuery& greater_than(std::size_t i, Rational v) { return set_lower(i, std::move(v), true); }
  BoxQuery& at_most(std::size_t i, Rational v) { return set_upper(i, std::move(v), false); }
  BoxQuery& less_than(std::size_t i, Rational v) { return set_upper(i, std::move(v), true); }

  std::vector<fm::Constraint> constraints() const {
    std::vector<fm::Constraint> cs;
    const std::size_t d = ranges.size();
    for (std::size_t i = 0; i < d; ++i) {
      if (ranges[i].lower) cs.push_back(fm::lower_bound(d, i, ranges[i].lower->value, ranges[i].lower->strict));
      if (ranges[i].upper) cs.push_back(fm::upper_bound(d, i, ranges[i].upper->value, ranges[i].upper->strict));
    }
    return cs;
  }

 private:
  BoxQuery& set_lower(std::size_t i, Rational v, bool strict) {
    check(i, v, ranges[i].upper, true);
    ranges[i].lower = Side{std::move(v), strict};
    return *this;
  }
  BoxQuery& set_upper(std::size_t i, Rational v, bool strict) {
    check(i, v, ranges[i].lower, false);
    ranges[i].upper = Side{std::move(v), strict};
    return *this;
  }
  void check(std::size_t i, const Rational& v, const std::optional<Side>& other, bool is_lower) const {
    if (i >= ranges.size()) throw DomainError("box coordinate out of range");
    if (other && (is_lower ? v > other->value : v < other->value))
      throw DomainError("box lower bound exceeds upper bound");
  }
};

// A point of P satisfying every box constraint, or nullopt.
inline std::optional<QVector> feasible(const RationalPolytope& P, const BoxQuery& q) {
  if (q.ranges.size() != P.dim()) throw DomainError("feasible: dimension mismatch");
  auto cs = P.h_representation();
  auto box = q.constraints();
  cs.insert(cs.end(), box.begin(), box.end());
  return fm::solve(std::move(cs), P.dim());
}

namespace detail {

enum class Rounding { Floor, Ceil };

// Depth-first scan of the integer bounding box of scale * P. A prefix (v_0..v_{i-1}) is
// only extended while P meets the corresponding half-open slab, so unrealizable
// branches are cut early. `collapse_below[i]`, when set, merges every value below it into
// the single class collapse_below[i] - 1.
inline std::set<IntVector> scan_rounded(const RationalPolytope& P, const Rational& scale, Rounding mode,
                                        const std::vector<std::optional<std::int64_t>>& collapse_below,
                                        std::int64_t guard) {
  const std::size_t k = P.dim();
  std::vector<std::int64_t> lo(k), hi(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Rational a = scale * P.coord_min(i), b = scale * P.coord_max(i);
    lo[i] = mode == Rounding::Floor ? floor_int(a) : ceil_int(a);
    hi[i] = mode == Rounding::Floor ? floor_int(b) : ceil_int(b);
  }

  std::int64_t probes = 0;
  std::set<IntVector> out;
  IntVector current(k);
  std::vector<fm::Constraint> base = P.h_representation();

  auto rec = [&](auto& self, std::size_t i, std::vector<fm::Constraint>& cs) -> void {
    if (i == k) {
      out.insert(current);
      return;
    }
    struct Slab {
      std::int64_t label;
      std::optional<Rational> lower, upper;
      bool lower_strict, upper_strict;
    };
    std::vector<Slab> slabs;
    std::int64_t start = lo[i];
    if (collapse_below[i] && *collapse_below[i] > lo[i]) {
      const std::int64_t c = *collapse_below[i];
      // every value < c: floor: scale*a < c ; ceil: scale*a <= c - 1
      if (mode == Rounding::Floor) slabs.push_back({c - 1, std::nullopt, Rational(c), false, true});
      else slabs.push_back({c - 1, std::nullopt, Rational(c - 1), false, false});
      start = c;
    }
    for (std::int64_t v = start; v <= hi[i]; ++v) {
      if (mode == Rounding::Floor) slabs.push_back({v, Rational(v), Rational(v + 1), false, true});
      else slabs.push_back({v, Rational(v - 1), Rational(v), true, false});
    }
    for (const auto& s : slabs) {
      if (++probes > guard)
        throw GuardError("lattice scan exceeded " + std::to_string(guard) + " feasibility probes");
      const std::size_t mark = cs.size();
      if (s.lower) cs.push_back(fm::lower_bound(k, i, *s.lower / scale, s.lower_strict));
      if (s.upper) cs.push_back(fm::upper_bound(k, i, *s.upper / scale, s.upper_strict));
      if (fm::feasible(cs, k)) {
        current[i] = s.label;
        self(self, i + 1, cs);
      }
      cs.resize(mark);
    }
  };
  rec(rec, 0, base);
  return out;
}

}  // namespace detail

// {floor(lambda * a) : a in P}.
inline std::set<IntVector> floor_vectors(const RationalPolytope& P, const Rational& lambda,
                                         std::int64_t guard = default_guard_cells()) {
  if (lambda <= 0) throw DomainError("floor_vectors: lambda must be positive");
  return detail::scan_rounded(P, lambda, detail::Rounding::Floor,
                              std::vector<std::optional<std::int64_t>>(P.dim()), guard);
}

// Like floor_vectors, but coordinates whose floor is below threshold[i] are reported as
// threshold[i] - 1. Test ideals only distinguish floors at or above the prime heights.
inline std::set<IntVector> floor_vectors_clamped(const RationalPolytope& P, const Rational& lambda,
                                                 const std::vector<std::int64_t>& threshold,
                                                 std::int64_t guard = default_guard_cells()) {
  if (lambda <= 0) throw DomainError("floor_vectors: lambda must be positive");
  if (threshold.size() != P.dim()) throw DomainError("floor_vectors: threshold dimension mismatch");
  std::vector<std::optional<std::int64_t>> collapse(threshold.begin(), threshold.end());
  return detail::scan_rounded(P, lambda, detail::Rounding::Floor, collapse, guard);
}

// {ceil(s * a) : a in P}.
inline std::set<IntVector> ceil_vectors(const RationalPolytope& P, std::int64_t s,
                                        std::int64_t guard = default_guard_cells()) {
  if (s < 1) throw DomainError("ceil_vectors: s must be >= 1");
  return detail::scan_rounded(P, make_rational(s), detail::Rounding::Ceil,
                              std::vector<std::optional<std::int64_t>>(P.dim()), guard);
}

// min over a in P of max_i a_i / h_i, i.e. min t subject to a in P, a_i <= t h_i.
// The reciprocal is max_{a in P} min_i h_i / a_i.
inline Rational min_max_ratio(const RationalPolytope& P, const std::vector<Rational>& h) {
  const std::size_t k = P.dim();
  if (h.size() != k) throw DomainError("min_max_ratio: dimension mismatch");
  for (const auto& x : h)
    if (x <= 0) throw DomainError("min_max_ratio: weights must be positive");
  for (const auto& v : P.vertices())
    for (const auto& x : v)
      if (x < 0) throw DomainError("min_max_ratio: polytope leaves the nonnegative orthant");

  // variables: t first, then a_0..a_{k-1}
  const std::size_t total = k + 1;
  std::vector<fm::Constraint> cs;
  for (auto c : P.h_representation()) {
    QVector coeffs(total, 0);
    std::copy(c.coeffs.begin(), c.coeffs.end(), coeffs.begin() + 1);
    cs.push_back({std::move(coeffs), c.rhs, c.rel});
  }
  for (std::size_t i = 0; i < k; ++i) {
    QVector c(total, 0);
    c[0] = h[i];
    c[1 + i] = -1;
    cs.push_back(fm::ge(std::move(c), 0));
  }
  auto on_t = fm::project(std::move(cs), total, 1);
  if (!on_t) throw ConsistencyError("min_max_ratio: empty feasible region");
  std::optional<Rational> best;
  for (const auto& c : *on_t) {
    if (c.coeffs[0] <= 0 && c.rel != fm::Relation::Equal) continue;
    const Rational bound = c.rhs / c.coeffs[0];
    if (!best || bound > *best) best = bound;
  }
  if (!best) throw ConsistencyError("min_max_ratio: unbounded below");
  if (*best == 0) throw DomainError("min_max_ratio: polytope contains the origin");
  return *best;
}

inline Rational min_max_ratio(const RationalPolytope& P, const std::vector<std::int64_t>& h) {
  std::vector<Rational> w;
  for (auto x : h) w.push_back(make_rational(x));
  return min_max_ratio(P, w);
}

}  // namespace detideals
