#pragma once

// Test ideals, thresholds and jumping numbers of sums of products of determinantal
// (or Pfaffian) ideals. Every ideal produced here is a sum over an antichain of
// exponent vectors b of intersections  cap_i p_i^(b_i),  and is generated by the
// products whose shapes alpha satisfy gamma_i(alpha) >= b_i for some b.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "contexts.hpp"
#include "diagram.hpp"
#include "errors.hpp"
#include "polytope.hpp"
#include "rational.hpp"

namespace detideals {

// D(Sigma), E(Sigma) or F(Sigma) depending on the context.
class ProductIdealSpec {
 public:
  ProductIdealSpec(RingContext context, std::vector<Diagram> sigmas)
      : context_(context), sigmas_(std::move(sigmas)) {
    if (sigmas_.empty()) throw DomainError("a product-ideal spec needs at least one shape");
    for (const auto& s : sigmas_) context_.check_shape(s);
    std::sort(sigmas_.begin(), sigmas_.end());
    sigmas_.erase(std::unique(sigmas_.begin(), sigmas_.end()), sigmas_.end());
    std::vector<QVector> pts;
    for (const auto& s : sigmas_) pts.push_back(to_qvector(gamma_vector(s, context_.k())));
    polytope_ = hull(std::move(pts));
  }

  const RingContext& context() const { return context_; }
  const std::vector<Diagram>& sigmas() const { return sigmas_; }
  const RationalPolytope& polytope() const { return polytope_; }

 private:
  RingContext context_;
  std::vector<Diagram> sigmas_;
  RationalPolytope polytope_;
};

// Keeps the componentwise-minimal vectors.
inline std::vector<IntVector> minimal_antichain(std::vector<IntVector> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  auto leq = [](const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < vs.size() && !dominated; ++j)
      dominated = j != i && leq(vs[j], vs[i]);
    if (!dominated) out.push_back(vs[i]);
  }
  return out;
}

// sum over b in antichain of cap_i p_i^(b_i); b_i = 0 imposes nothing.
class IdealPresentation {
 public:
  IdealPresentation(RingContext context, std::vector<IntVector> vectors) : context_(context) {
    for (auto& v : vectors) {
      if (v.size() != context_.k()) throw DomainError("exponent vector length differs from the prime chain");
      for (auto& x : v) x = std::max<std::int64_t>(x, 0);
    }
    antichain_ = minimal_antichain(std::move(vectors));
  }

  static IdealPresentation unit(const RingContext& c) {
    return IdealPresentation(c, {IntVector(c.k(), 0)});
  }

  const RingContext& context() const { return context_; }
  const std::vector<IntVector>& antichain() const { return antichain_; }

  bool is_unit() const {
    return std::any_of(antichain_.begin(), antichain_.end(), [](const IntVector& b) {
      return std::all_of(b.begin(), b.end(), [](std::int64_t x) { return x == 0; });
    });
  }

  // Whether products of shape alpha belong to the ideal.
  bool admits(const Diagram& alpha) const {
    return admits_gamma(gamma_vector(alpha, context_.k()));
  }

  bool admits_gamma(const std::vector<std::int64_t>& g) const {
    for (const auto& b : antichain_) {
      bool ok = true;
      for (std::size_t i = 0; i < b.size() && ok; ++i) ok = g[i] >= b[i];
      if (ok) return true;
    }
    return false;
  }

  friend bool operator==(const IdealPresentation&, const IdealPresentation&) = default;

 private:
  RingContext context_;
  std::vector<IntVector> antichain_;
};

using ShapeSet = std::vector<Diagram>;

inline const RationalPolytope& gamma_polytope(const ProductIdealSpec& spec) { return spec.polytope(); }

// Integral closure of the s-th power: the minimal vectors among ceil(s * a), a in P.
inline IdealPresentation integral_closure(const ProductIdealSpec& spec, std::int64_t s) {
  const auto cv = ceil_vectors(spec.polytope(), s);
  return IdealPresentation(spec.context(), std::vector<IntVector>(cv.begin(), cv.end()));
}

inline void require_positive(const Rational& lambda) {
  if (lambda <= 0) throw DomainError("lambda must be positive");
}

// tau(lambda . I) = sum_{a in P} cap_i p_i^(floor(lambda a_i) + 1 - ht p_i).
inline IdealPresentation test_ideal(const ProductIdealSpec& spec, const Rational& lambda) {
  require_positive(lambda);
  const auto h = spec.context().heights();
  const auto floors = floor_vectors_clamped(spec.polytope(), lambda, h);
  std::vector<IntVector> bs;
  bs.reserve(floors.size());
  for (const auto& v : floors) {
    IntVector b(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) b[i] = std::max<std::int64_t>(0, v[i] + 1 - h[i]);
    bs.push_back(std::move(b));
  }
  return IdealPresentation(spec.context(), std::move(bs));
}

// Single product: tau(lambda . D_sigma) = cap_i p_i^(floor(lambda gamma_i(sigma)) + 1 - h_i).
inline IdealPresentation test_ideal_closed_form(const RingContext& c, const Diagram& sigma,
                                                const Rational& lambda) {
  require_positive(lambda);
  c.check_shape(sigma);
  const auto g = gamma_vector(sigma, c.k());
  IntVector b(c.k());
  for (std::size_t i = 0; i < c.k(); ++i)
    b[i] = std::max<std::int64_t>(0, floor_int(lambda * g[i]) + 1 - c.height(i + 1));
  return IdealPresentation(c, {std::move(b)});
}

// Box-feasibility route: alpha is in tau(lambda) iff some a in P has
// lambda a_i < gamma_i(alpha) + h_i for every i.
inline bool membership(const ProductIdealSpec& spec, const Rational& lambda, const Diagram& alpha) {
  require_positive(lambda);
  spec.context().check_shape(alpha);
  const auto& c = spec.context();
  const auto g = gamma_vector(alpha, c.k());
  BoxQuery q(c.k());
  for (std::size_t i = 0; i < c.k(); ++i) q.less_than(i, Rational(make_rational(g[i] + c.height(i + 1)) / lambda));
  return feasible(spec.polytope(), q).has_value();
}

// Containment-minimal shapes admitted by the presentation. Searches diagrams with
// parts <= k and at most `rows` parts; a minimal shape never needs more rows than the
// largest exponent, so the initial guard of max(b) + k is only widened defensively.
inline ShapeSet minimal_generating_shapes(const IdealPresentation& pres, std::int64_t max_rows = 4096,
                                          std::int64_t node_guard = default_guard_cells()) {
  const std::size_t k = pres.context().k();
  std::int64_t bmax = 0;
  for (const auto& b : pres.antichain())
    for (auto x : b) bmax = std::max(bmax, x);
  if (pres.is_unit()) return {Diagram{}};

  std::int64_t rows = bmax + static_cast<std::int64_t>(k);
  for (;;) {
    if (rows > max_rows) throw GuardError("shape search exceeded the row guard");
    ShapeSet found;
    bool touched = false;
    std::int64_t nodes = 0;
    std::vector<Diagram::Part> parts;
    std::vector<std::int64_t> g(k, 0);

    auto add_part = [&](Diagram::Part p, int sign) {
      for (Diagram::Part t = 1; t <= p; ++t) g[t - 1] += sign * (p - t + 1);
    };
    auto is_minimal = [&]() {
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const bool corner = i + 1 == parts.size() || parts[i] > parts[i + 1];
        if (!corner) continue;
        auto h = g;
        for (Diagram::Part t = 1; t <= parts[i]; ++t) h[t - 1] -= 1;
        if (pres.admits_gamma(h)) return false;
      }
      return true;
    };
    auto rec = [&](auto& self, Diagram::Part cap) -> void {
      if (++nodes > node_guard) throw GuardError("shape search exceeded the node guard");
      if (pres.admits_gamma(g)) {
        if (is_minimal()) {
          found.emplace_back(parts);
          if (static_cast<std::int64_t>(parts.size()) >= rows) touched = true;
        }
        return;
      }
      if (static_cast<std::int64_t>(parts.size()) >= rows) return;
      for (Diagram::Part p = cap; p >= 1; --p) {
        parts.push_back(p);
        add_part(p, +1);
        self(self, p);
        add_part(p, -1);
        parts.pop_back();
      }
    };
    rec(rec, static_cast<Diagram::Part>(k));
    if (!touched) {
      std::sort(found.begin(), found.end());
      return found;
    }
    rows *= 2;
  }
}

// p1 subset of p2, checked on generating shapes.
inline bool ideal_contained(const IdealPresentation& p1, const IdealPresentation& p2) {
  if (!(p1.context() == p2.context())) throw DomainError("ideals live in different contexts");
  for (const auto& alpha : minimal_generating_shapes(p1))
    if (!p2.admits(alpha)) return false;
  return true;
}

inline bool ideal_equal(const IdealPresentation& p1, const IdealPresentation& p2) {
  return ideal_contained(p1, p2) && ideal_contained(p2, p1);
}

// fpt = 1 / min_{a in P} max_i a_i / h_i.
inline Rational fpt(const ProductIdealSpec& spec) {
  const auto& P = spec.polytope();
  if (std::any_of(P.vertices().begin(), P.vertices().end(), [](const QVector& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
      }))
    throw DomainError("the unit ideal has no threshold");
  return 1 / min_max_ratio(P, spec.context().heights());
}

// The supremum of the lambdas at which shape alpha still lies in tau(lambda).
inline Rational shape_threshold(const ProductIdealSpec& spec, const Diagram& alpha) {
  const auto& c = spec.context();
  c.check_shape(alpha);
  const auto g = gamma_vector(alpha, c.k());
  std::vector<std::int64_t> w(c.k());
  for (std::size_t i = 0; i < c.k(); ++i) w[i] = g[i] + c.height(i + 1);
  return 1 / min_max_ratio(spec.polytope(), w);
}

// Jumping numbers of a single product in (0, lambda_max]. Candidates are the values where
// some floor(lambda gamma_i) reaches h_i + j; a candidate is kept only if the ideal
// actually changes there.
inline std::vector<Rational> jumping_numbers(const RingContext& c, const Diagram& sigma,
                                             const Rational& lambda_max) {
  require_positive(lambda_max);
  c.check_shape(sigma);
  const auto g = gamma_vector(sigma, c.k());
  std::set<Rational> candidates;
  for (std::size_t i = 0; i < c.k(); ++i) {
    if (g[i] == 0) continue;
    for (std::int64_t j = 0;; ++j) {
      Rational lam = make_rational(c.height(i + 1) + j, g[i]);
      if (lam > lambda_max) break;
      candidates.insert(lam);
    }
  }
  std::vector<Rational> out;
  auto previous = IdealPresentation::unit(c);
  for (const auto& lam : candidates) {
    auto current = test_ideal_closed_form(c, sigma, lam);
    if (!ideal_equal(current, previous)) out.push_back(lam);
    previous = std::move(current);
  }
  return out;
}

struct JumpReport {
  std::vector<Rational> values;
  bool complete = true;
  std::string method;
};

// Jumping numbers of a sum of products in (0, lambda_max]. Since a shape alpha lies in
// tau(lambda) exactly for lambda < shape_threshold(alpha), the jump after lambda is the
// smallest threshold among the minimal generating shapes of tau(lambda).
inline JumpReport jumping_numbers_sum(const ProductIdealSpec& spec, const Rational& lambda_max) {
  require_positive(lambda_max);
  JumpReport report;
  report.method = "threshold-walk";
  Rational lam = fpt(spec);
  while (lam <= lambda_max) {
    report.values.push_back(lam);
    const auto shapes = minimal_generating_shapes(test_ideal(spec, lam));
    std::optional<Rational> next;
    for (const auto& alpha : shapes) {
      Rational t = shape_threshold(spec, alpha);
      if (t <= lam) throw ConsistencyError("generator of tau(lambda) has threshold <= lambda");
      if (!next || t < *next) next = t;
    }
    if (!next) throw ConsistencyError("test ideal without generators");
    lam = *next;
  }
  return report;
}

// e_i = max{l : I in p_i^(l)} = min over sigma of gamma_i(sigma).
inline std::vector<std::int64_t> e_vector(const ProductIdealSpec& spec) {
  const std::size_t k = spec.context().k();
  std::vector<std::int64_t> e;
  for (const auto& s : spec.sigmas()) {
    const auto g = gamma_vector(s, k);
    if (e.empty()) e = g;
    else
      for (std::size_t i = 0; i < k; ++i) e[i] = std::min(e[i], g[i]);
  }
  return e;
}

// The intersection cap_i p_i^(floor(lambda e_i) + 1 - h_i) that always contains tau.
inline IdealPresentation floating_bound(const ProductIdealSpec& spec, const Rational& lambda) {
  require_positive(lambda);
  const auto e = e_vector(spec);
  const auto& c = spec.context();
  IntVector b(c.k());
  for (std::size_t i = 0; i < c.k(); ++i) b[i] = floor_int(lambda * e[i]) + 1 - c.height(i + 1);
  return IdealPresentation(c, {std::move(b)});
}

struct FloatingReport {
  bool contained = false;
  bool equal = false;
};

inline FloatingReport floating_check(const ProductIdealSpec& spec, const Rational& lambda) {
  const auto tau = test_ideal(spec, lambda);
  const auto bound = floating_bound(spec, lambda);
  FloatingReport r;
  r.contained = ideal_contained(tau, bound);
  if (!r.contained)
    throw ConsistencyError("test ideal escapes the symbolic-power bound for " + spec.context().describe());
  r.equal = ideal_contained(bound, tau);
  return r;
}

struct FptBoundsReport {
  Rational lower, fpt, upper;
  bool holds = false;
};

// ht / deg <= fpt <= ht for a single product, where ht is the height of the prime
// indexed by the largest part and deg = |sigma|.
inline FptBoundsReport fpt_bounds_check(const RingContext& c, const Diagram& sigma) {
  if (sigma.empty()) throw DomainError("fpt bounds need a nonempty shape");
  c.check_shape(sigma);
  FptBoundsReport r;
  const std::int64_t ht = c.height(static_cast<std::size_t>(sigma.height()));
  r.upper = make_rational(ht);
  r.lower = make_rational(ht, gamma(sigma, 1));
  r.fpt = fpt(ProductIdealSpec(c, {sigma}));
  r.holds = r.lower <= r.fpt && r.fpt <= r.upper;
  if (!r.holds) throw ConsistencyError("fpt outside [ht/deg, ht] for " + to_string(sigma));
  return r;
}

}  // namespace detideals
