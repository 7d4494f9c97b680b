#pragma once

// Monomial ideals and their test ideals through the Newton polyhedron.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "engine.hpp"
#include "errors.hpp"
#include "fourier_motzkin.hpp"
#include "polytope.hpp"
#include "rational.hpp"

namespace detideals {

class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t nvars, std::vector<IntVector> gens) : nvars_(nvars) {
    if (gens.empty()) throw DomainError("a monomial ideal needs at least one generator");
    for (const auto& g : gens) {
      if (g.size() != nvars_) throw DomainError("generator length differs from the number of variables");
      for (auto x : g)
        if (x < 0) throw DomainError("negative exponent in a monomial generator");
    }
    gens_ = minimal_antichain(std::move(gens));
  }

  static MonomialIdeal unit(std::size_t nvars) { return MonomialIdeal(nvars, {IntVector(nvars, 0)}); }

  // (x_1, ..., x_N)
  static MonomialIdeal maximal(std::size_t nvars) {
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < nvars; ++i) {
      IntVector g(nvars, 0);
      g[i] = 1;
      gens.push_back(std::move(g));
    }
    return MonomialIdeal(nvars, std::move(gens));
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<IntVector>& gens() const { return gens_; }

  bool is_unit() const {
    return std::any_of(gens_.begin(), gens_.end(), [](const IntVector& g) {
      return std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; });
    });
  }

  // x^b in I
  bool contains_monomial(const IntVector& b) const {
    for (const auto& g : gens_) {
      bool divides = true;
      for (std::size_t i = 0; i < nvars_ && divides; ++i) divides = g[i] <= b[i];
      if (divides) return true;
    }
    return false;
  }

  // J subset of *this
  bool contains(const MonomialIdeal& J) const {
    return std::all_of(J.gens().begin(), J.gens().end(), [&](const IntVector& g) { return contains_monomial(g); });
  }

  // Minimal generators are canonical, so equality is generator equality.
  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<IntVector> gens_;
};

inline std::string to_string(const MonomialIdeal& I) {
  std::string s = "(";
  for (std::size_t j = 0; j < I.gens().size(); ++j) {
    if (j) s += ", ";
    std::string term;
    for (std::size_t i = 0; i < I.nvars(); ++i) {
      const auto e = I.gens()[j][i];
      if (e == 0) continue;
      if (!term.empty()) term += "*";
      term += "x" + std::to_string(i + 1);
      if (e > 1) term += "^" + std::to_string(e);
    }
    s += term.empty() ? "1" : term;
  }
  return s + ")";
}

inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.nvars() != J.nvars()) throw DomainError("product of ideals in different rings");
  std::vector<IntVector> gens;
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) {
      IntVector c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
      gens.push_back(std::move(c));
    }
  return MonomialIdeal(I.nvars(), std::move(gens));
}

// Newton polyhedron: hull of the generators plus the nonnegative orthant.
class NewtonPolyhedron {
 public:
  explicit NewtonPolyhedron(const MonomialIdeal& I) : base_(hull(points(I))) {
    const std::size_t N = I.nvars(), G = base_.vertices().size(), total = 2 * N + G;
    // variables: a (N), mu (G), r (N); a = sum mu_j v_j + r
    std::vector<fm::Constraint> cs;
    for (std::size_t i = 0; i < N; ++i) {
      QVector c(total, 0);
      c[i] = 1;
      for (std::size_t j = 0; j < G; ++j) c[N + j] = -base_.vertices()[j][i];
      c[N + G + i] = -1;
      cs.push_back(fm::eq(std::move(c), 0));
    }
    QVector sum(total, 0);
    for (std::size_t j = 0; j < G; ++j) sum[N + j] = 1;
    cs.push_back(fm::eq(std::move(sum), 1));
    for (std::size_t v = N; v < total; ++v) cs.push_back(fm::lower_bound(total, v, 0, false));
    auto projected = fm::project(std::move(cs), total, N);
    if (!projected) throw ConsistencyError("Newton polyhedron projection is empty");
    facets_ = fm::remove_redundant(std::move(*projected), N);
  }

  const RationalPolytope& base() const { return base_; }
  // Inequalities <n, a> >= c with componentwise nonnegative normals.
  const std::vector<fm::Constraint>& facets() const { return facets_; }

  bool contains(const QVector& a) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const fm::Constraint& c) { return c.satisfied_by(a); });
  }
  bool contains_in_interior(const QVector& a) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const fm::Constraint& c) {
      fm::Constraint strict = c;
      strict.rel = fm::Relation::Greater;
      return strict.satisfied_by(a);
    });
  }

 private:
  static std::vector<QVector> points(const MonomialIdeal& I) {
    std::vector<QVector> pts;
    for (const auto& g : I.gens()) pts.push_back(to_qvector(g));
    return pts;
  }

  RationalPolytope base_;
  std::vector<fm::Constraint> facets_;
};

inline NewtonPolyhedron newton(const MonomialIdeal& I) { return NewtonPolyhedron(I); }

// tau(lambda . I) = (x^floor(lambda a) : a in NP(I)). Only the bounded part of NP(I) is
// scanned: moving along the orthant can only raise floors.
inline MonomialIdeal test_ideal_monomial(const MonomialIdeal& I, const Rational& lambda) {
  require_positive(lambda);
  const auto fv = floor_vectors(newton(I).base(), lambda);
  return MonomialIdeal(I.nvars(), std::vector<IntVector>(fv.begin(), fv.end()));
}

// Interior form: x^b in tau iff b + (1,...,1) lies in the interior of lambda * NP(I).
// Enumerates b over the box spanned by the floor form's generators.
inline MonomialIdeal test_ideal_monomial_interior(const MonomialIdeal& I, const Rational& lambda) {
  require_positive(lambda);
  const NewtonPolyhedron np = newton(I);
  const std::size_t N = I.nvars();
  IntVector hi(N);
  for (std::size_t i = 0; i < N; ++i) hi[i] = floor_int(lambda * np.base().coord_max(i));
  std::vector<IntVector> members;
  IntVector b(N, 0);
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == N) {
      QVector x(N);
      for (std::size_t l = 0; l < N; ++l) x[l] = make_rational(b[l] + 1) / lambda;
      if (np.contains_in_interior(x)) members.push_back(b);
      return;
    }
    for (b[i] = 0; b[i] <= hi[i]; ++b[i]) self(self, i + 1);
  };
  rec(rec, 0);
  return MonomialIdeal(N, std::move(members));
}

// fpt = 1 / min{s : s (1,...,1) in NP(I)}.
inline Rational fpt_monomial(const MonomialIdeal& I) {
  if (I.is_unit()) throw DomainError("the unit ideal has no threshold");
  return 1 / min_max_ratio(newton(I).base(), std::vector<std::int64_t>(I.nvars(), 1));
}

// Height: the fewest variables meeting the support of every generator.
inline std::int64_t monomial_height(const MonomialIdeal& I) {
  if (I.is_unit()) throw DomainError("the unit ideal has no height");
  const std::size_t N = I.nvars();
  if (N > 20) throw GuardError("monomial_height enumerates variable subsets; too many variables");
  std::int64_t best = static_cast<std::int64_t>(N);
  for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
    bool covers = std::all_of(I.gens().begin(), I.gens().end(), [&](const IntVector& g) {
      for (std::size_t i = 0; i < N; ++i)
        if ((mask >> i & 1u) && g[i] > 0) return true;
      return false;
    });
    if (covers) best = std::min<std::int64_t>(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace detideals
