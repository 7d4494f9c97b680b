#pragma once

// Exact Fourier-Motzkin elimination over the rationals, with strict and weak
// inequalities tracked separately. Systems are small (tens of variables at most),
// so no attempt is made to control the quadratic growth beyond normalization and
// duplicate removal.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace detideals::fm {

enum class Relation { GreaterEqual, Greater, Equal };

// <coeffs, x> (>=|>|==) rhs
struct Constraint {
  QVector coeffs;
  Rational rhs;
  Relation rel = Relation::GreaterEqual;

  bool is_trivial() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
  }
  // Only meaningful for trivial constraints.
  bool trivially_holds() const {
    switch (rel) {
      case Relation::GreaterEqual: return 0 >= rhs;
      case Relation::Greater: return 0 > rhs;
      case Relation::Equal: return rhs == 0;
    }
    return false;
  }
  bool satisfied_by(const QVector& x) const {
    Rational lhs = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) lhs += coeffs[i] * x[i];
    switch (rel) {
      case Relation::GreaterEqual: return lhs >= rhs;
      case Relation::Greater: return lhs > rhs;
      case Relation::Equal: return lhs == rhs;
    }
    return false;
  }
};

inline Constraint ge(QVector c, Rational r) { return {std::move(c), std::move(r), Relation::GreaterEqual}; }
inline Constraint gt(QVector c, Rational r) { return {std::move(c), std::move(r), Relation::Greater}; }
inline Constraint eq(QVector c, Rational r) { return {std::move(c), std::move(r), Relation::Equal}; }

// x_var (>=|>) value, in dimension dim.
inline Constraint lower_bound(std::size_t dim, std::size_t var, Rational value, bool strict) {
  QVector c(dim, 0);
  c[var] = 1;
  return {std::move(c), std::move(value), strict ? Relation::Greater : Relation::GreaterEqual};
}
// x_var (<=|<) value, in dimension dim.
inline Constraint upper_bound(std::size_t dim, std::size_t var, Rational value, bool strict) {
  QVector c(dim, 0);
  c[var] = -1;
  return {std::move(c), -std::move(value), strict ? Relation::Greater : Relation::GreaterEqual};
}

// Scales by a positive factor so the coefficients become coprime integers.
inline void normalize(Constraint& c) {
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& v : c.coeffs) {
    if (v == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num_mpz_t());
  }
  if (num_gcd == 0) return;
  const Rational scale(den_lcm, num_gcd);
  for (auto& v : c.coeffs) v *= scale;
  c.rhs *= scale;
}

// Normalizes, drops duplicates (keeping the tightest), and resolves trivial rows.
// Returns false if a trivial row is violated (the system is infeasible).
inline bool tidy(std::vector<Constraint>& cs) {
  std::map<QVector, std::size_t> seen;
  std::vector<Constraint> out;
  out.reserve(cs.size());
  for (auto& c : cs) {
    if (c.is_trivial()) {
      if (!c.trivially_holds()) return false;
      continue;
    }
    normalize(c);
    if (c.rel == Relation::Equal) {
      out.push_back(std::move(c));
      continue;
    }
    auto [it, inserted] = seen.emplace(c.coeffs, out.size());
    if (inserted) {
      out.push_back(std::move(c));
      continue;
    }
    Constraint& kept = out[it->second];
    if (c.rhs > kept.rhs || (c.rhs == kept.rhs && c.rel == Relation::Greater)) {
      kept.rhs = c.rhs;
      kept.rel = c.rel;
    }
  }
  cs = std::move(out);
  return true;
}

namespace detail {

// Replaces x_var by (rhs - sum_{l != var} coeffs_l x_l) / coeffs_var in `target`.
inline void substitute(Constraint& target, const Constraint& equality, std::size_t var) {
  const Rational& a = target.coeffs[var];
  if (a == 0) return;
  const Rational factor = a / equality.coeffs[var];
  for (std::size_t l = 0; l < target.coeffs.size(); ++l) target.coeffs[l] -= factor * equality.coeffs[l];
  target.rhs -= factor * equality.rhs;
  target.coeffs[var] = 0;
}

inline Constraint combine(const Constraint& lower, const Constraint& upper, std::size_t var) {
  // lower has positive coefficient on var, upper negative.
  const Rational lo = lower.coeffs[var];
  const Rational up = -upper.coeffs[var];
  Constraint out;
  out.coeffs.resize(lower.coeffs.size());
  for (std::size_t l = 0; l < lower.coeffs.size(); ++l)
    out.coeffs[l] = up * lower.coeffs[l] + lo * upper.coeffs[l];
  out.coeffs[var] = 0;
  out.rhs = up * lower.rhs + lo * upper.rhs;
  out.rel = (lower.rel == Relation::Greater || upper.rel == Relation::Greater) ? Relation::Greater
                                                                               : Relation::GreaterEqual;
  return out;
}

// One FM step: returns the system without `var`.
inline std::vector<Constraint> eliminate(const std::vector<Constraint>& cs, std::size_t var) {
  std::vector<const Constraint*> lower, upper;
  std::vector<Constraint> out;
  for (const auto& c : cs) {
    if (c.coeffs[var] > 0) lower.push_back(&c);
    else if (c.coeffs[var] < 0) upper.push_back(&c);
    else out.push_back(c);
  }
  for (auto* l : lower)
    for (auto* u : upper) out.push_back(combine(*l, *u, var));
  return out;
}

inline std::size_t elimination_cost(const std::vector<Constraint>& cs, std::size_t var) {
  std::size_t lo = 0, up = 0;
  for (const auto& c : cs) {
    if (c.coeffs[var] > 0) ++lo;
    else if (c.coeffs[var] < 0) ++up;
  }
  if (lo == 0 && up == 0) return 0;
  return lo * up + 1;  // +1 so touching variables never tie with absent ones
}

struct Interval {
  std::optional<Rational> lo, hi;
  bool lo_strict = false, hi_strict = false;

  void tighten(const Constraint& c, std::size_t var, const QVector& x) {
    Rational rest = c.rhs;
    for (std::size_t l = 0; l < c.coeffs.size(); ++l)
      if (l != var) rest -= c.coeffs[l] * x[l];
    const Rational bound = rest / c.coeffs[var];
    const bool strict = c.rel == Relation::Greater;
    if (c.coeffs[var] > 0) {
      if (!lo || bound > *lo) {
        lo = bound;
        lo_strict = strict;
      } else if (bound == *lo) {
        lo_strict = lo_strict || strict;
      }
    } else {
      if (!hi || bound < *hi) {
        hi = bound;
        hi_strict = strict;
      } else if (bound == *hi) {
        hi_strict = hi_strict || strict;
      }
    }
  }

  Rational pick() const {
    if (lo && hi) {
      if (*lo == *hi) {
        if (lo_strict || hi_strict) throw ConsistencyError("Fourier-Motzkin back-substitution hit an empty interval");
        return *lo;
      }
      if (*lo > *hi) throw ConsistencyError("Fourier-Motzkin back-substitution hit an empty interval");
      return (*lo + *hi) / 2;
    }
    if (lo) return lo_strict ? Rational(*lo + 1) : *lo;
    if (hi) return hi_strict ? Rational(*hi - 1) : *hi;
    return 0;
  }
};

}  // namespace detail

// Eliminates all equalities by substitution. `order` receives (variable, equality) pairs in
// substitution order. Returns false when the equalities are inconsistent.
inline bool substitute_equalities(std::vector<Constraint>& cs,
                                  std::vector<std::pair<std::size_t, Constraint>>* order,
                                  const std::vector<bool>* allowed = nullptr) {
  if (!tidy(cs)) return false;
  for (;;) {
    auto it = std::find_if(cs.begin(), cs.end(), [&](const Constraint& c) {
      if (c.rel != Relation::Equal) return false;
      for (std::size_t v = 0; v < c.coeffs.size(); ++v)
        if (c.coeffs[v] != 0 && (!allowed || (*allowed)[v])) return true;
      return false;
    });
    if (it == cs.end()) return true;
    Constraint equality = std::move(*it);
    cs.erase(it);
    std::size_t var = 0;
    while (equality.coeffs[var] == 0 || (allowed && !(*allowed)[var])) ++var;
    for (auto& c : cs) detail::substitute(c, equality, var);
    if (order) order->emplace_back(var, std::move(equality));
    if (!tidy(cs)) return false;
  }
}

// Decides feasibility of the system over Q^dim and returns a witness point.
inline std::optional<QVector> solve(std::vector<Constraint> cs, std::size_t dim) {
  for (const auto& c : cs)
    if (c.coeffs.size() != dim) throw DomainError("constraint dimension mismatch");

  std::vector<std::pair<std::size_t, Constraint>> substituted;
  if (!substitute_equalities(cs, &substituted)) return std::nullopt;

  std::vector<bool> done(dim, false);
  for (const auto& [v, e] : substituted) done[v] = true;

  std::vector<std::pair<std::size_t, std::vector<Constraint>>> stages;
  for (;;) {
    std::size_t best = dim, best_cost = 0;
    for (std::size_t v = 0; v < dim; ++v) {
      if (done[v]) continue;
      const std::size_t cost = detail::elimination_cost(cs, v);
      if (cost == 0) continue;
      if (best == dim || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    if (best == dim) break;
    std::vector<Constraint> involved;
    for (const auto& c : cs)
      if (c.coeffs[best] != 0) involved.push_back(c);
    cs = detail::eliminate(cs, best);
    done[best] = true;
    stages.emplace_back(best, std::move(involved));
    if (!tidy(cs)) return std::nullopt;
  }
  if (!cs.empty()) throw ConsistencyError("Fourier-Motzkin left non-trivial rows");

  QVector x(dim, 0);
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    detail::Interval iv;
    for (const auto& c : it->second) iv.tighten(c, it->first, x);
    x[it->first] = iv.pick();
  }
  for (auto it = substituted.rbegin(); it != substituted.rend(); ++it) {
    const auto& [var, e] = *it;
    Rational rest = e.rhs;
    for (std::size_t l = 0; l < dim; ++l)
      if (l != var) rest -= e.coeffs[l] * x[l];
    x[var] = rest / e.coeffs[var];
  }
  return x;
}

inline bool feasible(std::vector<Constraint> cs, std::size_t dim) {
  return solve(std::move(cs), dim).has_value();
}

// Projects the system onto the first `keep` coordinates. The result is expressed in
// dimension `keep`; equalities that survive are returned as Equal rows. Returns nullopt
// if the system is infeasible.
inline std::optional<std::vector<Constraint>> project(std::vector<Constraint> cs, std::size_t dim,
                                                      std::size_t keep) {
  std::vector<bool> eliminable(dim, false);
  for (std::size_t v = keep; v < dim; ++v) eliminable[v] = true;
  if (!substitute_equalities(cs, nullptr, &eliminable)) return std::nullopt;

  std::vector<Constraint> equalities, inequalities;
  for (auto& c : cs) (c.rel == Relation::Equal ? equalities : inequalities).push_back(std::move(c));

  std::vector<bool> done(dim, false);
  for (;;) {
    std::size_t best = dim, best_cost = 0;
    bool any_present = false;
    for (std::size_t v = keep; v < dim; ++v) {
      if (done[v]) continue;
      const std::size_t cost = detail::elimination_cost(inequalities, v);
      if (cost == 0) {
        done[v] = true;
        continue;
      }
      any_present = true;
      if (best == dim || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    if (!any_present) break;
    inequalities = detail::eliminate(inequalities, best);
    done[best] = true;
    if (!tidy(inequalities)) return std::nullopt;
  }
  // Equalities may mention eliminated variables only if they were not substitutable,
  // which cannot happen: every equality touching an eliminable variable was used.
  std::vector<Constraint> out;
  for (auto* group : {&equalities, &inequalities})
    for (auto& c : *group) {
      c.coeffs.resize(keep);
      out.push_back(std::move(c));
    }
  if (!tidy(out)) return std::nullopt;
  return out;
}

// Drops inequality rows implied by the remaining rows.
inline std::vector<Constraint> remove_redundant(std::vector<Constraint> cs, std::size_t dim) {
  for (std::size_t i = 0; i < cs.size();) {
    if (cs[i].rel == Relation::Equal) {
      ++i;
      continue;
    }
    std::vector<Constraint> probe;
    probe.reserve(cs.size());
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (j != i) probe.push_back(cs[j]);
    // negation of <c,x> >= r is <-c,x> > -r; of <c,x> > r is <-c,x> >= -r
    Constraint neg = cs[i];
    for (auto& v : neg.coeffs) v = -v;
    neg.rhs = -neg.rhs;
    neg.rel = cs[i].rel == Relation::Greater ? Relation::GreaterEqual : Relation::Greater;
    probe.push_back(std::move(neg));
    if (!feasible(std::move(probe), dim)) cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
    else ++i;
  }
  return cs;
}

}  // namespace detideals::fm
