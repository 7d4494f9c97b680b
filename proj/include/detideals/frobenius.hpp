#pragma once

// Brute-force test ideals of monomial ideals in characteristic p, straight from the
// Frobenius definition tau(lambda . I) = union_e (I^ceil(lambda p^e))^[1/p^e].
// Shares nothing with the polytope code path.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"
#include "rational.hpp"

namespace detideals {

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct PrimePower {
  std::int64_t p;
  int e;
  std::int64_t q;

  PrimePower(std::int64_t prime, int exponent) : p(prime), e(exponent), q(1) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (e < 0) throw DomainError("negative Frobenius exponent");
    for (int i = 0; i < e; ++i) {
      if (q > std::numeric_limits<std::int64_t>::max() / p) throw GuardError("p^e overflows 64 bits");
      q *= p;
    }
  }
};

// I^r by repeated squaring, re-minimalized at each step; I^0 = (1).
inline MonomialIdeal monomial_power(const MonomialIdeal& I, std::int64_t r) {
  if (r < 0) throw DomainError("negative power");
  MonomialIdeal result = MonomialIdeal::unit(I.nvars());
  MonomialIdeal base = I;
  while (r > 0) {
    if (r & 1) result = product(result, base);
    r >>= 1;
    if (r > 0) base = product(base, base);
  }
  return result;
}

// I^[1/q]: generated by floor(a / q) over the generators a of I.
inline MonomialIdeal bracket_root(const MonomialIdeal& I, std::int64_t q) {
  if (q < 1) throw DomainError("bracket_root needs q >= 1");
  std::vector<IntVector> gens;
  for (const auto& a : I.gens()) {
    IntVector b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = a[i] / q;
    gens.push_back(std::move(b));
  }
  return MonomialIdeal(I.nvars(), std::move(gens));
}

// (I^r)^[1/q] without materializing I^r: x^b belongs to it iff some c in N^G with
// |c| = r has sum_j c_j g_j <= q (b + 1) - 1 componentwise.
inline MonomialIdeal power_root(const MonomialIdeal& I, std::int64_t r, std::int64_t q) {
  if (r < 0) throw DomainError("negative power");
  if (q < 1) throw DomainError("power_root needs q >= 1");
  const std::size_t N = I.nvars(), G = I.gens().size();
  const auto& g = I.gens();
  if (r == 0) return MonomialIdeal::unit(N);

  IntVector hi(N, 0);
  for (std::size_t i = 0; i < N; ++i) {
    std::int64_t mx = 0;
    for (const auto& gen : g) mx = std::max(mx, gen[i]);
    hi[i] = r * mx / q;
  }

  auto member = [&](const IntVector& b) {
    IntVector cap(N);
    for (std::size_t i = 0; i < N; ++i) cap[i] = q * (b[i] + 1) - 1;
    IntVector partial(N, 0);
    // Exhausts c_0..c_{G-3}; the last two coordinates are an interval in c_{G-2}.
    auto rec = [&](auto& self, std::size_t j, std::int64_t remaining) -> bool {
      if (G == 1) {
        for (std::size_t i = 0; i < N; ++i)
          if (remaining * g[0][i] > cap[i]) return false;
        return true;
      }
      if (j + 2 == G) {
        std::int64_t lo = 0, up = remaining;
        for (std::size_t i = 0; i < N && lo <= up; ++i) {
          // c * (g_a - g_b) <= cap - partial - remaining * g_b
          const std::int64_t slope = g[j][i] - g[j + 1][i];
          const std::int64_t room = cap[i] - partial[i] - remaining * g[j + 1][i];
          if (slope == 0) {
            if (room < 0) return false;
          } else if (slope > 0) {
            up = std::min(up, room >= 0 ? room / slope : -((-room + slope - 1) / slope));
          } else {
            const std::int64_t s = -slope;  // c >= -room / s
            lo = std::max(lo, room >= 0 ? -(room / s) : (-room + s - 1) / s);
          }
        }
        return lo <= up;
      }
      for (std::int64_t c = 0; c <= remaining; ++c) {
        bool fits = true;
        for (std::size_t i = 0; i < N; ++i) {
          partial[i] += c * g[j][i];
          fits = fits && partial[i] <= cap[i];
        }
        const bool ok = fits && self(self, j + 1, remaining - c);
        for (std::size_t i = 0; i < N; ++i) partial[i] -= c * g[j][i];
        if (ok) return true;
        if (!fits) break;  // larger c only grows the partial sum
      }
      return false;
    };
    return rec(rec, 0, r);
  };

  std::set<IntVector> members;
  std::vector<IntVector> minimal;
  IntVector b(N, 0);
  auto scan = [&](auto& self, std::size_t i) -> void {
    if (i == N) {
      for (std::size_t l = 0; l < N; ++l) {
        if (b[l] == 0) continue;
        IntVector below = b;
        --below[l];
        if (members.count(below)) {
          members.insert(b);
          return;
        }
      }
      if (member(b)) {
        members.insert(b);
        minimal.push_back(b);
      }
      return;
    }
    for (b[i] = 0; b[i] <= hi[i]; ++b[i]) self(self, i + 1);
  };
  scan(scan, 0);
  if (minimal.empty()) throw ConsistencyError("power_root found no generator inside the bounding box");
  return MonomialIdeal(N, std::move(minimal));
}

struct OracleReport {
  MonomialIdeal tau;
  bool stabilized = false;
  // Number of minimal generators of the e-th chain member, e = 1..e_max.
  std::vector<std::size_t> chain_lengths;
};

// Computes J_e = (I^ceil(lambda q))^[1/q], q = p^e, for e = 1..e_max and reports the last
// one; stabilized when J_{e_max-1} == J_{e_max}.
inline OracleReport tau_oracle(const MonomialIdeal& I, const Rational& lambda, std::int64_t p, int e_max) {
  if (lambda <= 0) throw DomainError("lambda must be positive");
  if (e_max < 2) throw DomainError("e_max must be at least 2");
  std::vector<MonomialIdeal> chain;
  for (int e = 1; e <= e_max; ++e) {
    const PrimePower pq(p, e);
    const std::int64_t r = ceil_int(lambda * make_rational(pq.q));
    chain.push_back(power_root(I, r, pq.q));
    if (chain.size() >= 2 && !chain.back().contains(chain[chain.size() - 2]))
      throw ConsistencyError("Frobenius chain is not ascending at e = " + std::to_string(e));
  }
  OracleReport report{chain.back(), chain[chain.size() - 1] == chain[chain.size() - 2], {}};
  for (const auto& J : chain) report.chain_lengths.push_back(J.gens().size());
  return report;
}

}  // namespace detideals
