#pragma once

// Brute-force vertex enumeration for min_{a in conv(V)} max_i a_i / h_i, written against
// the vertex list only. Used to cross-check the Fourier-Motzkin route.

#include <optional>
#include <vector>

#include "detideals/rational.hpp"

namespace oracle {

using detideals::QVector;
using detideals::Rational;

// Solves A x = b for square A; nullopt when singular.
inline std::optional<QVector> solve_square(std::vector<QVector> A, QVector b) {
  const std::size_t n = A.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      const Rational f = A[r][col] / A[col][col];
      for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  QVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

// Variables (mu_1..mu_n, t). Rows: mu_j >= 0 (n of them), t h_i - sum_j mu_j V_j[i] >= 0
// (k of them), and sum mu = 1 always tight.
inline Rational min_max_ratio(const std::vector<QVector>& V, const std::vector<Rational>& h) {
  const std::size_t n = V.size(), k = h.size(), dim = n + 1;
  std::vector<QVector> rows;
  QVector rhs;
  for (std::size_t j = 0; j < n; ++j) {
    QVector r(dim, 0);
    r[j] = 1;
    rows.push_back(r);
    rhs.push_back(0);
  }
  for (std::size_t i = 0; i < k; ++i) {
    QVector r(dim, 0);
    for (std::size_t j = 0; j < n; ++j) r[j] = -V[j][i];
    r[n] = h[i];
    rows.push_back(r);
    rhs.push_back(0);
  }
  QVector sum(dim, 0);
  for (std::size_t j = 0; j < n; ++j) sum[j] = 1;

  std::optional<Rational> best;
  const std::size_t m = rows.size(), need = dim - 1;
  std::vector<std::size_t> pick;
  auto rec = [&](auto& self, std::size_t start) -> void {
    if (pick.size() == need) {
      std::vector<QVector> A{sum};
      QVector b{1};
      for (auto p : pick) {
        A.push_back(rows[p]);
        b.push_back(rhs[p]);
      }
      const auto x = solve_square(A, b);
      if (!x) return;
      for (std::size_t r = 0; r < m; ++r) {
        Rational lhs = 0;
        for (std::size_t c = 0; c < dim; ++c) lhs += rows[r][c] * (*x)[c];
        if (lhs < rhs[r]) return;
      }
      if (!best || (*x)[n] < *best) best = (*x)[n];
      return;
    }
    for (std::size_t r = start; r < m; ++r) {
      pick.push_back(r);
      self(self, r + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return *best;
}

}  // namespace oracle
