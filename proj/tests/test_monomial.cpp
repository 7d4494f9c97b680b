#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "detideals/monomial.hpp"

using namespace detideals;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }

MonomialIdeal M(std::size_t n, std::vector<IntVector> g) { return MonomialIdeal(n, std::move(g)); }

// (x_1^a_1, ..., x_N^a_N): x^b is in tau(lambda) iff sum (b_i + 1) / a_i > lambda.
MonomialIdeal diagonal_oracle(const IntVector& a, const Rational& lambda) {
  const std::size_t N = a.size();
  std::vector<IntVector> members;
  IntVector b(N, 0);
  std::int64_t box = 0;
  for (auto x : a) box = std::max(box, floor_int(lambda * x) + 1);
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == N) {
      Rational s = 0;
      for (std::size_t l = 0; l < N; ++l) s += q(b[l] + 1, a[l]);
      if (s > lambda) members.push_back(b);
      return;
    }
    for (b[i] = 0; b[i] <= box; ++b[i]) self(self, i + 1);
  };
  rec(rec, 0);
  return MonomialIdeal(N, members);
}

// m^e: every monomial of degree e.
MonomialIdeal maximal_power(std::size_t N, std::int64_t e) {
  std::vector<IntVector> gens;
  IntVector b(N, 0);
  auto rec = [&](auto& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == N) {
      b[i] = left;
      gens.push_back(b);
      return;
    }
    for (b[i] = 0; b[i] <= left; ++b[i]) self(self, i + 1, left - b[i]);
  };
  rec(rec, 0, e);
  return MonomialIdeal(N, gens);
}

std::vector<MonomialIdeal> random_ideals(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<MonomialIdeal> out;
  while (static_cast<int>(out.size()) < count) {
    const std::size_t N = 2 + rng() % 2;
    const int G = 1 + static_cast<int>(rng() % 3);
    std::vector<IntVector> gens;
    for (int j = 0; j < G; ++j) {
      IntVector g(N);
      for (auto& x : g) x = static_cast<std::int64_t>(rng() % 4);
      gens.push_back(g);
    }
    MonomialIdeal I(N, gens);
    if (!I.is_unit()) out.push_back(I);
  }
  return out;
}

}  // namespace

TEST(Monomial, Minimalization) {
  EXPECT_EQ(M(2, {{2, 0}, {3, 1}, {0, 3}}).gens(), (std::vector<IntVector>{{0, 3}, {2, 0}}));
  EXPECT_THROW(M(2, {}), DomainError);
  EXPECT_THROW(M(2, {{1}}), DomainError);
  EXPECT_THROW(M(2, {{-1, 0}}), DomainError);
  EXPECT_TRUE(MonomialIdeal::unit(3).is_unit());
  EXPECT_EQ(to_string(M(2, {{2, 0}, {1, 1}})), "(x1*x2, x1^2)");
}

TEST(Monomial, Product) {
  EXPECT_EQ(product(M(2, {{1, 0}}), M(2, {{0, 1}})), M(2, {{1, 1}}));
  const auto I = M(2, {{2, 0}, {0, 3}});
  EXPECT_EQ(product(I, MonomialIdeal::unit(2)), I);
  EXPECT_EQ(product(MonomialIdeal::maximal(2), MonomialIdeal::maximal(2)), M(2, {{2, 0}, {1, 1}, {0, 2}}));
}

TEST(Monomial, NewtonPolyhedron) {
  const auto np = newton(M(2, {{2, 0}, {0, 3}}));
  EXPECT_TRUE(np.contains({q(2), q(0)}));
  EXPECT_TRUE(np.contains({q(1), q(3, 2)}));
  EXPECT_FALSE(np.contains({q(1), q(1)}));
  EXPECT_TRUE(np.contains({q(7), q(7)}));
  EXPECT_FALSE(np.contains_in_interior({q(1), q(3, 2)}));
  bool found = false;
  for (const auto& f : np.facets()) {
    for (const auto& c : f.coeffs) EXPECT_GE(c, 0);
    found = found || (f.coeffs == QVector{q(3), q(2)} && f.rhs == 6);
  }
  EXPECT_TRUE(found);

  const auto x = newton(M(2, {{1, 0}}));
  EXPECT_TRUE(x.contains({q(1), q(0)}));
  EXPECT_FALSE(x.contains({q(99, 100), q(50)}));
  const auto unit = newton(MonomialIdeal::unit(2));
  EXPECT_TRUE(unit.contains({q(0), q(0)}));
  EXPECT_FALSE(unit.contains({q(-1, 5), q(0)}));
}

TEST(Monomial, TestIdealExamples) {
  const auto I = M(2, {{2, 0}, {0, 3}});
  EXPECT_EQ(test_ideal_monomial(I, 1), MonomialIdeal::maximal(2));
  EXPECT_TRUE(test_ideal_monomial(I, q(4, 5)).is_unit());
  EXPECT_FALSE(test_ideal_monomial(I, q(5, 6)).is_unit());
  for (std::size_t N = 1; N <= 4; ++N)
    for (std::int64_t j = 0; j <= 12; ++j) {
      const Rational lam = q(static_cast<std::int64_t>(N) - 1) + q(j, 4);
      if (lam <= 0) continue;
      const std::int64_t e = floor_int(lam) + 1 - static_cast<std::int64_t>(N);
      const auto expect = e <= 0 ? MonomialIdeal::unit(N) : maximal_power(N, e);
      EXPECT_EQ(test_ideal_monomial(MonomialIdeal::maximal(N), lam), expect) << N << " " << to_string(lam);
    }
}

TEST(Monomial, DiagonalIdealsMatchClosedForm) {
  const std::vector<IntVector> cases = {{2, 3}, {3, 3}, {1, 4}, {2, 2, 3}, {3, 3, 3}, {5, 2}};
  for (const auto& a : cases) {
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < a.size(); ++i) {
      IntVector g(a.size(), 0);
      g[i] = a[i];
      gens.push_back(g);
    }
    const MonomialIdeal I(a.size(), gens);
    Rational f = 0;
    for (auto x : a) f += q(1, x);
    EXPECT_EQ(fpt_monomial(I), f);
    for (std::int64_t j = 1; j <= 18; ++j) {
      const Rational lam = q(j, 6);
      EXPECT_EQ(test_ideal_monomial(I, lam), diagonal_oracle(a, lam)) << to_string(I) << " " << to_string(lam);
    }
  }
}

TEST(Monomial, Fpt) {
  EXPECT_EQ(fpt_monomial(M(2, {{2, 0}, {0, 3}})), q(5, 6));
  for (std::size_t N = 1; N <= 5; ++N) EXPECT_EQ(fpt_monomial(MonomialIdeal::maximal(N)), static_cast<long>(N));
  EXPECT_EQ(fpt_monomial(M(1, {{2}})), q(1, 2));
  EXPECT_EQ(fpt_monomial(M(2, {{2, 0}})), q(1, 2));
  // min over the segment (2 - t, 1 + 2t) of the larger coordinate is 5/3
  EXPECT_EQ(fpt_monomial(M(2, {{2, 1}, {1, 3}})), q(3, 5));
  EXPECT_THROW(fpt_monomial(MonomialIdeal::unit(2)), DomainError);
}

TEST(Monomial, Height) {
  EXPECT_EQ(monomial_height(MonomialIdeal::maximal(3)), 3);
  EXPECT_EQ(monomial_height(M(3, {{1, 1, 0}, {0, 1, 1}})), 1);
  EXPECT_EQ(monomial_height(M(4, {{1, 1, 0, 0}, {0, 0, 1, 1}})), 2);
}

TEST(MonomialProperties, FloorFormEqualsInteriorForm) {
  for (const auto& I : random_ideals(3, 40))
    for (std::int64_t j = 1; j <= 16; ++j) {
      const Rational lam = q(j, 4);
      EXPECT_EQ(test_ideal_monomial(I, lam), test_ideal_monomial_interior(I, lam)) << to_string(I) << " " << to_string(lam);
    }
}

TEST(MonomialProperties, MonotoneRightContinuousSkoda) {
  for (const auto& I : random_ideals(9, 25)) {
    std::optional<MonomialIdeal> prev;
    for (std::int64_t j = 1; j <= 20; ++j) {
      const Rational lam = q(j, 4);
      const auto tau = test_ideal_monomial(I, lam);
      if (prev) { EXPECT_TRUE(prev->contains(tau)); }
      EXPECT_EQ(tau, test_ideal_monomial(I, lam + q(1, 1000)));
      if (lam >= static_cast<long>(I.gens().size()) && lam > 1) {
        EXPECT_EQ(tau, product(I, test_ideal_monomial(I, lam - 1))) << to_string(I) << " " << to_string(lam);
      }
      prev = tau;
    }
    const Rational f = fpt_monomial(I);
    EXPECT_TRUE(test_ideal_monomial(I, f - q(1, 1000)).is_unit());
    EXPECT_FALSE(test_ideal_monomial(I, f).is_unit());
  }
}

TEST(MonomialProperties, FptBoundsForEquigeneratedIdeals) {
  const std::vector<MonomialIdeal> fixtures = {
      MonomialIdeal::maximal(3), M(2, {{2, 0}, {1, 1}, {0, 2}}), M(2, {{3, 0}, {0, 3}}), M(3, {{1, 1, 0}, {0, 1, 1}}),
      M(3, {{2, 0, 0}, {0, 1, 1}}), M(3, {{1, 1, 1}}), M(4, {{1, 1, 0, 0}, {0, 0, 1, 1}})};
  for (const auto& I : fixtures) {
    const auto deg = std::accumulate(I.gens().front().begin(), I.gens().front().end(), std::int64_t{0});
    const auto ht = monomial_height(I);
    const Rational f = fpt_monomial(I);
    EXPECT_LE(q(ht, deg), f) << to_string(I);
    EXPECT_LE(f, q(ht)) << to_string(I);
  }
}
