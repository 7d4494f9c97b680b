#include <gtest/gtest.h>

#include <random>

#include "detideals/frobenius.hpp"

using namespace detideals;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }
MonomialIdeal M(std::size_t n, std::vector<IntVector> g) { return MonomialIdeal(n, std::move(g)); }

MonomialIdeal frobenius_power(const MonomialIdeal& J, std::int64_t qq) {
  std::vector<IntVector> gens = J.gens();
  for (auto& g : gens)
    for (auto& x : g) x *= qq;
  return MonomialIdeal(J.nvars(), gens);
}

}  // namespace

TEST(Frobenius, PrimePower) {
  EXPECT_EQ(PrimePower(3, 4).q, 81);
  EXPECT_EQ(PrimePower(2, 0).q, 1);
  EXPECT_THROW(PrimePower(4, 1), DomainError);
  EXPECT_THROW(PrimePower(1, 1), DomainError);
  EXPECT_THROW(PrimePower(2, 70), GuardError);
}

TEST(Frobenius, MonomialPower) {
  EXPECT_EQ(monomial_power(MonomialIdeal::maximal(2), 2), M(2, {{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(monomial_power(M(2, {{2, 0}, {0, 3}}), 0), MonomialIdeal::unit(2));
  EXPECT_EQ(monomial_power(M(2, {{2, 0}, {0, 3}}), 2), M(2, {{4, 0}, {2, 3}, {0, 6}}));
  EXPECT_EQ(monomial_power(MonomialIdeal::maximal(3), 3).gens().size(), 10u);
  EXPECT_THROW(monomial_power(MonomialIdeal::maximal(2), -1), DomainError);
}

TEST(Frobenius, BracketRoot) {
  EXPECT_EQ(bracket_root(M(2, {{5, 2}}), 4), M(2, {{1, 0}}));
  const auto I = M(2, {{2, 1}, {0, 5}});
  EXPECT_EQ(bracket_root(I, 1), I);
  EXPECT_EQ(bracket_root(M(2, {{4, 0}, {2, 3}, {0, 6}}), 3), MonomialIdeal::maximal(2));
  for (std::int64_t qq : {2, 3, 4, 9, 25}) EXPECT_EQ(bracket_root(frobenius_power(I, qq), qq), I);
}

TEST(Frobenius, FusedPowerRootMatchesExplicitComputation) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t N = 2 + trial % 2;
    std::vector<IntVector> gens;
    for (int j = 0; j < 1 + trial % 4; ++j) {
      IntVector g(N);
      for (auto& x : g) x = static_cast<std::int64_t>(rng() % 4);
      gens.push_back(g);
    }
    const MonomialIdeal I(N, gens);
    const std::int64_t r = 1 + static_cast<std::int64_t>(rng() % 7);
    const std::int64_t qq = std::vector<std::int64_t>{2, 3, 4, 5, 8, 9}[rng() % 6];
    EXPECT_EQ(power_root(I, r, qq), bracket_root(monomial_power(I, r), qq)) << to_string(I) << " r=" << r;
  }
}

TEST(Frobenius, OracleExamples) {
  for (std::size_t N = 1; N <= 3; ++N) {
    const auto r = tau_oracle(MonomialIdeal::maximal(N), q(static_cast<std::int64_t>(N)), 3, 4);
    EXPECT_TRUE(r.stabilized);
    EXPECT_EQ(r.tau, MonomialIdeal::maximal(N));
  }
  const auto I = M(2, {{2, 0}, {0, 3}});
  const auto r = tau_oracle(I, 1, 5, 4);
  EXPECT_TRUE(r.stabilized);
  EXPECT_EQ(r.tau, MonomialIdeal::maximal(2));
  EXPECT_EQ(r.chain_lengths.size(), 4u);
  for (std::int64_t p : {2, 3, 5}) {
    const auto small = tau_oracle(I, q(4, 5), p, 7);
    EXPECT_TRUE(small.stabilized);
    EXPECT_TRUE(small.tau.is_unit());
  }
  EXPECT_THROW(tau_oracle(I, 1, 5, 1), DomainError);
  EXPECT_THROW(tau_oracle(I, 0, 5, 3), DomainError);
  EXPECT_THROW(tau_oracle(I, 1, 6, 3), DomainError);
}

// near a jump with p = 2 the chain needs e = 7 to settle
TEST(Frobenius, ChainAscendsAndAgreesAcrossPrimes) {
  const std::vector<MonomialIdeal> fixtures = {M(2, {{2, 0}, {0, 3}}), M(2, {{2, 1}, {1, 3}}), M(2, {{3, 0}, {1, 1}, {0, 4}}),
                                               M(3, {{1, 1, 0}, {0, 1, 1}})};
  for (const auto& I : fixtures)
    for (const auto& lam : {q(1, 2), q(2, 3), q(1), q(5, 4), q(2)}) {
      std::optional<MonomialIdeal> first;
      for (std::int64_t p : {2, 3, 5}) {
        const auto r = tau_oracle(I, lam, p, 7);
        ASSERT_TRUE(r.stabilized) << to_string(I) << " " << to_string(lam) << " p=" << p;
        if (first) EXPECT_EQ(r.tau, *first) << to_string(I) << " " << to_string(lam) << " p=" << p;
        else first = r.tau;
        EXPECT_EQ(r.tau, test_ideal_monomial(I, lam));
      }
    }
}
