#include <gtest/gtest.h>

#include <random>

#include "nott/errors.hpp"
#include "nott/literal.hpp"
#include "nott/sampling.hpp"
#include "nott/series.hpp"

using namespace nott;

namespace {

const Prime P2(2);
const Prime P3(3);
const Prime P5(5);

UnitSeries U(const char* text, const Prime& p, int n) { return parse_unit(text, p, n); }
NottinghamElt N(const char* text, const Prime& p, int n) { return parse_nottingham(text, p, n); }

ExponentVector exps(const Prime& p, int bound, std::initializer_list<std::pair<int, int>> e) {
  ExponentVector v(p, bound);
  for (auto [j, x] : e) v.set(j, x);
  return v;
}

}  // namespace

TEST(Prime, RejectsNonPrimesAndLargePrimes) {
  EXPECT_THROW(Prime(1), UsageError);
  EXPECT_THROW(Prime(4), UsageError);
  EXPECT_THROW(Prime(37), UsageError);
  EXPECT_EQ(Prime(31).square(), 961);
  EXPECT_EQ(P3.inverse(2), 2);
  EXPECT_THROW(P3.inverse(6), DomainError);
  EXPECT_EQ(P5.reduce(-1), 4);
  EXPECT_EQ(P5.reduce_sq(-1), 24);
}

TEST(UnitSeries, Multiplication) {
  EXPECT_EQ(U("1+t", P2, 3) * U("1+t+t^2", P2, 3), U("1+t^3", P2, 3));
  EXPECT_EQ(U("1+t", P2, 3) * U("1+t", P2, 3), U("1+t^2", P2, 3));
  const UnitSeries a = U("1+2t+t^3", P3, 4);
  EXPECT_EQ(a * UnitSeries(P3, 4), a);
  EXPECT_THROW(unit_mul(UnitSeries(P2, 3), UnitSeries(P2, 4)), UsageError);
  EXPECT_THROW(unit_mul(UnitSeries(P2, 3), UnitSeries(P3, 3)), UsageError);
}

TEST(UnitSeries, Powers) {
  EXPECT_EQ(unit_pow(U("1+t^3", P2, 8), 2), U("1+t^6", P2, 8));
  EXPECT_EQ(unit_pow(U("1+t", P2, 2), -1), U("1+t+t^2", P2, 2));
  EXPECT_EQ(unit_pow(U("1+t", P2, 3), -1), U("1+t+t^2+t^3", P2, 3));
  EXPECT_EQ(unit_pow(U("1+t", P3, 2), 8), U("1+2t+t^2", P3, 2));
  EXPECT_EQ(unit_pow(U("1+t", P3, 3), 8), U("1+2t+t^2+2t^3", P3, 3));
  EXPECT_TRUE(unit_pow(U("1+t", P3, 3), 0).is_one());
  const UnitSeries f = U("1+2t+t^4", P5, 7);
  EXPECT_TRUE((unit_pow(f, 7) * unit_pow(f, -7)).is_one());
}

TEST(UnitSeries, Factors) {
  const UnitSeries f = U("(1+t^2)(1+t^4)^2", P3, 6);
  const auto factors = unit_factors(f);
  ASSERT_EQ(factors.size(), 2u);
  EXPECT_EQ(factors[0], std::make_pair(2, 1));
  EXPECT_EQ(factors[1], std::make_pair(4, 2));
  EXPECT_TRUE(unit_factors(UnitSeries(P3, 6)).empty());
}

TEST(Nottingham, Composition) {
  const NottinghamElt u = N("t(1+t)", P2, 2);
  EXPECT_TRUE(nott_compose(u, u).is_identity());
  const NottinghamElt id = NottinghamElt::identity(P2, 2);
  EXPECT_EQ(nott_compose(u, id), u);
  EXPECT_EQ(nott_compose(id, u), u);
  EXPECT_THROW(nott_compose(u, NottinghamElt::identity(P2, 3)), UsageError);
}

TEST(Nottingham, Inverse) {
  EXPECT_EQ(nott_inverse(N("t(1+t)", P2, 2)), N("t(1+t)", P2, 2));
  EXPECT_TRUE(nott_inverse(NottinghamElt::identity(P3, 5)).is_identity());
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const NottinghamElt u = random_element(P3, 4, rng);
    EXPECT_TRUE(nott_compose(u, nott_inverse(u)).is_identity());
    EXPECT_TRUE(nott_compose(nott_inverse(u), u).is_identity());
  }
}

TEST(Nottingham, Substitution) {
  EXPECT_EQ(unit_subst(U("1+t", P2, 2), N("t(1+t)", P2, 2)), U("1+t+t^2", P2, 2));
  const UnitSeries f = U("1+2t+t^3", P3, 5);
  EXPECT_EQ(unit_subst(f, NottinghamElt::identity(P3, 5)), f);
  EXPECT_EQ(unit_subst(U("1+t^11", P2, 15), N("t(1+t^3+t^4)", P2, 15)),
            U("1+t^11+t^14+t^15", P2, 15));
  EXPECT_THROW(unit_subst(U("1+t", P2, 2), NottinghamElt::identity(P2, 3)), UsageError);
}

TEST(Nottingham, SubstitutionIsMultiplicative) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Prime p(i % 2 ? 3 : 5);
    const UnitSeries f = random_unit(p, 9, rng);
    const UnitSeries g = random_unit(p, 9, rng);
    const NottinghamElt u = random_element(p, 9, rng);
    EXPECT_EQ(unit_subst(f * g, u), unit_subst(f, u) * unit_subst(g, u));
  }
}

TEST(Decompose, Examples) {
  EXPECT_EQ(unit_decompose(U("1+t^2", P2, 5), 5), exps(P2, 5, {{1, 2}}));
  EXPECT_EQ(unit_decompose(U("1+t+t^2", P2, 3), 3), exps(P2, 3, {{1, 3}, {3, 1}}));
  EXPECT_EQ(unit_decompose(U("1+2t", P3, 3), 3), exps(P3, 3, {{1, 8}, {2, 2}}));
  EXPECT_THROW(unit_decompose(U("1+t", P3, 3), 4), UsageError);
}

TEST(Recompose, Examples) {
  EXPECT_TRUE(unit_recompose(ExponentVector(P3, 4), 4).is_one());
  EXPECT_EQ(unit_recompose(exps(P2, 1, {{1, 2}}), 3), U("1+t^2", P2, 3));
  EXPECT_EQ(unit_recompose(exps(P3, 2, {{1, 8}, {2, 2}}), 3), U("1+2t", P3, 3));
}

TEST(ExponentVectorTest, RejectsMultiplesOfP) {
  ExponentVector v(P3, 6);
  EXPECT_THROW(v.set(3, 1), UsageError);
  EXPECT_THROW(v.set(7, 1), UsageError);
  v.set(2, -1);
  EXPECT_EQ(v.at(2), 8);
  EXPECT_EQ(v.at(3), 0);
}

// Exponents live in Z/p^2, so E_j^{p^2} = E_{p^2 j} is invisible to them: once
// m >= p^2 the recomposition agrees with f only on the quotient.
TEST(Decompose, RoundTripBreaksAtPSquared) {
  const UnitSeries f = U("1+t^4", P2, 4);
  EXPECT_TRUE(unit_decompose(f, 4).entries().empty());
  EXPECT_TRUE(unit_recompose(unit_decompose(f, 4), 4).is_one());
}

TEST(Decompose, RoundTripRandom) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Prime p(i % 3 == 0 ? 2 : i % 3 == 1 ? 3 : 5);
    const int m = 1 + static_cast<int>(rng() % 20);
    const UnitSeries f = random_unit(p, m + static_cast<int>(rng() % 3), rng);
    const ExponentVector e = unit_decompose(f, m);
    const UnitSeries g = unit_recompose(e, m);
    ASSERT_EQ(unit_decompose(g, m), e) << format_unit(f);
    if (m < p.square()) ASSERT_EQ(g, f.truncated(m)) << format_unit(f);
  }
}

TEST(Decompose, TruncationStability) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const Prime p(i % 3 == 0 ? 2 : i % 3 == 1 ? 3 : 5);
    const int m = 1 + static_cast<int>(rng() % 12);
    const UnitSeries f = random_unit(p, m + 4, rng);
    std::vector<int> tail(f.coeffs().begin() + 1, f.coeffs().end());
    for (std::size_t k = static_cast<std::size_t>(m); k < tail.size(); ++k) {
      tail[k] = static_cast<int>(rng() % static_cast<unsigned>(p.value()));
    }
    EXPECT_EQ(unit_decompose(f, m), unit_decompose(UnitSeries(p, tail), m));
  }
}

TEST(Series, Frobenius) {
  for (int p : {2, 3, 5}) {
    const Prime prime(p);
    const int n = 20;
    for (int j = 1; j <= n / p; ++j) {
      EXPECT_EQ(unit_pow(UnitSeries::basis(prime, j, n), p), UnitSeries::basis(prime, p * j, n));
    }
  }
}

TEST(Nottingham, GroupAxiomsRandom) {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const Prime p(i % 3 == 0 ? 2 : i % 3 == 1 ? 3 : 5);
    const int n = 1 + static_cast<int>(rng() % 12);
    const NottinghamElt u = random_element(p, n, rng);
    const NottinghamElt v = random_element(p, n, rng);
    const NottinghamElt w = random_element(p, n, rng);
    EXPECT_EQ(nott_compose(nott_compose(u, v), w), nott_compose(u, nott_compose(v, w)));
    // u(v(t))/t = u(v)/v * v/t
    EXPECT_EQ(nott_compose(u, v).unit(), unit_subst(u.unit(), v) * v.unit());
  }
}
