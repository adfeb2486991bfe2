#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qrs/series.hpp"

using namespace qrs;

namespace {

using RF = RationalFunction;

RF q() { return RF::symbol(Sym::q); }

RF random_q_coeff(std::mt19937& rng) {
  std::uniform_int_distribution<int> cdist(-5, 5);
  std::uniform_int_distribution<int> edist(0, 3);
  MultiPoly p;
  for (int t = 0; t < 3; ++t) {
    p += MultiPoly::constant(cdist(rng)) * MultiPoly::symbol(Sym::q, edist(rng));
  }
  return RF::from_poly(p);
}

TruncatedSeries random_series(std::mt19937& rng, Sym var, int order,
                              int max_degree) {
  TruncatedSeries s(var, order);
  for (int j = 0; j <= max_degree && j <= order; ++j) {
    s.set_coeff(j, random_q_coeff(rng));
  }
  return s;
}

}  // namespace

TEST_CASE("series construction and coefficient access") {
  TruncatedSeries s(Sym::x, 4);
  CHECK(s.order() == 4);
  CHECK(s.var() == Sym::x);
  CHECK(s.is_zero());
  s.set_coeff(2, q());
  CHECK(s.coeff(2) == q());
  CHECK_FALSE(s.is_zero());
  CHECK_THROWS_AS(s.coeff(5), QrsError);
  CHECK_THROWS_AS(s.set_coeff(-1, RF::one()), QrsError);
  CHECK_THROWS_AS(TruncatedSeries(Sym::x, -1), QrsError);

  CHECK(TruncatedSeries::one(Sym::x, 3).coeff(0) == RF::one());
  CHECK(TruncatedSeries::monomial(Sym::x, 3, 2, q()).coeff(2) == q());
  CHECK(TruncatedSeries::monomial(Sym::x, 3, 7, q()).is_zero());
}

TEST_CASE("coefficients must not contain the expansion variable") {
  TruncatedSeries s(Sym::x, 3);
  CHECK_THROWS_AS(s.set_coeff(1, RF::symbol(Sym::x)), QrsError);
  CHECK_NOTHROW(s.set_coeff(1, RF::symbol(Sym::y)));
  CHECK_THROWS_AS(s.scale(RF::symbol(Sym::x)), QrsError);
  CHECK_THROWS_AS(s.scale_var(RF::symbol(Sym::x)), QrsError);
}

TEST_CASE("arithmetic truncates to the smaller order") {
  std::mt19937 rng(2718);
  TruncatedSeries f = random_series(rng, Sym::x, 6, 6);
  TruncatedSeries g = random_series(rng, Sym::x, 4, 4);
  TruncatedSeries sum = f + g;
  CHECK(sum.order() == 4);
  for (int j = 0; j <= 4; ++j) CHECK(sum.coeff(j) == f.coeff(j) + g.coeff(j));

  TruncatedSeries prod = f * g;
  CHECK(prod.order() == 4);
  for (int j = 0; j <= 4; ++j) {
    RF acc = RF::zero();
    for (int i = 0; i <= j; ++i) acc += f.coeff(i) * g.coeff(j - i);
    CHECK(prod.coeff(j) == acc);
  }

  CHECK((f - f).is_zero());
  CHECK((f + (-f)).is_zero());

  TruncatedSeries other(Sym::y, 4);
  CHECK_THROWS_AS(f + other, VariableMismatch);
  CHECK_THROWS_AS(f * other, VariableMismatch);
}

TEST_CASE("scale_var substitutes factor*var") {
  std::mt19937 rng(31);
  TruncatedSeries f = random_series(rng, Sym::x, 5, 5);
  TruncatedSeries g = f.scale_var(q());
  for (int j = 0; j <= 5; ++j) CHECK(g.coeff(j) == f.coeff(j) * q_power(j));
  CHECK(f.scale_var(RF::one()) == f);
  CHECK(f.scale_var(RF::zero()).coeff(0) == f.coeff(0));
  CHECK(f.scale_var(RF::zero()).coeff(3) == RF::zero());
}

TEST_CASE("shift_up and truncate") {
  TruncatedSeries f = TruncatedSeries::monomial(Sym::x, 5, 1, q());
  TruncatedSeries g = f.shift_up(2);
  CHECK(g.order() == 5);
  CHECK(g.coeff(3) == q());
  CHECK(g.coeff(1) == RF::zero());
  CHECK_THROWS_AS(f.shift_up(-1), QrsError);

  TruncatedSeries t = f.truncate(2);
  CHECK(t.order() == 2);
  CHECK(t.coeff(1) == q());
  CHECK_THROWS_AS(f.truncate(6), OrderExhausted);
}

TEST_CASE("series_invert is a two-sided inverse") {
  std::mt19937 rng(909);
  for (int trial = 0; trial < 5; ++trial) {
    TruncatedSeries f = random_series(rng, Sym::x, 6, 6);
    f.set_coeff(0, RF::one() + q());
    TruncatedSeries inv = series_invert(f);
    CHECK((f * inv) == TruncatedSeries::one(Sym::x, 6));
    CHECK((inv * f) == TruncatedSeries::one(Sym::x, 6));
  }
  TruncatedSeries g(Sym::x, 3);
  g.set_coeff(1, RF::one());
  CHECK_THROWS_AS(series_invert(g), NonUnitConstantTerm);
}

TEST_CASE("series_from_rational expands exactly") {
  Sym x = Sym::x;
  RF f = RF::one() / (RF::one() - q() * RF::symbol(x));
  TruncatedSeries s = series_from_rational(f, x, 6);
  for (int j = 0; j <= 6; ++j) CHECK(s.coeff(j) == q_power(j));

  RF g = (RF::one() + RF::symbol(x)) / (RF::one() - RF::symbol(x));
  TruncatedSeries t = series_from_rational(g, x, 5);
  CHECK(t.coeff(0) == RF::one());
  for (int j = 1; j <= 5; ++j) CHECK(t.coeff(j) == RF::constant(2));

  RF h = (RF::one() - RF::symbol(x).pow(2)) / (RF::one() - RF::symbol(x));
  TruncatedSeries u = series_from_rational(h, x, 4);
  CHECK(u.coeff(0) == RF::one());
  CHECK(u.coeff(1) == RF::one());
  CHECK(u.coeff(2) == RF::zero());

  RF denom_only = RF::one() / (RF::one() - q());
  TruncatedSeries c = series_from_rational(denom_only, x, 2);
  CHECK(c.coeff(0) == denom_only);
  CHECK(c.coeff(1) == RF::zero());
}

TEST_CASE("dq_apply matches the finite-difference form") {
  std::mt19937 rng(5555);
  TruncatedSeries f = random_series(rng, Sym::x, 8, 8);

  TruncatedSeries d1 = dq_apply(f, 1);
  CHECK(d1.order() == 7);
  for (int j = 0; j <= 7; ++j) {
    CHECK(d1.coeff(j) == f.coeff(j + 1) * (RF::one() - q_power(j + 1)));
  }

  TruncatedSeries diff = (f - f.scale_var(q())).truncate(7);
  CHECK(diff == d1.shift_up(1));

  CHECK(dq_apply(f, 0) == f);
  CHECK(dq_apply(dq_apply(f, 1), 1) == dq_apply(f, 2));
  CHECK_THROWS_AS(dq_apply(f, 9), OrderExhausted);
  CHECK_THROWS_AS(dq_apply(f, -1), QrsError);

  TruncatedSeries m = TruncatedSeries::monomial(Sym::x, 6, 4, RF::one());
  TruncatedSeries dm = dq_apply(m, 1);
  CHECK(dm.coeff(3) == RF::one() - q_power(4));
}

TEST_CASE("dq_leibniz equals dq_apply on products") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 50; ++trial) {
    TruncatedSeries f = random_series(rng, Sym::x, 9, 5);
    TruncatedSeries g = random_series(rng, Sym::x, 9, 5);
    int n = 1 + static_cast<int>(rng() % 4);
    TruncatedSeries lhs = dq_leibniz(f, g, n);
    TruncatedSeries rhs = dq_apply(f * g, n);
    CHECK(lhs == rhs);
  }
  TruncatedSeries f(Sym::x, 3), h(Sym::y, 3);
  CHECK_THROWS_AS(dq_leibniz(f, h, 1), VariableMismatch);
  CHECK_THROWS_AS(dq_leibniz(f, f, 4), OrderExhausted);
  CHECK_THROWS_AS(dq_leibniz(f, f, -1), QrsError);
}

TEST_CASE("pochhammer series modes") {
  Sym z = Sym::z;
  RF c = RF::symbol(Sym::a);

  TruncatedSeries prod = pochhammer_series(c, PochhammerMode::infinite_product, z, 6);
  TruncatedSeries inv =
      pochhammer_series(c, PochhammerMode::inverse_infinite_product, z, 6);
  CHECK((prod * inv) == TruncatedSeries::one(z, 6));

  for (int j = 0; j <= 6; ++j) {
    RF qq = RF::one();
    for (int i = 1; i <= j; ++i) qq *= RF::one() - q_power(i);
    CHECK(inv.coeff(j) == c.pow(j) / qq);
    RF signc = (j % 2 == 0) ? c.pow(j) : -c.pow(j);
    CHECK(prod.coeff(j) == q_power(choose2(j)) * signc / qq);
  }

  CHECK(pochhammer_series(RF::zero(), PochhammerMode::infinite_product, z, 4) ==
        TruncatedSeries::one(z, 4));
  CHECK_THROWS_AS(
      pochhammer_series(RF::symbol(z), PochhammerMode::infinite_product, z, 3),
      ArgumentNotSeriesPositive);
}

TEST_CASE("frozen q-exponential coefficients") {
  Sym z = Sym::z;
  TruncatedSeries eq =
      pochhammer_series(RF::one(), PochhammerMode::inverse_infinite_product, z, 3);
  TruncatedSeries Eq =
      pochhammer_series(RF::constant(-1), PochhammerMode::infinite_product, z, 3);

  RF p1 = RF::one() - q();
  RF p2 = p1 * (RF::one() - q_power(2));
  RF p3 = p2 * (RF::one() - q_power(3));

  CHECK(eq.coeff(0) == RF::one());
  CHECK(eq.coeff(1) == RF::one() / p1);
  CHECK(eq.coeff(2) == RF::one() / p2);
  CHECK(eq.coeff(3) == RF::one() / p3);

  CHECK(Eq.coeff(0) == RF::one());
  CHECK(Eq.coeff(1) == RF::one() / p1);
  CHECK(Eq.coeff(2) == q() / p2);
  CHECK(Eq.coeff(3) == q().pow(3) / p3);

  CHECK(Eq.coeff(1).str() == "-1/(-1+q)");
}

TEST_CASE("hypergeometric series reproduces the q-binomial theorem") {
  Sym z = Sym::z;
  int order = 8;
  RF av = RF::symbol(Sym::a);
  HypergeometricSpec spec{
      {av}, {}, TruncatedSeries::monomial(z, order, 1, RF::one())};
  TruncatedSeries lhs = hypergeometric_series(spec, order);
  TruncatedSeries rhs =
      pochhammer_series(av, PochhammerMode::infinite_product, z, order) *
      pochhammer_series(RF::one(), PochhammerMode::inverse_infinite_product, z,
                        order);
  CHECK(lhs == rhs);
}

TEST_CASE("hypergeometric series compensating factor and guards") {
  Sym z = Sym::z;
  int order = 4;
  TruncatedSeries zarg = TruncatedSeries::monomial(z, order, 1, RF::one());

  HypergeometricSpec phi01{{}, {RF::symbol(Sym::c)}, zarg};
  TruncatedSeries s = hypergeometric_series(phi01, order);
  for (int n = 0; n <= order; ++n) {
    RF den = RF::one();
    for (int i = 1; i <= n; ++i) {
      den *= (RF::one() - q_power(i)) *
             (RF::one() - q_power(i - 1) * RF::symbol(Sym::c));
    }
    RF comp = q_power(choose2(n));
    if (n % 2 == 1) comp = -comp;
    CHECK(s.coeff(n) == comp.pow(2) / den);
  }

  HypergeometricSpec bad{{}, {}, TruncatedSeries::one(z, order)};
  CHECK_THROWS_AS(hypergeometric_series(bad, order), ArgumentNotSeriesPositive);

  HypergeometricSpec zero_den{{}, {q_power(-1)}, zarg};
  CHECK_THROWS_AS(hypergeometric_series(zero_den, order),
                  ZeroDenominatorParameter);

  HypergeometricSpec vanishing{{q_power(-2)}, {}, zarg};
  TruncatedSeries v = hypergeometric_series(vanishing, order);
  CHECK(v.coeff(3) == RF::zero());
  CHECK(v.coeff(4) == RF::zero());
}
