#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <random>

#include "doctest.h"
#include "qrs/rational_function.hpp"

using namespace qrs;

namespace {

using RF = RationalFunction;

RF sym(Sym s) { return RF::symbol(s); }

MultiPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> term_count(1, 4);
  std::uniform_int_distribution<int> expo(0, 3);
  std::uniform_int_distribution<int> coeff(-5, 5);
  const std::array<Sym, 3> vars = {Sym::q, Sym::x, Sym::y};
  MultiPoly p;
  int t = term_count(rng);
  for (int i = 0; i < t; ++i) {
    ExpVec e{};
    for (Sym s : vars) e[static_cast<int>(s)] = static_cast<int16_t>(expo(rng));
    p.add_term(e, Rat(coeff(rng)));
  }
  return p;
}

RF random_rf(std::mt19937& rng) {
  MultiPoly num = random_poly(rng);
  MultiPoly den = random_poly(rng);
  while (den.is_zero()) den = random_poly(rng);
  return RF(num, den);
}

std::array<Rat, kNumSymbols> random_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> v(2, 40);
  std::array<Rat, kNumSymbols> point;
  for (auto& r : point) r = Rat(v(rng), v(rng));
  return point;
}

}  // namespace

TEST_CASE("canonical form invariants") {
  MultiPoly x = MultiPoly::symbol(Sym::x);
  MultiPoly y = MultiPoly::symbol(Sym::y);

  RF reduced(x * x - y * y, x - y);
  CHECK(reduced == RF::from_poly(x + y));
  CHECK(reduced.den().is_one());

  RF scaled(x.multiply_rat(Rat(6)), y.multiply_rat(Rat(4)));
  CHECK(scaled.num() == x.multiply_rat(Rat(3)));
  CHECK(scaled.den() == y.multiply_rat(Rat(2)));

  RF sign_fixed(x, -y);
  CHECK(sign_fixed.den() == y);
  CHECK(sign_fixed.num() == -x);

  RF zero(MultiPoly::zero(), x + y);
  CHECK(zero.is_zero());
  CHECK(zero.den().is_one());

  CHECK_THROWS_AS(RF(x, MultiPoly::zero()), DivisionByZero);
}

TEST_CASE("equal values get equal representations") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    RF f = random_rf(rng);
    MultiPoly junk = random_poly(rng);
    if (junk.is_zero()) continue;
    RF inflated(f.num() * junk, f.den() * junk);
    CHECK(inflated == f);
    CHECK(inflated.str() == f.str());
  }
}

TEST_CASE("field laws on random values") {
  std::mt19937 rng(161803);
  for (int trial = 0; trial < 20; ++trial) {
    RF a = random_rf(rng);
    RF b = random_rf(rng);
    RF c = random_rf(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a + RF::zero() == a);
    CHECK(a * RF::one() == a);
    if (!a.is_zero()) {
      CHECK(a / a == RF::one());
      CHECK((b / a) * a == b);
    }
  }
  CHECK_THROWS_AS(RF::one() / RF::zero(), DivisionByZero);
}

TEST_CASE("compound assignment matches binary operators") {
  std::mt19937 rng(271828);
  RF a = random_rf(rng);
  RF b = random_rf(rng);
  RF t = a;
  t += b;
  CHECK(t == a + b);
  t = a;
  t -= b;
  CHECK(t == a - b);
  t = a;
  t *= b;
  CHECK(t == a * b);
  if (!b.is_zero()) {
    t = a;
    t /= b;
    CHECK(t == a / b);
  }
}

TEST_CASE("pow and symbol_power") {
  RF q = sym(Sym::q);
  CHECK(q.pow(0) == RF::one());
  CHECK(q.pow(3) == q * q * q);
  RF neg = RF::symbol_power(Sym::q, -3);
  CHECK(neg * q.pow(3) == RF::one());
  RF f = (q + RF::one()) / (q - RF::one());
  CHECK(f.pow(-2) * f.pow(2) == RF::one());
}

TEST_CASE("substitution is a field homomorphism") {
  std::mt19937 rng(5150);
  RF repl = (sym(Sym::q) + RF::constant(2)) / (sym(Sym::y) + RF::one());
  for (int trial = 0; trial < 10; ++trial) {
    RF a = random_rf(rng);
    RF b = random_rf(rng);
    CHECK((a + b).substitute(Sym::x, repl) ==
          a.substitute(Sym::x, repl) + b.substitute(Sym::x, repl));
    CHECK((a * b).substitute(Sym::x, repl) ==
          a.substitute(Sym::x, repl) * b.substitute(Sym::x, repl));
  }
  CHECK(sym(Sym::x).substitute(Sym::x, repl) == repl);
  CHECK(sym(Sym::y).substitute(Sym::x, repl) == sym(Sym::y));
}

TEST_CASE("evaluation agrees with arithmetic") {
  std::mt19937 rng(90210);
  for (int trial = 0; trial < 10; ++trial) {
    RF a = random_rf(rng);
    RF b = random_rf(rng);
    std::array<Rat, kNumSymbols> point = random_point(rng);
    Rat ea;
    Rat eb;
    try {
      ea = a.evaluate(point);
      eb = b.evaluate(point);
    } catch (const DivisionByZero&) {
      continue;
    }
    CHECK((a + b).evaluate(point) == ea + eb);
    CHECK((a * b).evaluate(point) == ea * eb);
  }

  RF pole = RF::one() / (sym(Sym::x) - RF::one());
  std::array<Rat, kNumSymbols> at_one;
  at_one.fill(Rat(1));
  CHECK_THROWS_AS(pole.evaluate(at_one), DivisionByZero);
}

TEST_CASE("string form") {
  RF q = sym(Sym::q);
  CHECK(RF::zero().str() == "0");
  CHECK(RF::one().str() == "1");
  CHECK((q + RF::one()).str() == "1+q");
  CHECK((RF::one() / (q - RF::one())).str() == "1/(-1+q)");
  CHECK(RF::symbol_power(Sym::q, -2).str() == "1/q^2");
}
