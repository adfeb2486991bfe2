#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qrs/qcombinatorics.hpp"

using namespace qrs;

namespace {
using RF = RationalFunction;
RF q() { return RF::symbol(Sym::q); }
RF a() { return RF::symbol(Sym::a); }
}  // namespace

TEST_CASE("choose2") {
  CHECK(choose2(0) == 0);
  CHECK(choose2(1) == 0);
  CHECK(choose2(2) == 1);
  CHECK(choose2(5) == 10);
  CHECK(choose2(-1) == 1);
}

TEST_CASE("gaussian binomials are polynomials satisfying the Pascal rule") {
  for (int n = 0; n <= 12; ++n) {
    CHECK(qbinomial(n, 0) == RF::one());
    CHECK(qbinomial(n, n) == RF::one());
    CHECK(qbinomial(n, -1).is_zero());
    CHECK(qbinomial(n, n + 1).is_zero());
    for (int k = 0; k <= n; ++k) {
      RF b = qbinomial(n, k);
      CHECK(b.den().is_one());
      CHECK(b == qbinomial(n, n - k));
      if (n > 0 && k > 0) {
        CHECK(b == qbinomial(n - 1, k - 1) + q_power(k) * qbinomial(n - 1, k));
      }
    }
  }
}

TEST_CASE("frozen gaussian binomial values") {
  CHECK(qbinomial(4, 2).str() == "1+q+2q^2+q^3+q^4");
  CHECK(qbinomial(5, 2).str() == "1+q+2q^2+2q^3+2q^4+q^5+q^6");
  CHECK(qbinomial(6, 3).str() == "1+q+2q^2+3q^3+3q^4+3q^5+3q^6+2q^7+q^8+q^9");
}

TEST_CASE("pochhammer products") {
  CHECK(qpochhammer(a(), 0) == RF::one());
  RF acc = RF::one();
  for (int n = 0; n <= 8; ++n) {
    CHECK(qpochhammer(a(), n) == acc);
    acc *= RF::one() - q_power(n) * a();
  }
  CHECK_THROWS_AS(qpochhammer(a(), -1), QrsError);

  RF p3 = qpochhammer(a(), 3);
  RF expected = (RF::one() - a()) * (RF::one() - q() * a()) *
                (RF::one() - q().pow(2) * a());
  CHECK(p3 == expected);
}

TEST_CASE("pochhammer shift split multiplies back") {
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= 5; ++k) {
      auto [head, tail] = pochhammer_shift_split(a(), n, k);
      CHECK(head == qpochhammer(a(), n));
      CHECK(head * tail == qpochhammer(a(), n + k));
      CHECK(tail == qpochhammer(q_power(n) * a(), k));
    }
  }
}

TEST_CASE("pochhammer reverse recovers the shorter product") {
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(pochhammer_reverse(a(), n, k) == qpochhammer(a(), n - k));
    }
  }
}

TEST_CASE("symbol powers") {
  CHECK(q_power(0) == RF::one());
  CHECK(q_power(3) == q().pow(3));
  CHECK(q_power(-2) * q_power(2) == RF::one());
  CHECK(sym_power(Sym::u, 4) == RF::symbol(Sym::u).pow(4));
  CHECK(sym_power(Sym::b, -1) * RF::symbol(Sym::b) == RF::one());
}
