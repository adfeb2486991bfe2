#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qrs/families.hpp"

using namespace qrs;

namespace {
using RF = RationalFunction;
RF sym(Sym s) { return RF::symbol(s); }
RF q() { return sym(Sym::q); }

RF build(FamilyTag family, int degree,
         std::map<std::string, RF> params = {}) {
  PolySpec spec;
  spec.family = family;
  spec.degree = degree;
  spec.params = std::move(params);
  return build_polynomial(spec);
}
}  // namespace

TEST_CASE("family names round trip") {
  const FamilyTag tags[] = {
      FamilyTag::rogers_szego,         FamilyTag::generalized_rs,
      FamilyTag::hahn,                 FamilyTag::asc_general_phi,
      FamilyTag::asc_general_psi,      FamilyTag::asc_generalized_phi,
      FamilyTag::asc_generalized_psi,  FamilyTag::asc_homogeneous,
      FamilyTag::asc_homogeneous_deformed,
      FamilyTag::asc_generalized_deformed,
  };
  for (FamilyTag tag : tags) CHECK(family_from_name(family_name(tag)) == tag);
  CHECK_THROWS_AS(family_from_name("no_such_family"), UnsupportedExpression);
}

TEST_CASE("degree zero is one for every family") {
  const FamilyTag tags[] = {
      FamilyTag::rogers_szego,         FamilyTag::generalized_rs,
      FamilyTag::hahn,                 FamilyTag::asc_general_phi,
      FamilyTag::asc_general_psi,      FamilyTag::asc_generalized_phi,
      FamilyTag::asc_generalized_psi,  FamilyTag::asc_homogeneous,
      FamilyTag::asc_homogeneous_deformed,
      FamilyTag::asc_generalized_deformed,
  };
  for (FamilyTag tag : tags) CHECK(build(tag, 0) == RF::one());
}

TEST_CASE("frozen low-degree values") {
  RF x = sym(Sym::x), y = sym(Sym::y), a = sym(Sym::a);
  RF one = RF::one();

  CHECK(build(FamilyTag::rogers_szego, 2) == one + (one + q()) * x + x.pow(2));
  RF row3 = one + q() + q().pow(2);
  CHECK(build(FamilyTag::rogers_szego, 3) ==
        one + row3 * x + row3 * x.pow(2) + x.pow(3));

  CHECK(build(FamilyTag::generalized_rs, 2) ==
        y.pow(2) + (one + q()) * x * y + x.pow(2));

  CHECK(build(FamilyTag::hahn, 2) ==
        y.pow(2) + (one + q()) * (one - a) * x * y +
            (one - a) * (one - a * q()) * x.pow(2));

  RF u = sym(Sym::u);
  CHECK(build(FamilyTag::asc_homogeneous_deformed, 2) ==
        y.pow(2) - (one + q()) * (one - a) * x * y / u +
            (one - a) * (one - a * q()) * x.pow(2) / u);

  RF b = sym(Sym::b), c = sym(Sym::c);
  RF r1 = (one - a) * (one - b) / (one - c);
  RF r2 = r1 * (one - a * q()) * (one - b * q()) / (one - c * q());
  CHECK(build(FamilyTag::asc_generalized_deformed, 2) ==
        y.pow(2) + (one + q()) * r1 * x * y / u + r2 * x.pow(2) / u);
  CHECK(build(FamilyTag::asc_generalized_psi, 2) ==
        y.pow(2) - (one + q()) * r1 * x * y / q() + r2 * x.pow(2) / q());
}

TEST_CASE("parameter slots default to symbols and reject strangers") {
  CHECK(build(FamilyTag::rogers_szego, 2, {{"x", sym(Sym::z)}}) ==
        RF::one() + (RF::one() + q()) * sym(Sym::z) + sym(Sym::z).pow(2));
  CHECK_THROWS_AS(build(FamilyTag::rogers_szego, 2, {{"y", sym(Sym::z)}}),
                  UnsupportedExpression);
  CHECK_THROWS_AS(build(FamilyTag::hahn, 2, {{"u", q()}}),
                  UnsupportedExpression);
  PolySpec negative;
  negative.degree = -1;
  CHECK_THROWS_AS(build_polynomial(negative), UnsupportedExpression);
}

TEST_CASE("general five-parameter family uses v for the fifth slot") {
  RF with_default = build(FamilyTag::asc_general_phi, 2);
  RF with_explicit =
      build(FamilyTag::asc_general_phi, 2, {{"e", sym(Sym::v)}});
  CHECK(with_default == with_explicit);
  CHECK(with_default.depends_on(Sym::v));

  RF ratio = (RF::one() - sym(Sym::a)) * (RF::one() - sym(Sym::b)) *
             (RF::one() - sym(Sym::c)) /
             ((RF::one() - sym(Sym::d)) * (RF::one() - sym(Sym::v)));
  RF x = sym(Sym::x), y = sym(Sym::y);
  CHECK(build(FamilyTag::asc_general_phi, 1) == ratio * (x + y));
  CHECK(build(FamilyTag::asc_general_psi, 1) == ratio * (x - y));
  RF r2 = ratio * (RF::one() - sym(Sym::a) * q()) *
          (RF::one() - sym(Sym::b) * q()) * (RF::one() - sym(Sym::c) * q()) /
          ((RF::one() - sym(Sym::d) * q()) * (RF::one() - sym(Sym::v) * q()));
  CHECK(build(FamilyTag::asc_general_psi, 2) ==
        r2 * (x.pow(2) - (RF::one() + q()) * x * y / q() + y.pow(2)));
}

TEST_CASE("zero denominator parameters are rejected") {
  CHECK_THROWS_AS(
      build(FamilyTag::asc_generalized_phi, 2, {{"c", q_power(-1)}}),
      ZeroDenominatorParameter);
  CHECK_THROWS_AS(build(FamilyTag::asc_general_phi, 2, {{"d", q_power(-1)}}),
                  ZeroDenominatorParameter);
  CHECK_NOTHROW(
      build(FamilyTag::asc_generalized_phi, 1, {{"c", q_power(-1)}}));
}

TEST_CASE("specialization lattice") {
  RF qq = q();
  for (int n = 0; n <= 6; ++n) {
    CHECK(build(FamilyTag::asc_homogeneous_deformed, n, {{"u", qq}}) ==
          build(FamilyTag::asc_homogeneous, n));
    CHECK(build(FamilyTag::asc_generalized_deformed, n,
                {{"u", qq}, {"x", -sym(Sym::x)}}) ==
          build(FamilyTag::asc_generalized_psi, n));
    CHECK(build(FamilyTag::hahn, n, {{"a", RF::zero()}}) ==
          build(FamilyTag::generalized_rs, n));
    CHECK(build(FamilyTag::generalized_rs, n, {{"y", RF::one()}}) ==
          build(FamilyTag::rogers_szego, n));
  }
}

TEST_CASE("deformed plus powers") {
  RF c = sym(Sym::c), u = sym(Sym::u);
  CHECK(deformed_plus_power(0, c, Sym::u) == RF::one());
  CHECK(deformed_plus_power(2, c, Sym::u) ==
        RF::one() + (RF::one() + q()) * c / u + c.pow(2) / u);
  RF row3 = RF::one() + q() + q().pow(2);
  CHECK(deformed_plus_power(3, c, Sym::u) ==
        RF::one() + row3 * c / u.pow(2) + row3 * c.pow(2) / u.pow(3) +
            c.pow(3) / u.pow(3));
  CHECK_THROWS_AS(deformed_plus_power(-1, c, Sym::u), UnsupportedExpression);
}

TEST_CASE("plus powers with q deformation close to a pochhammer product") {
  RF ab = sym(Sym::a) * sym(Sym::b);
  for (int n = 0; n <= 6; ++n) {
    RF lhs = deformed_plus_power(n, ab, Sym::q);
    RF rhs = qpochhammer(-(q_power(1 - n) * ab), n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("hahn generating function check passes") {
  VerificationReport report = hahn_generating_check(4, 4);
  CHECK(report.id == "fam-hahn-gf");
  CHECK(report.status == VerifyStatus::pass);
  CHECK(report.order_checked == 4);
  CHECK_FALSE(report.first_mismatch.has_value());
}
