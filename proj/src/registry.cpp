#include <string>
#include <utility>
#include <vector>

#include "qrs/families.hpp"
#include "qrs/operators.hpp"
#include "qrs/verifier.hpp"

namespace qrs {

namespace {

using RF = RationalFunction;

RF sym(Sym s) { return RF::symbol(s); }

RF spow(Sym s, long long e) { return sym_power(s, e); }

// (q;q)_n
RF qfac(int n) { return qpochhammer(sym(Sym::q), n); }

RF psi_h(int n, const RF& aa, const RF& arg_x, const RF& arg_y, const RF& w) {
  PolySpec spec;
  spec.family = FamilyTag::asc_homogeneous_deformed;
  spec.degree = n;
  spec.params = {{"a", aa}, {"x", arg_x}, {"y", arg_y}, {"u", w}};
  return build_polynomial(spec);
}

RF phi_hahn(int n, const RF& al, const RF& arg_x, const RF& arg_y) {
  PolySpec spec;
  spec.family = FamilyTag::hahn;
  spec.degree = n;
  spec.params = {{"a", al}, {"x", arg_x}, {"y", arg_y}};
  return build_polynomial(spec);
}

// u^(m-n) q^(n+1-m) b, the argument slot that repairs the monomial action
RF rebalanced_slot(int m, int n, const RF& bc, Sym ud) {
  return spow(ud, m - n) * q_power(n + 1 - m) * bc;
}

TruncatedSeries eq_series(const RF& cf, Sym var, int order) {
  return pochhammer_series(cf, PochhammerMode::inverse_infinite_product, var,
                           order);
}

TruncatedSeries bigeq_series(const RF& cf, Sym var, int order) {
  return pochhammer_series(cf, PochhammerMode::infinite_product, var, order);
}

// 1/(1 - cf*var)
TruncatedSeries geom_series(const RF& cf, Sym var, int order) {
  TruncatedSeries out(var, order);
  RF power = RF::one();
  for (int j = 0; j <= order; ++j) {
    out.set_coeff(j, power);
    if (j < order) power *= cf;
  }
  return out;
}

TruncatedSeries apply_g(int degree, const RF& coeff,
                        const TruncatedSeries& base) {
  OperatorSpec op;
  op.kind = OperatorKind::g_deformed;
  op.degree = degree;
  op.coefficient = coeff;
  op.deformation = sym(Sym::u);
  return apply_operator(op, base);
}

TruncatedSeries apply_h(int degree, const RF& coeff,
                        const TruncatedSeries& base) {
  OperatorSpec op;
  op.kind = OperatorKind::h_rs;
  op.degree = degree;
  op.coefficient = coeff;
  return apply_operator(op, base);
}

TruncatedSeries apply_s(int degree, const RF& coeff,
                        const TruncatedSeries& base) {
  OperatorSpec op;
  op.kind = OperatorKind::s_shifted;
  op.degree = degree;
  op.coefficient = coeff;
  return apply_operator(op, base);
}

// Grid of the infinite q-exponential operator acting on a series in
// base.var(): cell (i, k) holds the coefficient of base.var()^i in
// q^binom(k,2) D^k{base} / (q;q)_k, with axis 2 grading the k-th power of the
// operator coefficient.  The base must carry order 2*order.
BivariateSeries e_operator_grid(const TruncatedSeries& base, Sym coeff_axis,
                                int order) {
  BivariateSeries grid(base.var(), coeff_axis, order, order);
  TruncatedSeries dk = base;
  RF weight_qfac = RF::one();
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      dk = dq_apply(dk, 1);
      weight_qfac *= RF::one() - q_power(k);
    }
    RF w = q_power(choose2(k)) / weight_qfac;
    for (int i = 0; i <= order; ++i) {
      grid.set_coeff(i, k, w * dk.coeff(i));
    }
  }
  return grid;
}

// Bidegree coefficients of a rational function whose denominator is free of
// both grid variables.
BivariateSeries grid_from_rational(const RF& f, Sym v1, Sym v2, int order1,
                                   int order2) {
  const int i1 = static_cast<int>(v1);
  const int i2 = static_cast<int>(v2);
  for (const auto& [exps, coef] : f.den().terms()) {
    (void)coef;
    if (exps[i1] != 0 || exps[i2] != 0) {
      throw UnsupportedExpression(
          "grid_from_rational: denominator depends on a grid variable");
    }
  }
  BivariateSeries grid(v1, v2, order1, order2);
  for (int i = 0; i <= order1; ++i) {
    MultiPoly pi = f.num().coeff_of(v1, i);
    if (pi.is_zero()) continue;
    for (int j = 0; j <= order2; ++j) {
      MultiPoly pij = pi.coeff_of(v2, j);
      if (pij.is_zero()) continue;
      grid.set_coeff(i, j, RF(std::move(pij), f.den()));
    }
  }
  return grid;
}

int meta_int(const MetaMap& meta, const char* name) { return meta.at(name); }

IdentityRecord series_record(std::string id, std::string description,
                             std::vector<MetaRange> meta, Sym var,
                             ExpectedStatus expected, SideBuilder lhs,
                             SideBuilder rhs) {
  IdentityRecord rec;
  rec.id = std::move(id);
  rec.description = std::move(description);
  rec.meta_params = std::move(meta);
  rec.expansion_var = var;
  rec.expected_status = expected;
  rec.lhs_builder = std::move(lhs);
  rec.rhs_builder = std::move(rhs);
  return rec;
}

// --------------------------------------------------------------------------
// base-identity records
// --------------------------------------------------------------------------

void add_base_identities(std::vector<IdentityRecord>& out) {
  out.push_back(series_record(
      "s1-qbinomial-theorem",
      "generating function of (a;q)_n/(q;q)_n against the quotient of two "
      "infinite products",
      {}, Sym::z, ExpectedStatus::pass,
      [](const MetaMap&, int order) -> Expansion {
        TruncatedSeries lhs(Sym::z, order);
        RF poch = RF::one();
        RF fac = RF::one();
        for (int n = 0; n <= order; ++n) {
          lhs.set_coeff(n, poch / fac);
          poch *= RF::one() - q_power(n) * sym(Sym::a);
          fac *= RF::one() - q_power(n + 1);
        }
        return lhs;
      },
      [](const MetaMap&, int order) -> Expansion {
        return bigeq_series(sym(Sym::a), Sym::z, order) *
               eq_series(RF::one(), Sym::z, order);
      }));

  out.push_back(series_record(
      "s1-poch-quotient",
      "finite Pochhammer product as a quotient of two infinite products, "
      "expanded in a",
      {{"n", 0, 8}}, Sym::a, ExpectedStatus::pass,
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        return series_from_rational(qpochhammer(sym(Sym::a), n), Sym::a,
                                    order);
      },
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        return bigeq_series(RF::one(), Sym::a, order) *
               eq_series(q_power(n), Sym::a, order);
      }));

  out.push_back(series_record(
      "s1-poch-split",
      "index-addition splitting of a finite Pochhammer product, graded by "
      "the shift length",
      {{"n", 0, 8}}, Sym::z, ExpectedStatus::pass,
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        TruncatedSeries lhs(Sym::z, order);
        for (int k = 0; k <= order; ++k) {
          lhs.set_coeff(k, qpochhammer(sym(Sym::a), n + k));
        }
        return lhs;
      },
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        TruncatedSeries rhs(Sym::z, order);
        for (int k = 0; k <= order; ++k) {
          auto [head, tail] = pochhammer_shift_split(sym(Sym::a), n, k);
          rhs.set_coeff(k, head * tail);
        }
        return rhs;
      }));

  out.push_back(series_record(
      "s1-poch-reverse",
      "reversal formula for a finite Pochhammer product with lowered index, "
      "graded by the drop",
      {{"n", 0, 8}}, Sym::z, ExpectedStatus::pass,
      [](const MetaMap& meta, int) -> Expansion {
        int n = meta_int(meta, "n");
        TruncatedSeries lhs(Sym::z, n);
        for (int k = 0; k <= n; ++k) {
          lhs.set_coeff(k, qpochhammer(sym(Sym::a), n - k));
        }
        return lhs;
      },
      [](const MetaMap& meta, int) -> Expansion {
        int n = meta_int(meta, "n");
        TruncatedSeries rhs(Sym::z, n);
        for (int k = 0; k <= n; ++k) {
          rhs.set_coeff(k, pochhammer_reverse(sym(Sym::a), n, k));
        }
        return rhs;
      }));

  auto leibniz_lhs = [](const MetaMap& meta, int order) -> Expansion {
    int n = meta_int(meta, "n");
    TruncatedSeries f = eq_series(sym(Sym::a), Sym::x, order + n);
    TruncatedSeries g = bigeq_series(sym(Sym::b), Sym::x, order + n);
    return dq_apply(f * g, n);
  };

  out.push_back(series_record(
      "s1-leibniz",
      "twisted product rule for the n-fold q-derivative with the twist "
      "exponent as printed",
      {{"n", 0, 3}}, Sym::x, ExpectedStatus::known_discrepancy, leibniz_lhs,
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        TruncatedSeries f = eq_series(sym(Sym::a), Sym::x, order + n);
        TruncatedSeries g = bigeq_series(sym(Sym::b), Sym::x, order + n);
        TruncatedSeries rhs(Sym::x, order);
        for (int k = 0; k <= n; ++k) {
          TruncatedSeries fk = dq_apply(f, k).truncate(order);
          TruncatedSeries gk =
              dq_apply(g.scale_var(q_power(k)), n - k).truncate(order);
          RF weight =
              qbinomial(n, k) * q_power(static_cast<long long>(k) * (n - k));
          rhs = rhs + (fk * gk).scale(weight);
        }
        return rhs;
      }));

  out.push_back(series_record(
      "s1-leibniz-corrected",
      "twisted product rule for the n-fold q-derivative with the inverted "
      "twist exponent",
      {{"n", 0, 3}}, Sym::x, ExpectedStatus::pass, leibniz_lhs,
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        TruncatedSeries f = eq_series(sym(Sym::a), Sym::x, order + n);
        TruncatedSeries g = bigeq_series(sym(Sym::b), Sym::x, order + n);
        return dq_leibniz(f, g, n);
      }));
}

// --------------------------------------------------------------------------
// polynomial-family generating functions
// --------------------------------------------------------------------------

// five-parameter sum with the coefficient ratio indexed by the summation
// variable instead of the outer degree
RF five_param_kindex(int n, bool psi_sign) {
  RF result = RF::zero();
  RF num = RF::one();
  RF den = RF::one();
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      RF shift = q_power(k - 1);
      num *= (RF::one() - shift * sym(Sym::a)) *
             (RF::one() - shift * sym(Sym::b)) *
             (RF::one() - shift * sym(Sym::c));
      den *= (RF::one() - shift * sym(Sym::d)) *
             (RF::one() - shift * sym(Sym::v));
    }
    RF term = qbinomial(n, k) * num / den * spow(Sym::x, n - k) *
              spow(Sym::y, k);
    if (psi_sign) {
      term *= q_power(static_cast<long long>(k) * (k - n));
      if (k % 2 == 1) term = -term;
    }
    result += term;
  }
  return result;
}

void add_family_generating_functions(std::vector<IdentityRecord>& out) {
  {
    IdentityRecord rec;
    rec.id = "fam-hahn-gf";
    rec.description =
        "generating function of the one-parameter two-variable family "
        "against three infinite products";
    rec.expansion_var = Sym::z;
    rec.expected_status = ExpectedStatus::pass;
    rec.direct_check = [](const MetaMap&, int order) {
      return hahn_generating_check(order, order);
    };
    rec.lhs_builder = [](const MetaMap&, int order) -> Expansion {
      TruncatedSeries lhs(Sym::z, order);
      RF fac = RF::one();
      for (int n = 0; n <= order; ++n) {
        PolySpec spec;
        spec.family = FamilyTag::hahn;
        spec.degree = n;
        lhs.set_coeff(n, build_polynomial(spec) / fac);
        fac *= RF::one() - q_power(n + 1);
      }
      return lhs;
    };
    out.push_back(std::move(rec));
  }

  auto phi_rhs = [](const MetaMap&, int order) -> Expansion {
    HypergeometricSpec spec{
        {sym(Sym::a), sym(Sym::b), sym(Sym::c)},
        {sym(Sym::d), sym(Sym::v)},
        TruncatedSeries::monomial(Sym::z, order, 1, sym(Sym::y))};
    return eq_series(sym(Sym::x), Sym::z, order) *
           hypergeometric_series(spec, order);
  };

  auto psi_rhs = [](const MetaMap&, int order) -> Expansion {
    TruncatedSeries hyp(Sym::z, order);
    RF num = RF::one();
    RF den = RF::one();
    for (int k = 0; k <= order; ++k) {
      if (k > 0) {
        RF shift = q_power(k - 1);
        num *= (RF::one() - shift * sym(Sym::a)) *
               (RF::one() - shift * sym(Sym::b)) *
               (RF::one() - shift * sym(Sym::c));
        den *= (RF::one() - q_power(k)) * (RF::one() - shift * sym(Sym::d)) *
               (RF::one() - shift * sym(Sym::v));
      }
      hyp.set_coeff(k, q_power(choose2(k)) * num / den * spow(Sym::y, k));
    }
    return eq_series(sym(Sym::x), Sym::z, order) * hyp;
  };

  auto family_gf_lhs = [](FamilyTag family, bool kindex, bool psi_sign) {
    return [family, kindex, psi_sign](const MetaMap&, int order) -> Expansion {
      TruncatedSeries lhs(Sym::z, order);
      RF fac = RF::one();
      for (int n = 0; n <= order; ++n) {
        RF poly;
        if (kindex) {
          poly = five_param_kindex(n, psi_sign);
        } else {
          PolySpec spec;
          spec.family = family;
          spec.degree = n;
          poly = build_polynomial(spec);
        }
        lhs.set_coeff(n, poly / fac);
        fac *= RF::one() - q_power(n + 1);
      }
      return lhs;
    };
  };

  out.push_back(series_record(
      "fam-general-phi-gf",
      "generating function of the five-parameter phi family with the "
      "coefficient ratio indexed by the outer degree",
      {}, Sym::z, ExpectedStatus::known_discrepancy,
      family_gf_lhs(FamilyTag::asc_general_phi, false, false), phi_rhs));

  out.push_back(series_record(
      "fam-general-phi-gf-kindex",
      "generating function of the five-parameter phi family with the "
      "coefficient ratio indexed by the summation variable",
      {}, Sym::z, ExpectedStatus::pass,
      family_gf_lhs(FamilyTag::asc_general_phi, true, false), phi_rhs));

  out.push_back(series_record(
      "fam-general-psi-gf",
      "generating function of the five-parameter psi family with the "
      "coefficient ratio indexed by the outer degree",
      {}, Sym::z, ExpectedStatus::known_discrepancy,
      family_gf_lhs(FamilyTag::asc_general_psi, false, true), psi_rhs));

  out.push_back(series_record(
      "fam-general-psi-gf-kindex",
      "generating function of the five-parameter psi family with the "
      "coefficient ratio indexed by the summation variable",
      {}, Sym::z, ExpectedStatus::known_discrepancy,
      family_gf_lhs(FamilyTag::asc_general_psi, true, true), psi_rhs));
}

// --------------------------------------------------------------------------
// finite and infinite operator identities
// --------------------------------------------------------------------------

void add_operator_identities(std::vector<IdentityRecord>& out) {
  auto monomial_lhs = [](const MetaMap& meta, int) -> Expansion {
    int n = meta_int(meta, "n");
    int m = meta_int(meta, "m");
    TruncatedSeries base =
        TruncatedSeries::monomial(Sym::x, m + n, m, RF::one());
    return apply_g(n, sym(Sym::b), base);
  };

  {
    IdentityRecord rec;
    rec.id = "s2-thm1-monomial";
    rec.description =
        "deformed finite operator on a monomial against the deformed "
        "homogeneous polynomial with the argument slot as printed";
    rec.meta_params = {{"n", 0, 4}, {"m", 0, 4}};
    rec.expansion_var = Sym::x;
    rec.expected_status = ExpectedStatus::known_discrepancy;
    rec.lhs_builder = monomial_lhs;
    rec.direct_check = [](const MetaMap& meta, int) {
      return monomial_action_check(meta_int(meta, "n"), meta_int(meta, "m"),
                                   false);
    };
    out.push_back(std::move(rec));
  }
  {
    IdentityRecord rec;
    rec.id = "s2-thm1-monomial-corrected";
    rec.description =
        "deformed finite operator on a monomial against the deformed "
        "homogeneous polynomial with the rebalanced argument slot";
    rec.meta_params = {{"n", 0, 4}, {"m", 0, 4}};
    rec.expansion_var = Sym::x;
    rec.expected_status = ExpectedStatus::pass;
    rec.lhs_builder = monomial_lhs;
    rec.direct_check = [](const MetaMap& meta, int) {
      return gn_monomial_theorem_check(meta_int(meta, "n"),
                                       meta_int(meta, "m"));
    };
    out.push_back(std::move(rec));
  }

  out.push_back(series_record(
      "s2-thm1-tdeformed-monomial",
      "deformed infinite operator on a monomial against its binomial "
      "expansion",
      {{"m", 0, 4}}, Sym::x, ExpectedStatus::pass,
      [](const MetaMap& meta, int) -> Expansion {
        int m = meta_int(meta, "m");
        OperatorSpec op;
        op.kind = OperatorKind::T_deformed;
        op.coefficient = sym(Sym::b);
        op.deformation = sym(Sym::u);
        return apply_operator(
            op, TruncatedSeries::monomial(Sym::x, m, m, RF::one()));
      },
      [](const MetaMap& meta, int) -> Expansion {
        int m = meta_int(meta, "m");
        TruncatedSeries rhs(Sym::x, m);
        for (int k = 0; k <= m; ++k) {
          rhs.set_coeff(m - k, qbinomial(m, k) * spow(Sym::u, choose2(k)) *
                                   sym(Sym::b).pow(k));
        }
        return rhs;
      }));

  out.push_back(series_record(
      "s2-thm2-eq-inv-poch",
      "deformed finite operator on one reciprocal infinite product against "
      "the deformed plus-power multiple",
      {{"n", 0, 3}}, Sym::x, ExpectedStatus::pass,
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        return apply_g(n, sym(Sym::b),
                       eq_series(sym(Sym::a), Sym::x, order + n));
      },
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        RF factor = spow(Sym::u, choose2(n)) *
                    deformed_plus_power(n, sym(Sym::a) * sym(Sym::b), Sym::u);
        return eq_series(sym(Sym::a), Sym::x, order).scale(factor);
      }));

  out.push_back(series_record(
      "s2-bullet-u1-rs",
      "undeformed finite operator on a reciprocal product against the "
      "symmetric binomial polynomial multiple",
      {{"n", 0, 3}}, Sym::x, ExpectedStatus::pass,
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        return apply_h(n, sym(Sym::b),
                       eq_series(sym(Sym::a), Sym::x, order + n));
      },
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        PolySpec spec;
        spec.family = FamilyTag::rogers_szego;
        spec.degree = n;
        spec.params = {{"x", sym(Sym::a) * sym(Sym::b)}};
        return eq_series(sym(Sym::a), Sym::x, order)
            .scale(build_polynomial(spec));
      }));

  out.push_back(series_record(
      "s2-bullet-uq-sfact",
      "shifted finite operator on a reciprocal product against a finite "
      "Pochhammer multiple",
      {{"n", 0, 3}}, Sym::x, ExpectedStatus::pass,
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        return apply_s(n, sym(Sym::b),
                       eq_series(sym(Sym::a), Sym::x, order + n));
      },
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        RF factor =
            q_power(choose2(n)) *
            qpochhammer(-q_power(1 - n) * sym(Sym::a) * sym(Sym::b), n);
        return eq_series(sym(Sym::a), Sym::x, order).scale(factor);
      }));

  out.push_back(series_record(
      "dpp-rothe-uq",
      "deformed plus-power at deformation q against a finite Pochhammer "
      "product, graded by the exponent",
      {}, Sym::z, ExpectedStatus::pass,
      [](const MetaMap&, int order) -> Expansion {
        TruncatedSeries lhs(Sym::z, order);
        for (int n = 0; n <= order; ++n) {
          lhs.set_coeff(
              n, deformed_plus_power(n, sym(Sym::a) * sym(Sym::b), Sym::q));
        }
        return lhs;
      },
      [](const MetaMap&, int order) -> Expansion {
        TruncatedSeries rhs(Sym::z, order);
        for (int n = 0; n <= order; ++n) {
          rhs.set_coeff(n, qpochhammer(
                               -q_power(1 - n) * sym(Sym::a) * sym(Sym::b), n));
        }
        return rhs;
      }));

  auto thm3_lhs = [](const MetaMap& meta, int order) -> Expansion {
    int n = meta_int(meta, "n");
    return apply_g(n, sym(Sym::b),
                   bigeq_series(sym(Sym::a), Sym::x, order + n));
  };

  out.push_back(series_record(
      "s2-thm3-eq-poch",
      "deformed finite operator on one infinite product against a deformed "
      "polynomial multiple without the deformation prefactor",
      {{"n", 0, 3}}, Sym::x, ExpectedStatus::known_discrepancy, thm3_lhs,
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        PolySpec spec;
        spec.family = FamilyTag::asc_generalized_deformed;
        spec.degree = n;
        spec.params = {{"a", RF::zero()},
                       {"b", RF::zero()},
                       {"c", sym(Sym::a)},
                       {"x", sym(Sym::a) * sym(Sym::b)},
                       {"y", RF::one()}};
        return bigeq_series(sym(Sym::a), Sym::x, order)
            .scale(build_polynomial(spec));
      }));

  out.push_back(series_record(
      "s2-thm3-eq-poch-corrected",
      "deformed finite operator on one infinite product against the "
      "prefactored sum of alternating shifted products",
      {{"n", 0, 3}}, Sym::x, ExpectedStatus::pass, thm3_lhs,
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        TruncatedSeries rhs(Sym::x, order);
        RF ab = sym(Sym::a) * sym(Sym::b);
        for (int k = 0; k <= n; ++k) {
          RF w = qbinomial(n, k) *
                 spow(Sym::u, choose2(k + 1) - static_cast<long long>(n) * k) *
                 q_power(choose2(k)) * ab.pow(k);
          if (k % 2 == 1) w = -w;
          rhs = rhs +
                bigeq_series(sym(Sym::a) * q_power(k), Sym::x, order).scale(w);
        }
        return Expansion(rhs.scale(spow(Sym::u, choose2(n))));
      }));

  out.push_back(series_record(
      "s2-thm4-two-eq-hahn",
      "deformed finite operator on two reciprocal products against a "
      "parameter-weighted polynomial sum",
      {{"n", 0, 3}}, Sym::x, ExpectedStatus::pass,
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        TruncatedSeries base =
            eq_series(sym(Sym::b), Sym::x, order + n) *
            eq_series(sym(Sym::c), Sym::x, order + n);
        return apply_g(n, sym(Sym::a), base);
      },
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        RF pol = RF::zero();
        for (int k = 0; k <= n; ++k) {
          pol += qbinomial(n, k) *
                 spow(Sym::u, choose2(k + 1) - static_cast<long long>(n) * k) *
                 sym(Sym::a).pow(k) *
                 phi_hahn(k, sym(Sym::c) * sym(Sym::x), sym(Sym::b),
                          sym(Sym::c));
        }
        pol *= spow(Sym::u, choose2(n));
        TruncatedSeries base = eq_series(sym(Sym::b), Sym::x, order) *
                               eq_series(sym(Sym::c), Sym::x, order);
        return base * series_from_rational(pol, Sym::x, order);
      }));

  out.push_back(series_record(
      "s2-thm5-phi-sum",
      "exponential generating sum of the one-parameter family against a "
      "ratio of infinite products, expanded in a",
      {}, Sym::a, ExpectedStatus::pass,
      [](const MetaMap&, int order) -> Expansion {
        TruncatedSeries lhs(Sym::a, order);
        RF fac = RF::one();
        for (int k = 0; k <= order; ++k) {
          lhs.set_coeff(k, phi_hahn(k, sym(Sym::c) * sym(Sym::x), sym(Sym::b),
                                    sym(Sym::c)) /
                               fac);
          fac *= RF::one() - q_power(k + 1);
        }
        return lhs;
      },
      [](const MetaMap&, int order) -> Expansion {
        return bigeq_series(sym(Sym::b) * sym(Sym::c) * sym(Sym::x), Sym::a,
                            order) *
               eq_series(sym(Sym::c), Sym::a, order) *
               eq_series(sym(Sym::b), Sym::a, order);
      }));
}

// --------------------------------------------------------------------------
// infinite-operator grid identities and nested finite-operator identities
// --------------------------------------------------------------------------

void add_grid_and_nested_identities(std::vector<IdentityRecord>& out) {
  auto thm6_lhs = [](const MetaMap&, int order) -> Expansion {
    TruncatedSeries base = eq_series(sym(Sym::b), Sym::x, 2 * order) *
                           eq_series(sym(Sym::c), Sym::x, 2 * order);
    return e_operator_grid(base, Sym::a, order);
  };

  auto thm6_rhs = [](bool corrected) {
    return [corrected](const MetaMap&, int order) -> Expansion {
      BivariateSeries grid(Sym::x, Sym::a, order, order);
      RF fac = RF::one();
      for (int m = 0; m <= order; ++m) {
        if (m > 0) fac *= RF::one() - q_power(m);
        RF w = sym(Sym::b).pow(m) / fac;
        RF shifted = corrected ? -sym(Sym::c) * q_power(m)
                               : sym(Sym::c) * q_power(m);
        if (corrected) w *= q_power(choose2(m));
        TruncatedSeries px = series_from_rational(
            qpochhammer(sym(Sym::c) * sym(Sym::x), m), Sym::x, order);
        TruncatedSeries aser = bigeq_series(shifted, Sym::a, order);
        for (int i = 0; i <= order; ++i) {
          if (px.coeff(i).is_zero()) continue;
          for (int j = 0; m + j <= order; ++j) {
            grid.add_coeff(i, m + j, w * px.coeff(i) * aser.coeff(j));
          }
        }
      }
      TruncatedSeries fser = eq_series(sym(Sym::b), Sym::x, order) *
                             eq_series(sym(Sym::c), Sym::x, order);
      return grid.multiply_axis(fser, 1);
    };
  };

  out.push_back(series_record(
      "s2-thm6-e-2phi1",
      "infinite operator on two reciprocal products against a "
      "hypergeometric-kernel grid, as printed",
      {}, Sym::x, ExpectedStatus::known_discrepancy, thm6_lhs,
      thm6_rhs(false)));
  out.push_back(series_record(
      "s2-thm6-e-2phi1-corrected",
      "infinite operator on two reciprocal products against the "
      "sign-adjusted hypergeometric-kernel grid",
      {}, Sym::x, ExpectedStatus::pass, thm6_lhs, thm6_rhs(true)));

  auto thm7_rhs = [](bool corrected) {
    return [corrected](const MetaMap& meta, int order) -> Expansion {
      int n = meta_int(meta, "n");
      TruncatedSeries rhs(Sym::x, order);
      TruncatedSeries tail = eq_series(sym(Sym::a), Sym::x, order) *
                             eq_series(sym(Sym::b), Sym::x, order);
      for (int l = 0; l <= n; ++l) {
        for (int m = 0; m <= l; ++m) {
          RF w = qbinomial(n, l) * qbinomial(l, m) *
                 spow(Sym::u, choose2(l + 1) - static_cast<long long>(n) * l) *
                 sym(Sym::d).pow(l) * sym(Sym::c).pow(l - m);
          if (corrected) {
            w *= q_power(choose2(l - m));
            if ((l - m) % 2 == 1) w = -w;
          }
          TruncatedSeries ser =
              bigeq_series(sym(Sym::c) * q_power(l), Sym::x, order) * tail *
              series_from_rational(phi_hahn(m, sym(Sym::b) * sym(Sym::x),
                                            sym(Sym::a), sym(Sym::b)),
                                   Sym::x, order);
          rhs = rhs + ser.scale(w);
        }
      }
      return Expansion(rhs.scale(spow(Sym::u, choose2(n))));
    };
  };

  auto thm7_lhs = [](const MetaMap& meta, int order) -> Expansion {
    int n = meta_int(meta, "n");
    TruncatedSeries base = bigeq_series(sym(Sym::c), Sym::x, order + n) *
                           eq_series(sym(Sym::a), Sym::x, order + n) *
                           eq_series(sym(Sym::b), Sym::x, order + n);
    return apply_g(n, sym(Sym::d), base);
  };

  out.push_back(series_record(
      "s2-thm7-three-poch",
      "deformed finite operator on a three-product base against a double "
      "polynomial sum, as printed",
      {{"n", 0, 2}}, Sym::x, ExpectedStatus::known_discrepancy, thm7_lhs,
      thm7_rhs(false)));
  out.push_back(series_record(
      "s2-thm7-three-poch-corrected",
      "deformed finite operator on a three-product base against the double "
      "polynomial sum with the alternating inner weight",
      {{"n", 0, 2}}, Sym::x, ExpectedStatus::pass, thm7_lhs, thm7_rhs(true)));

  auto thm8_lhs = [](const MetaMap&, int order) -> Expansion {
    TruncatedSeries base = bigeq_series(sym(Sym::c), Sym::x, 2 * order) *
                           eq_series(sym(Sym::a), Sym::x, 2 * order) *
                           eq_series(sym(Sym::b), Sym::x, 2 * order);
    return e_operator_grid(base, Sym::d, order);
  };

  auto thm8_rhs = [](bool corrected) {
    return [corrected](const MetaMap&, int order) -> Expansion {
      BivariateSeries grid(Sym::x, Sym::d, order, order);
      TruncatedSeries tail = eq_series(sym(Sym::a), Sym::x, order) *
                             eq_series(sym(Sym::b), Sym::x, order);
      RF mfac = RF::one();
      for (int m = 0; m <= order; ++m) {
        if (m > 0) mfac *= RF::one() - q_power(m);
        TruncatedSeries polx = series_from_rational(
            phi_hahn(m, sym(Sym::b) * sym(Sym::x), sym(Sym::a), sym(Sym::b)),
            Sym::x, order);
        RF jfac = RF::one();
        for (int j = 0; m + j <= order; ++j) {
          if (j > 0) jfac *= RF::one() - q_power(j);
          RF jw = (q_power(m) * sym(Sym::c)).pow(j) / jfac;
          if (corrected) {
            jw *= q_power(2 * choose2(j));
            if (j % 2 == 1) jw = -jw;
          } else {
            jw *= q_power(choose2(j));
          }
          RF w = q_power(choose2(m)) / mfac * jw;
          TruncatedSeries ser =
              bigeq_series(sym(Sym::c) * q_power(m + j), Sym::x, order) *
              tail * polx;
          for (int i = 0; i <= order; ++i) {
            if (!ser.coeff(i).is_zero()) {
              grid.add_coeff(i, m + j, w * ser.coeff(i));
            }
          }
        }
      }
      return grid;
    };
  };

  out.push_back(series_record(
      "s2-thm8-e-three-poch",
      "infinite operator on a three-product base against a double "
      "shifted-product grid, as printed",
      {}, Sym::x, ExpectedStatus::known_discrepancy, thm8_lhs,
      thm8_rhs(false)));
  out.push_back(series_record(
      "s2-thm8-e-three-poch-corrected",
      "infinite operator on a three-product base against the double "
      "shifted-product grid with the squared-exponent inner weight",
      {}, Sym::x, ExpectedStatus::pass, thm8_lhs, thm8_rhs(true)));

  auto thm9_lhs = [](const MetaMap& meta, int order) -> Expansion {
    int n = meta_int(meta, "n");
    TruncatedSeries base = eq_series(sym(Sym::a), Sym::x, order + n) *
                           eq_series(sym(Sym::b), Sym::x, order + n) *
                           eq_series(sym(Sym::c), Sym::x, order + n);
    return apply_g(n, sym(Sym::d), base);
  };

  auto thm9_rhs = [](bool corrected) {
    return [corrected](const MetaMap& meta, int order) -> Expansion {
      int n = meta_int(meta, "n");
      RF pol = RF::zero();
      for (int k = 0; k <= n; ++k) {
        long long ue = corrected
                           ? choose2(k + 1) - static_cast<long long>(n) * k
                           : choose2(k) - static_cast<long long>(n) * k;
        RF inner = RF::zero();
        for (int l = 0; l <= k; ++l) {
          inner += qbinomial(k, l) *
                   phi_hahn(l, sym(Sym::b) * sym(Sym::x), sym(Sym::a),
                            sym(Sym::b)) *
                   qpochhammer(sym(Sym::c) * sym(Sym::x), l) *
                   sym(Sym::c).pow(k - l);
        }
        pol += qbinomial(n, k) * spow(Sym::u, ue) * sym(Sym::d).pow(k) * inner;
      }
      pol *= spow(Sym::u, choose2(n));
      TruncatedSeries base = eq_series(sym(Sym::a), Sym::x, order) *
                             eq_series(sym(Sym::b), Sym::x, order) *
                             eq_series(sym(Sym::c), Sym::x, order);
      return base * series_from_rational(pol, Sym::x, order);
    };
  };

  out.push_back(series_record(
      "s2-thm9-ggen-three-inv",
      "deformed finite operator on three reciprocal products against a "
      "nested polynomial sum with the deformation exponent as printed",
      {{"n", 0, 2}}, Sym::x, ExpectedStatus::known_discrepancy, thm9_lhs,
      thm9_rhs(false)));
  out.push_back(series_record(
      "s2-thm9-ggen-three-inv-corrected",
      "deformed finite operator on three reciprocal products against the "
      "nested polynomial sum with the balanced deformation exponent",
      {{"n", 0, 2}}, Sym::x, ExpectedStatus::pass, thm9_lhs, thm9_rhs(true)));

  auto thm10_lhs = [](const MetaMap&, int order) -> Expansion {
    TruncatedSeries base = eq_series(sym(Sym::a), Sym::x, 2 * order) *
                           eq_series(sym(Sym::b), Sym::x, 2 * order) *
                           eq_series(sym(Sym::c), Sym::x, 2 * order);
    return e_operator_grid(base, Sym::d, order);
  };

  auto thm10_rhs = [](bool corrected) {
    return [corrected](const MetaMap&, int order) -> Expansion {
      BivariateSeries grid(Sym::x, Sym::d, order, order);
      TruncatedSeries base = eq_series(sym(Sym::a), Sym::x, order) *
                             eq_series(sym(Sym::b), Sym::x, order) *
                             eq_series(sym(Sym::c), Sym::x, order);
      RF kfac = RF::one();
      for (int k = 0; k <= order; ++k) {
        if (k > 0) kfac *= RF::one() - q_power(k);
        RF kw = q_power(choose2(k)) * sym(Sym::a).pow(k) / kfac;
        RF jfac = RF::one();
        for (int j = 0; k + j <= order; ++j) {
          if (j > 0) jfac *= RF::one() - q_power(j);
          RF jw = q_power(choose2(j)) * (q_power(k) * sym(Sym::b)).pow(j) /
                  jfac;
          TruncatedSeries ser =
              base *
              series_from_rational(
                  qpochhammer(sym(Sym::b) * sym(Sym::x), k) *
                      qpochhammer(sym(Sym::c) * sym(Sym::x), k + j),
                  Sym::x, order);
          RF ifac = RF::one();
          RF ibase = q_power(k + j) * sym(Sym::c);
          if (!corrected) ibase = -ibase;
          for (int i = 0; k + j + i <= order; ++i) {
            if (i > 0) ifac *= RF::one() - q_power(i);
            RF iw = q_power(choose2(i)) * ibase.pow(i) / ifac;
            RF w = kw * jw * iw;
            for (int ix = 0; ix <= order; ++ix) {
              if (!ser.coeff(ix).is_zero()) {
                grid.add_coeff(ix, k + j + i, w * ser.coeff(ix));
              }
            }
          }
        }
      }
      return grid;
    };
  };

  out.push_back(series_record(
      "s2-thm10-e-three-inv",
      "infinite operator on three reciprocal products against a triple "
      "shifted-product grid, as printed",
      {}, Sym::x, ExpectedStatus::known_discrepancy, thm10_lhs,
      thm10_rhs(false)));
  out.push_back(series_record(
      "s2-thm10-e-three-inv-corrected",
      "infinite operator on three reciprocal products against the triple "
      "shifted-product grid with the sign-flipped third weight",
      {}, Sym::x, ExpectedStatus::pass, thm10_lhs, thm10_rhs(true)));
}

// --------------------------------------------------------------------------
// generating functions of the deformed homogeneous family
// --------------------------------------------------------------------------

TruncatedSeries kfactor_series(int k, int order) {
  TruncatedSeries ser = geom_series(sym(Sym::x), Sym::y, order);
  for (int j = 1; j <= k; ++j) {
    ser = ser * geom_series(q_power(j) * sym(Sym::x), Sym::y, order);
  }
  return ser.shift_up(k);
}

void add_homogeneous_generating_functions(std::vector<IdentityRecord>& out) {
  enum class GfKind { deformed, at_q, at_one };

  auto gf_lhs = [](GfKind kind, bool corrected) {
    return [kind, corrected](const MetaMap& meta, int order) -> Expansion {
      int n = meta_int(meta, "n");
      TruncatedSeries lhs(Sym::y, order);
      for (int m = 0; m <= order; ++m) {
        RF slot = sym(Sym::b);
        RF w;
        switch (kind) {
          case GfKind::deformed:
            if (corrected) slot = rebalanced_slot(m, n, sym(Sym::b), Sym::u);
            w = sym(Sym::u) / sym(Sym::q);
            break;
          case GfKind::at_q:
            if (corrected) slot = sym(Sym::q) * sym(Sym::b);
            w = RF::one();
            break;
          case GfKind::at_one:
            if (corrected) slot = q_power(n + 1 - m) * sym(Sym::b);
            w = q_power(-1);
            break;
        }
        lhs.set_coeff(m, psi_h(m, q_power(-n), slot, sym(Sym::x), w));
      }
      return lhs;
    };
  };

  auto gf_rhs = [](GfKind kind, bool printed) {
    return [kind, printed](const MetaMap& meta, int order) -> Expansion {
      int n = meta_int(meta, "n");
      TruncatedSeries rhs(Sym::y, order);
      for (int k = 0; k <= n; ++k) {
        RF w;
        switch (kind) {
          case GfKind::deformed:
            w = qbinomial(n, k) *
                spow(Sym::u, choose2(k + 1) - static_cast<long long>(n) * k) *
                qfac(k) * sym(Sym::b).pow(k);
            break;
          case GfKind::at_q:
            w = qbinomial(n, k) *
                q_power(choose2(k + 1) - static_cast<long long>(n) * k) *
                qfac(k) * (-sym(Sym::b)).pow(k);
            if (k % 2 == 1) w = -w;
            break;
          case GfKind::at_one:
            w = qbinomial(n, k) * qfac(k) * sym(Sym::b).pow(k);
            break;
        }
        rhs = rhs + kfactor_series(k, order).scale(w);
      }
      if (printed) rhs = rhs.scale(RF::one() / qfac(n));
      return rhs;
    };
  };

  out.push_back(series_record(
      "s3-thm1-gf",
      "generating function of the deformed homogeneous family with the "
      "argument slot and overall factor as printed",
      {{"n", 0, 2}}, Sym::y, ExpectedStatus::known_discrepancy,
      gf_lhs(GfKind::deformed, false), gf_rhs(GfKind::deformed, true)));
  out.push_back(series_record(
      "s3-thm1-gf-corrected",
      "generating function of the deformed homogeneous family with the "
      "rebalanced argument slot and no overall factor",
      {{"n", 0, 2}}, Sym::y, ExpectedStatus::pass,
      gf_lhs(GfKind::deformed, true), gf_rhs(GfKind::deformed, false)));

  out.push_back(series_record(
      "s3-cor-psi",
      "generating function specialized at deformation q, as printed",
      {{"n", 0, 2}}, Sym::y, ExpectedStatus::known_discrepancy,
      gf_lhs(GfKind::at_q, false), gf_rhs(GfKind::at_q, true)));
  out.push_back(series_record(
      "s3-cor-psi-corrected",
      "generating function specialized at deformation q with the rescaled "
      "argument slot and no overall factor",
      {{"n", 0, 2}}, Sym::y, ExpectedStatus::pass, gf_lhs(GfKind::at_q, true),
      gf_rhs(GfKind::at_q, false)));

  out.push_back(series_record(
      "s3-cor-phi",
      "generating function specialized at deformation one, as printed",
      {{"n", 0, 2}}, Sym::y, ExpectedStatus::known_discrepancy,
      gf_lhs(GfKind::at_one, false), gf_rhs(GfKind::at_one, true)));
  out.push_back(series_record(
      "s3-cor-phi-corrected",
      "generating function specialized at deformation one with the rescaled "
      "argument slot and no overall factor",
      {{"n", 0, 2}}, Sym::y, ExpectedStatus::pass,
      gf_lhs(GfKind::at_one, true), gf_rhs(GfKind::at_one, false)));

  auto weighted_lhs = [gf_lhs](bool corrected, bool triangular) {
    return [corrected, triangular](const MetaMap& meta,
                                   int order) -> Expansion {
      int n = meta_int(meta, "n");
      TruncatedSeries lhs(Sym::y, order);
      RF fac = RF::one();
      for (int m = 0; m <= order; ++m) {
        RF slot = corrected ? rebalanced_slot(m, n, sym(Sym::b), Sym::u)
                            : sym(Sym::b);
        RF value = psi_h(m, q_power(-n), slot, sym(Sym::x),
                         sym(Sym::u) / sym(Sym::q)) /
                   fac;
        if (triangular) value *= q_power(choose2(m));
        lhs.set_coeff(m, value);
        fac *= RF::one() - q_power(m + 1);
      }
      return lhs;
    };
  };

  auto eq_weighted_rhs = [](const MetaMap& meta, int order) -> Expansion {
    int n = meta_int(meta, "n");
    RF pol = deformed_plus_power(n, sym(Sym::b) * sym(Sym::y), Sym::u);
    return eq_series(sym(Sym::x), Sym::y, order) *
           series_from_rational(pol, Sym::y, order);
  };

  out.push_back(series_record(
      "s3-eq-weighted",
      "factorially weighted generating function against a reciprocal "
      "product times the deformed plus-power, with the printed argument slot",
      {{"n", 0, 2}}, Sym::y, ExpectedStatus::known_discrepancy,
      weighted_lhs(false, false), eq_weighted_rhs));
  out.push_back(series_record(
      "s3-eq-weighted-corrected",
      "factorially weighted generating function against a reciprocal "
      "product times the deformed plus-power, with the rebalanced slot",
      {{"n", 0, 2}}, Sym::y, ExpectedStatus::pass, weighted_lhs(true, false),
      eq_weighted_rhs));

  out.push_back(series_record(
      "s3-bigeq-weighted",
      "triangularly weighted generating function against an infinite "
      "product times shifted reciprocals, as printed",
      {{"n", 0, 2}}, Sym::y, ExpectedStatus::known_discrepancy,
      weighted_lhs(false, true),
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        TruncatedSeries rhs(Sym::y, order);
        for (int k = 0; k <= n; ++k) {
          RF w = qbinomial(n, k) *
                 spow(Sym::u, choose2(k + 1) - static_cast<long long>(n) * k) *
                 sym(Sym::b).pow(k);
          TruncatedSeries ser = TruncatedSeries::one(Sym::y, order);
          for (int j = 0; j < k; ++j) {
            ser = ser * geom_series(q_power(j), Sym::y, order);
          }
          rhs = rhs + ser.shift_up(k).scale(w);
        }
        return bigeq_series(sym(Sym::x), Sym::y, order) * rhs;
      }));
  out.push_back(series_record(
      "s3-bigeq-weighted-corrected",
      "triangularly weighted generating function against the sign-flipped "
      "infinite product times argument-bearing shifted reciprocals",
      {{"n", 0, 2}}, Sym::y, ExpectedStatus::pass, weighted_lhs(true, true),
      [](const MetaMap& meta, int order) -> Expansion {
        int n = meta_int(meta, "n");
        TruncatedSeries rhs(Sym::y, order);
        for (int k = 0; k <= n; ++k) {
          RF w = qbinomial(n, k) *
                 spow(Sym::u, choose2(k + 1) - static_cast<long long>(n) * k) *
                 q_power(choose2(k)) * sym(Sym::b).pow(k);
          TruncatedSeries ser = TruncatedSeries::one(Sym::y, order);
          for (int j = 0; j < k; ++j) {
            ser = ser *
                  geom_series(-q_power(j) * sym(Sym::x), Sym::y, order);
          }
          rhs = rhs + ser.shift_up(k).scale(w);
        }
        return bigeq_series(-sym(Sym::x), Sym::y, order) * rhs;
      }));

  auto theta_lhs = [](int sign) {
    return [sign](const MetaMap& meta, int order) -> Expansion {
      int n = meta_int(meta, "n");
      TruncatedSeries lhs(Sym::y, order);
      for (int m = 0; m <= order; ++m) {
        lhs.set_coeff(m, q_power(sign * choose2(m)) *
                             psi_h(m, q_power(-n), sym(Sym::b), sym(Sym::x),
                                   sym(Sym::u) / sym(Sym::q)));
      }
      return lhs;
    };
  };

  for (int sign : {-1, +1}) {
    IdentityRecord rec;
    rec.id = sign < 0 ? "s3-theta-minus" : "s3-theta-plus";
    rec.description =
        "theta-weighted generating function of the deformed homogeneous "
        "family; the right-hand side uses an undefined negative plus-power";
    rec.meta_params = {{"n", 0, 2}};
    rec.expansion_var = Sym::y;
    rec.expected_status = ExpectedStatus::lhs_only;
    rec.unsupported_reason = "RHS notation undefined in paper";
    rec.lhs_builder = theta_lhs(sign);
    out.push_back(std::move(rec));
  }
}

// --------------------------------------------------------------------------
// double generating functions and kernel identities
// --------------------------------------------------------------------------

void add_kernel_identities(std::vector<IdentityRecord>& out) {
  auto rogers_lhs = [](bool corrected, bool weighted) {
    return [corrected, weighted](const MetaMap& meta, int order) -> Expansion {
      int k = meta_int(meta, "k");
      BivariateSeries lhs(Sym::y, Sym::z, order, order);
      std::vector<RF> fac(order + 1);
      fac[0] = RF::one();
      for (int j = 1; j <= order; ++j) {
        fac[j] = fac[j - 1] * (RF::one() - q_power(j));
      }
      for (int nn = 0; nn <= order; ++nn) {
        for (int mm = 0; nn + mm <= order; ++mm) {
          int deg = nn + mm;
          RF slot = corrected ? rebalanced_slot(deg, k, sym(Sym::b), Sym::u)
                              : sym(Sym::b);
          RF value = psi_h(deg, q_power(-k), slot, sym(Sym::x),
                           sym(Sym::u) / sym(Sym::q));
          if (weighted) value /= fac[nn] * fac[mm];
          lhs.set_coeff(nn, mm, value);
        }
      }
      return lhs;
    };
  };

  auto rogers_ordinary_rhs = [](bool corrected) {
    return [corrected](const MetaMap& meta, int order) -> Expansion {
      int k = meta_int(meta, "k");
      BivariateSeries rhs(Sym::y, Sym::z, order, order);
      for (int l = 0; l <= k; ++l) {
        for (int i = 0; i <= l; ++i) {
          RF w = qbinomial(k, l) *
                 spow(Sym::u, choose2(l + 1) - static_cast<long long>(l) * k) *
                 sym(Sym::b).pow(l) * qbinomial(l, i);
          if (corrected) w *= qfac(i) * qfac(l - i);
          TruncatedSeries yser = geom_series(sym(Sym::x), Sym::y, order);
          for (int j = 1; j <= i; ++j) {
            yser = yser * geom_series(q_power(j) * sym(Sym::x), Sym::y, order);
          }
          TruncatedSeries zser = TruncatedSeries::one(Sym::z, order);
          for (int j = 0; j <= l - i; ++j) {
            zser = zser *
                   geom_series(q_power(i + j) * sym(Sym::x), Sym::z, order);
          }
          for (int iy = 0; iy + i <= order; ++iy) {
            for (int iz = 0; iz + l - i <= order; ++iz) {
              rhs.add_coeff(iy + i, iz + l - i,
                            w * yser.coeff(iy) * zser.coeff(iz));
            }
          }
        }
      }
      return rhs;
    };
  };

  auto rogers_weighted_rhs = [](const MetaMap& meta, int order) -> Expansion {
    int k = meta_int(meta, "k");
    RF pol = RF::zero();
    for (int l = 0; l <= k; ++l) {
      RF inner = RF::zero();
      for (int i = 0; i <= l; ++i) {
        inner += qbinomial(l, i) *
                 qpochhammer(sym(Sym::x) * sym(Sym::z), i) * spow(Sym::y, i) *
                 spow(Sym::z, l - i);
      }
      pol += qbinomial(k, l) *
             spow(Sym::u, choose2(l + 1) - static_cast<long long>(k) * l) *
             sym(Sym::b).pow(l) * inner;
    }
    BivariateSeries grid = grid_from_rational(pol, Sym::y, Sym::z, order,
                                              order);
    grid = grid.multiply_axis(eq_series(sym(Sym::x), Sym::y, order), 1);
    grid = grid.multiply_axis(eq_series(sym(Sym::x), Sym::z, order), 2);
    return grid;
  };

  auto simplex = [](IdentityRecord rec) {
    rec.grid_mask = BiMask::simplex;
    return rec;
  };

  out.push_back(simplex(series_record(
      "s4-rogers-ordinary",
      "double generating function of the deformed family against an "
      "iterated shifted-reciprocal kernel, as printed",
      {{"k", 1, 2}}, Sym::y, ExpectedStatus::known_discrepancy,
      rogers_lhs(false, false), rogers_ordinary_rhs(false))));
  out.push_back(simplex(series_record(
      "s4-rogers-ordinary-corrected",
      "double generating function of the deformed family against the "
      "kernel with rebalanced slots and factorial inner weights",
      {{"k", 1, 2}}, Sym::y, ExpectedStatus::pass, rogers_lhs(true, false),
      rogers_ordinary_rhs(true))));
  out.push_back(simplex(series_record(
      "s4-rogers",
      "weighted double generating function against a polynomial kernel "
      "under two reciprocal products, with the printed argument slot",
      {{"k", 1, 2}}, Sym::y, ExpectedStatus::known_discrepancy,
      rogers_lhs(false, true), rogers_weighted_rhs)));
  out.push_back(simplex(series_record(
      "s4-rogers-corrected",
      "weighted double generating function against a polynomial kernel "
      "under two reciprocal products, with the rebalanced argument slot",
      {{"k", 1, 2}}, Sym::y, ExpectedStatus::pass, rogers_lhs(true, true),
      rogers_weighted_rhs)));

  auto mehler_lhs = [](bool corrected, bool weighted) {
    return [corrected, weighted](const MetaMap& meta, int order) -> Expansion {
      int n = meta_int(meta, "n");
      int m = meta_int(meta, "m");
      TruncatedSeries lhs(Sym::z, order);
      RF fac = RF::one();
      for (int k = 0; k <= order; ++k) {
        RF sb = corrected ? rebalanced_slot(k, n, sym(Sym::b), Sym::u)
                          : sym(Sym::b);
        RF sc = corrected ? rebalanced_slot(k, m, sym(Sym::c), Sym::v)
                          : sym(Sym::c);
        RF value = psi_h(k, q_power(-n), sb, sym(Sym::x),
                         sym(Sym::u) / sym(Sym::q)) *
                   psi_h(k, q_power(-m), sc, sym(Sym::y),
                         sym(Sym::v) / sym(Sym::q));
        if (weighted) value /= fac;
        lhs.set_coeff(k, value);
        fac *= RF::one() - q_power(k + 1);
      }
      return lhs;
    };
  };

  // five-parameter psi evaluated at the kernel arguments, outer-index ratio
  auto kernel_psi = [](int k, int l) {
    RF xyz = sym(Sym::x) * sym(Sym::y) * sym(Sym::z);
    RF ratio = qpochhammer(q_power(l + 1), k) /
               (qpochhammer(q_power(l + 1) * xyz, k) *
                qpochhammer(q_power(l - k + 1), k));
    RF s = RF::zero();
    for (int i = 0; i <= k; ++i) {
      RF term = qbinomial(k, i) *
                q_power(static_cast<long long>(i) * (i - k)) *
                (-q_power(l) * xyz).pow(k - i);
      if (i % 2 == 1) term = -term;
      s += term;
    }
    return ratio * s;
  };

  enum class OrdVariant { printed, ml, corrected };

  auto mehler_ordinary_rhs = [kernel_psi](OrdVariant variant) {
    return [kernel_psi, variant](const MetaMap& meta,
                                 int order) -> Expansion {
      int n = meta_int(meta, "n");
      int m = meta_int(meta, "m");
      RF xyz = sym(Sym::x) * sym(Sym::y) * sym(Sym::z);
      TruncatedSeries rhs(Sym::z, order);
      for (int k = 0; k <= n; ++k) {
        RF wu = qbinomial(n, k) *
                spow(Sym::u, choose2(k + 1) - static_cast<long long>(n) * k) *
                sym(Sym::b).pow(k);
        for (int l = 0; l <= m; ++l) {
          if (variant != OrdVariant::corrected) {
            if (l < k) continue;
            RF wm = variant == OrdVariant::printed ? qbinomial(m, k)
                                                   : qbinomial(m, l);
            RF t = wm *
                   spow(Sym::v,
                        choose2(l + 1) - static_cast<long long>(m) * l) *
                   qfac(l) * (sym(Sym::c) * sym(Sym::z)).pow(l) * qfac(l) /
                   ((RF::one() - q_power(l) * xyz) * qpochhammer(xyz, l) *
                    qfac(l - k)) *
                   spow(Sym::x, l - k) * kernel_psi(k, l);
            rhs = rhs + series_from_rational(wu * t, Sym::z, order);
          } else {
            RF wm = qbinomial(m, l) *
                    spow(Sym::v,
                         choose2(l + 1) - static_cast<long long>(m) * l) *
                    qfac(l) * (sym(Sym::c) * sym(Sym::z)).pow(l);
            for (int i = std::max(0, k - l); i <= k; ++i) {
              RF kern = qbinomial(k, i) *
                        q_power(static_cast<long long>(i) * (i - k) +
                                static_cast<long long>(i) * l) *
                        (sym(Sym::y) * sym(Sym::z)).pow(i) *
                        qpochhammer(q_power(l + 1), i) /
                        qpochhammer(xyz, l + 1 + i) * qfac(l) /
                        qfac(l - k + i) * spow(Sym::x, l - k + i);
              rhs = rhs + series_from_rational(wu * wm * kern, Sym::z, order);
            }
          }
        }
      }
      if (variant != OrdVariant::corrected) {
        rhs = rhs.scale(RF::one() / qfac(m));
      }
      return rhs;
    };
  };

  out.push_back(series_record(
      "s4-mehler-ordinary",
      "product generating function of two deformed families against the "
      "kernel as printed",
      {{"n", 1, 2}, {"m", 1, 2}}, Sym::z, ExpectedStatus::known_discrepancy,
      mehler_lhs(false, false), mehler_ordinary_rhs(OrdVariant::printed)));
  out.push_back(series_record(
      "s4-mehler-ordinary-ml",
      "product generating function of two deformed families against the "
      "kernel with the inner binomial read on the running index",
      {{"n", 1, 2}, {"m", 1, 2}}, Sym::z, ExpectedStatus::known_discrepancy,
      mehler_lhs(false, false), mehler_ordinary_rhs(OrdVariant::ml)));
  out.push_back(series_record(
      "s4-mehler-ordinary-corrected",
      "product generating function of two deformed families against the "
      "rebalanced kernel",
      {{"n", 1, 2}, {"m", 1, 2}}, Sym::z, ExpectedStatus::pass,
      mehler_lhs(true, false), mehler_ordinary_rhs(OrdVariant::corrected)));

  auto mehler_weighted_rhs = [](bool keep_ql) {
    return [keep_ql](const MetaMap& meta, int order) -> Expansion {
      int n = meta_int(meta, "n");
      int m = meta_int(meta, "m");
      TruncatedSeries rhs(Sym::z, order);
      for (int k = 0; k <= n; ++k) {
        RF wu = qbinomial(n, k) *
                spow(Sym::u, choose2(k + 1) - static_cast<long long>(n) * k) *
                sym(Sym::b).pow(k);
        for (int l = 0; l <= k; ++l) {
          int s = k - l;
          if (s > m) continue;
          RF w = qbinomial(k, l) * qbinomial(m, s) * spow(Sym::v, choose2(s)) *
                 qfac(s) * (sym(Sym::y) * sym(Sym::z)).pow(l) *
                 (spow(Sym::v, 1 - m) * sym(Sym::c) * sym(Sym::z)).pow(s);
          if (keep_ql) {
            w *= q_power(static_cast<long long>(l) * s);
          }
          w *= deformed_plus_power(
              m - s, q_power(l) * sym(Sym::c) * sym(Sym::x) * sym(Sym::z),
              Sym::v);
          rhs = rhs + series_from_rational(wu * w, Sym::z, order);
        }
      }
      return eq_series(sym(Sym::x) * sym(Sym::y), Sym::z, order) * rhs;
    };
  };

  out.push_back(series_record(
      "s4-mehler",
      "weighted product generating function against the polynomial kernel "
      "as printed",
      {{"n", 1, 2}, {"m", 1, 2}}, Sym::z, ExpectedStatus::known_discrepancy,
      mehler_lhs(false, true), mehler_weighted_rhs(true)));
  out.push_back(series_record(
      "s4-mehler-printedrhs-fixedlhs",
      "weighted product generating function with rebalanced left-hand "
      "slots against the printed polynomial kernel",
      {{"n", 1, 2}, {"m", 1, 2}}, Sym::z, ExpectedStatus::known_discrepancy,
      mehler_lhs(true, true), mehler_weighted_rhs(true)));
  out.push_back(series_record(
      "s4-mehler-corrected",
      "weighted product generating function with rebalanced left-hand "
      "slots against the kernel without the cross exponent",
      {{"n", 1, 2}, {"m", 1, 2}}, Sym::z, ExpectedStatus::pass,
      mehler_lhs(true, true), mehler_weighted_rhs(false)));
}

// --------------------------------------------------------------------------
// operator-limit divisibility records
// --------------------------------------------------------------------------

void add_operator_limits(std::vector<IdentityRecord>& out) {
  struct LimitEntry {
    LimitKind kind;
    const char* id;
    const char* description;
  };
  const LimitEntry entries[] = {
      {LimitKind::T_deformed_from_g, "op-limit-t-deformed-from-g",
       "rescaled deformed finite operator coefficients approach the deformed "
       "infinite operator coefficients q-adically"},
      {LimitKind::T_plain_from_h, "op-limit-t-plain-from-h",
       "rescaled undeformed finite operator coefficients approach the plain "
       "infinite operator coefficients q-adically"},
      {LimitKind::E_from_s, "op-limit-e-from-s",
       "rescaled shifted finite operator coefficients approach the "
       "q-exponential operator coefficients q-adically"},
  };
  for (const LimitEntry& entry : entries) {
    IdentityRecord rec;
    rec.id = entry.id;
    rec.description = entry.description;
    rec.meta_params = {{"k", 0, 3}};
    rec.expansion_var = Sym::q;
    rec.expected_status = ExpectedStatus::pass;
    LimitKind kind = entry.kind;
    rec.direct_check = [kind](const MetaMap& meta, int) {
      int k = meta_int(meta, "k");
      VerificationReport merged;
      merged.status = VerifyStatus::pass;
      for (int n = k + 2; n <= k + 5; ++n) {
        VerificationReport step = operator_limit_check(kind, k, n);
        merged.order_checked = n;
        if (step.status != VerifyStatus::pass) {
          merged.status = step.status;
          merged.first_mismatch = step.first_mismatch;
          merged.reason = step.reason;
          break;
        }
      }
      return merged;
    };
    out.push_back(std::move(rec));
  }
}

}  // namespace

const std::vector<IdentityRecord>& identity_registry() {
  static const std::vector<IdentityRecord> registry = [] {
    std::vector<IdentityRecord> records;
    add_base_identities(records);
    add_family_generating_functions(records);
    add_operator_identities(records);
    add_grid_and_nested_identities(records);
    add_homogeneous_generating_functions(records);
    add_kernel_identities(records);
    add_operator_limits(records);
    return records;
  }();
  return registry;
}

}  // namespace qrs
