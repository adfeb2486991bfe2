#include "qrs/operators.hpp"

#include <algorithm>

#include "qrs/families.hpp"

namespace qrs {

const char* operator_kind_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::g_deformed:
      return "g_deformed";
    case OperatorKind::h_rs:
      return "h_rs";
    case OperatorKind::s_shifted:
      return "s_shifted";
    case OperatorKind::T_deformed:
      return "T_deformed";
    case OperatorKind::T_plain:
      return "T_plain";
    case OperatorKind::E_plain:
      return "E_plain";
  }
  throw UnsupportedExpression("unknown operator kind");
}

const char* limit_kind_name(LimitKind kind) {
  switch (kind) {
    case LimitKind::T_deformed_from_g:
      return "t-deformed-from-g";
    case LimitKind::T_plain_from_h:
      return "t-plain-from-h";
    case LimitKind::E_from_s:
      return "e-from-s";
  }
  throw UnsupportedExpression("unknown limit kind");
}

namespace {

TruncatedSeries extend_as_polynomial(const TruncatedSeries& s, int order) {
  TruncatedSeries out(s.var(), order);
  const int copy_to = std::min(order, s.order());
  for (int j = 0; j <= copy_to; ++j) out.set_coeff(j, s.coeff(j));
  return out;
}

TruncatedSeries apply_finite(const OperatorSpec& op, const TruncatedSeries& s) {
  const int n = op.degree;
  if (n < 0) throw UnsupportedExpression("operator degree must be nonnegative");
  if (s.order() < n) {
    throw OrderExhausted("operator degree " + std::to_string(n) +
                         " exceeds series order " + std::to_string(s.order()));
  }
  const int out_order = s.order() - n;
  TruncatedSeries result(s.var(), out_order);
  RationalFunction coeff_pow = RationalFunction::one();
  for (int k = 0; k <= n; ++k) {
    RationalFunction weight;
    switch (op.kind) {
      case OperatorKind::g_deformed:
        weight = op.deformation.pow(choose2(n - k));
        break;
      case OperatorKind::h_rs:
        weight = RationalFunction::one();
        break;
      case OperatorKind::s_shifted:
        weight = q_power(choose2(n) + choose2(k) +
                         static_cast<long long>(1 - n) * k);
        break;
      default:
        throw UnsupportedExpression("finite application of an infinite kind");
    }
    TruncatedSeries term = dq_apply(s, k);
    term = extend_as_polynomial(term, out_order);
    result = result + term.scale(qbinomial(n, k) * weight * coeff_pow);
    if (k < n) coeff_pow *= op.coefficient;
  }
  return result;
}

TruncatedSeries apply_infinite(const OperatorSpec& op,
                               const TruncatedSeries& s) {
  const int order = s.order();
  TruncatedSeries result(s.var(), order);
  RationalFunction coeff_pow = RationalFunction::one();
  RationalFunction qfac = RationalFunction::one();
  for (int k = 0; k <= order; ++k) {
    RationalFunction weight;
    switch (op.kind) {
      case OperatorKind::T_deformed:
        weight = op.deformation.pow(choose2(k));
        break;
      case OperatorKind::T_plain:
        weight = RationalFunction::one();
        break;
      case OperatorKind::E_plain:
        weight = q_power(choose2(k));
        break;
      default:
        throw UnsupportedExpression("infinite application of a finite kind");
    }
    TruncatedSeries term = extend_as_polynomial(dq_apply(s, k), order);
    result = result + term.scale(weight * coeff_pow / qfac);
    if (k < order) {
      coeff_pow *= op.coefficient;
      qfac *= RationalFunction::one() - q_power(k + 1);
    }
  }
  return result;
}

}  // namespace

TruncatedSeries apply_operator(const OperatorSpec& op,
                               const TruncatedSeries& s) {
  switch (op.kind) {
    case OperatorKind::g_deformed:
    case OperatorKind::h_rs:
    case OperatorKind::s_shifted:
      return apply_finite(op, s);
    case OperatorKind::T_deformed:
    case OperatorKind::T_plain:
    case OperatorKind::E_plain:
      return apply_infinite(op, s);
  }
  throw UnsupportedExpression("unknown operator kind");
}

VerificationReport monomial_action_check(int n, int m, bool corrected_slot) {
  if (n < 0 || m < 0)
    throw UnsupportedExpression("monomial action needs nonnegative n, m");
  VerificationReport report;
  report.id = corrected_slot ? "s2-thm1-monomial-corrected" : "s2-thm1-monomial";
  report.meta["n"] = n;
  report.meta["m"] = m;
  report.order_checked = m;

  OperatorSpec op;
  op.kind = OperatorKind::g_deformed;
  op.degree = n;
  op.coefficient = RationalFunction::symbol(Sym::b);
  op.deformation = RationalFunction::symbol(Sym::u);

  TruncatedSeries lhs = apply_operator(
      op,
      TruncatedSeries::monomial(Sym::x, m + n, m, RationalFunction::one()));

  const RationalFunction u = RationalFunction::symbol(Sym::u);
  const RationalFunction b = RationalFunction::symbol(Sym::b);
  RationalFunction slot = u * b;
  if (corrected_slot)
    slot = RationalFunction::symbol_power(Sym::u, m - n) *
           q_power(static_cast<long long>(n) + 1 - m) * b;

  PolySpec rhs_spec;
  rhs_spec.family = FamilyTag::asc_homogeneous_deformed;
  rhs_spec.degree = m;
  rhs_spec.params["a"] = q_power(-n);
  rhs_spec.params["x"] = slot;
  rhs_spec.params["y"] = RationalFunction::symbol(Sym::x);
  rhs_spec.params["u"] = u / RationalFunction::symbol(Sym::q);
  const RationalFunction rhs_poly =
      u.pow(choose2(n)) * build_polynomial(rhs_spec);
  TruncatedSeries rhs = series_from_rational(rhs_poly, Sym::x, m);

  report.status = VerifyStatus::pass;
  for (int j = 0; j <= m; ++j) {
    const RationalFunction l = lhs.coeff(j);
    const RationalFunction r = rhs.coeff(j);
    if (!(l == r)) {
      report.status = VerifyStatus::mismatch;
      FirstMismatch fm;
      fm.degree = {j};
      fm.lhs = l;
      fm.rhs = r;
      fm.diff = l - r;
      report.first_mismatch = fm;
      break;
    }
  }
  return report;
}

VerificationReport gn_monomial_theorem_check(int n, int m) {
  return monomial_action_check(n, m, true);
}

VerificationReport operator_limit_check(LimitKind kind, int k_max, int n) {
  if (k_max < 0 || n < k_max + 1)
    throw UnsupportedExpression("limit check requires 0 <= k_max < n");
  VerificationReport report;
  report.id = std::string("op-limit-") + limit_kind_name(kind);
  report.meta["k_max"] = k_max;
  report.meta["n"] = n;
  report.order_checked = k_max;
  report.status = VerifyStatus::pass;

  const RationalFunction u = RationalFunction::symbol(Sym::u);
  RationalFunction qfac = RationalFunction::one();
  for (int k = 0; k <= k_max; ++k) {
    RationalFunction fin;
    RationalFunction inf;
    switch (kind) {
      case LimitKind::T_deformed_from_g:
        fin = qbinomial(n, k) *
              u.pow(choose2(n - k) + static_cast<long long>(n - 1) * k -
                    choose2(n));
        inf = u.pow(choose2(k)) / qfac;
        break;
      case LimitKind::T_plain_from_h:
        fin = qbinomial(n, k);
        inf = RationalFunction::one() / qfac;
        break;
      case LimitKind::E_from_s:
        fin = q_power(choose2(k)) * qbinomial(n, k);
        inf = q_power(choose2(k)) / qfac;
        break;
    }
    const RationalFunction diff = fin - inf;
    bool ok = diff.is_zero();
    if (!ok) {
      long long valuation = -1;
      for (const auto& [exp, c] : diff.num().terms()) {
        const long long v = exp[static_cast<int>(Sym::q)];
        if (valuation < 0 || v < valuation) valuation = v;
      }
      ok = valuation >= static_cast<long long>(n) - k + 1;
    }
    if (!ok) {
      report.status = VerifyStatus::mismatch;
      FirstMismatch fm;
      fm.degree = {k};
      fm.lhs = fin;
      fm.rhs = inf;
      fm.diff = diff;
      report.first_mismatch = fm;
      break;
    }
    qfac *= RationalFunction::one() - q_power(k + 1);
  }
  return report;
}

}  // namespace qrs
