#pragma once

#include <string>

#include "qrs/qcombinatorics.hpp"
#include "qrs/report.hpp"
#include "qrs/series.hpp"

namespace qrs {

enum class OperatorKind {
  g_deformed,
  h_rs,
  s_shifted,
  T_deformed,
  T_plain,
  E_plain,
};

const char* operator_kind_name(OperatorKind kind);

struct OperatorSpec {
  OperatorKind kind = OperatorKind::h_rs;
  // finite kinds (g_deformed, h_rs, s_shifted) only
  int degree = 0;
  // the operator's b (or d) slot
  RationalFunction coefficient;
  // the u slot; read by g_deformed and T_deformed only
  RationalFunction deformation;
};

// Finite kinds return a series of order s.order() - degree.  Infinite kinds
// (T_deformed, T_plain, E_plain) treat the input as the polynomial formed by
// its retained coefficients and keep the full order; the expansion is exact
// for polynomial inputs.
TruncatedSeries apply_operator(const OperatorSpec& op, const TruncatedSeries& s);

// Compares g_n(bD_q|u){x^m} against u^binom(n,2) times the deformed
// homogeneous polynomial of degree m with a = q^(-n), y = x and deformation
// u/q.  The x-slot is u*b when corrected_slot is false and
// u^(m-n) q^(n+1-m) b when true; only the latter matches for all n, m.
VerificationReport monomial_action_check(int n, int m, bool corrected_slot);

VerificationReport gn_monomial_theorem_check(int n, int m);

enum class LimitKind {
  T_deformed_from_g,
  T_plain_from_h,
  E_from_s,
};

const char* limit_kind_name(LimitKind kind);

// For each k <= k_max, compares the coefficient of coeff^k D_q^k in the
// rescaled finite operator of degree n with the matching infinite-operator
// coefficient; they must agree modulo q^(n-k+1).
VerificationReport operator_limit_check(LimitKind kind, int k_max, int n);

}  // namespace qrs
