#include "qrs/families.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "qrs/series.hpp"

namespace qrs {

const char* family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::rogers_szego:
      return "rogers_szego";
    case FamilyTag::generalized_rs:
      return "generalized_rs";
    case FamilyTag::hahn:
      return "hahn";
    case FamilyTag::asc_general_phi:
      return "asc_general_phi";
    case FamilyTag::asc_general_psi:
      return "asc_general_psi";
    case FamilyTag::asc_generalized_phi:
      return "asc_generalized_phi";
    case FamilyTag::asc_generalized_psi:
      return "asc_generalized_psi";
    case FamilyTag::asc_homogeneous:
      return "asc_homogeneous";
    case FamilyTag::asc_homogeneous_deformed:
      return "asc_homogeneous_deformed";
    case FamilyTag::asc_generalized_deformed:
      return "asc_generalized_deformed";
  }
  throw UnsupportedExpression("unknown family tag");
}

FamilyTag family_from_name(const std::string& name) {
  static const std::map<std::string, FamilyTag> lookup = {
      {"rogers_szego", FamilyTag::rogers_szego},
      {"generalized_rs", FamilyTag::generalized_rs},
      {"hahn", FamilyTag::hahn},
      {"asc_general_phi", FamilyTag::asc_general_phi},
      {"asc_general_psi", FamilyTag::asc_general_psi},
      {"asc_generalized_phi", FamilyTag::asc_generalized_phi},
      {"asc_generalized_psi", FamilyTag::asc_generalized_psi},
      {"asc_homogeneous", FamilyTag::asc_homogeneous},
      {"asc_homogeneous_deformed", FamilyTag::asc_homogeneous_deformed},
      {"asc_generalized_deformed", FamilyTag::asc_generalized_deformed},
  };
  auto it = lookup.find(name);
  if (it == lookup.end())
    throw UnsupportedExpression("unknown family: " + name);
  return it->second;
}

namespace {

const std::vector<std::string>& family_slots(FamilyTag tag) {
  static const std::vector<std::string> rs = {"x"};
  static const std::vector<std::string> grs = {"x", "y"};
  static const std::vector<std::string> one_param = {"a", "x", "y"};
  static const std::vector<std::string> five_param = {"a", "b", "c",
                                                      "d", "e", "x", "y"};
  static const std::vector<std::string> three_param = {"a", "b", "c", "x", "y"};
  static const std::vector<std::string> one_param_def = {"a", "x", "y", "u"};
  static const std::vector<std::string> three_param_def = {"a", "b", "c",
                                                           "x", "y", "u"};
  switch (tag) {
    case FamilyTag::rogers_szego:
      return rs;
    case FamilyTag::generalized_rs:
      return grs;
    case FamilyTag::hahn:
    case FamilyTag::asc_homogeneous:
      return one_param;
    case FamilyTag::asc_general_phi:
    case FamilyTag::asc_general_psi:
      return five_param;
    case FamilyTag::asc_generalized_phi:
    case FamilyTag::asc_generalized_psi:
      return three_param;
    case FamilyTag::asc_homogeneous_deformed:
      return one_param_def;
    case FamilyTag::asc_generalized_deformed:
      return three_param_def;
  }
  throw UnsupportedExpression("unknown family tag");
}

Sym slot_symbol(const std::string& name) {
  if (name == "e") return Sym::v;
  auto sym = symbol_from_char(name[0]);
  if (!sym) throw UnsupportedExpression("unknown parameter slot: " + name);
  return *sym;
}

class SlotReader {
 public:
  explicit SlotReader(const PolySpec& spec) : spec_(spec) {
    const auto& allowed = family_slots(spec.family);
    for (const auto& [key, value] : spec.params) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
        throw UnsupportedExpression("family " +
                                    std::string(family_name(spec.family)) +
                                    " has no parameter '" + key + "'");
    }
  }

  RationalFunction get(const std::string& name) const {
    auto it = spec_.params.find(name);
    if (it != spec_.params.end()) return it->second;
    return RationalFunction::symbol(slot_symbol(name));
  }

 private:
  const PolySpec& spec_;
};

RationalFunction signed_q_power(long long e) {
  return RationalFunction::symbol_power(Sym::q, e);
}

RationalFunction rf_power(const RationalFunction& base, long long e) {
  if (e < 0 && base.is_zero()) throw DivisionByZero();
  return base.pow(e);
}

}  // namespace

RationalFunction build_polynomial(const PolySpec& spec) {
  if (spec.degree < 0)
    throw UnsupportedExpression("polynomial degree must be nonnegative");
  const int n = spec.degree;
  SlotReader slots(spec);
  const RationalFunction q = RationalFunction::symbol(Sym::q);
  const RationalFunction one = RationalFunction::one();

  auto x = [&] { return slots.get("x"); };
  auto y = [&] { return slots.get("y"); };

  RationalFunction result = RationalFunction::zero();
  switch (spec.family) {
    case FamilyTag::rogers_szego: {
      RationalFunction xp = one;
      for (int k = 0; k <= n; ++k) {
        result += qbinomial(n, k) * xp;
        if (k < n) xp *= x();
      }
      return result;
    }
    case FamilyTag::generalized_rs: {
      for (int k = 0; k <= n; ++k)
        result += qbinomial(n, k) * rf_power(x(), k) * rf_power(y(), n - k);
      return result;
    }
    case FamilyTag::hahn: {
      const RationalFunction a = slots.get("a");
      RationalFunction apoch = one;
      for (int k = 0; k <= n; ++k) {
        result += qbinomial(n, k) * apoch * rf_power(x(), k) *
                  rf_power(y(), n - k);
        if (k < n) apoch *= one - signed_q_power(k) * a;
      }
      return result;
    }
    case FamilyTag::asc_general_phi:
    case FamilyTag::asc_general_psi: {
      const RationalFunction num = qpochhammer(slots.get("a"), n) *
                                   qpochhammer(slots.get("b"), n) *
                                   qpochhammer(slots.get("c"), n);
      const RationalFunction den =
          qpochhammer(slots.get("d"), n) * qpochhammer(slots.get("e"), n);
      if (den.is_zero())
        throw ZeroDenominatorParameter(
            "lower parameter annihilates the coefficient ratio at degree " +
            std::to_string(n));
      const RationalFunction ratio = num / den;
      const bool alternating = spec.family == FamilyTag::asc_general_psi;
      for (int k = 0; k <= n; ++k) {
        RationalFunction term = qbinomial(n, k) * ratio *
                                rf_power(x(), n - k) * rf_power(y(), k);
        if (alternating) {
          term *= signed_q_power(static_cast<long long>(k) * (k - n));
          if (k % 2 == 1) term = -term;
        }
        result += term;
      }
      return result;
    }
    case FamilyTag::asc_generalized_phi:
    case FamilyTag::asc_generalized_psi:
    case FamilyTag::asc_generalized_deformed: {
      const RationalFunction a = slots.get("a");
      const RationalFunction b = slots.get("b");
      const RationalFunction c = slots.get("c");
      const bool deformed = spec.family == FamilyTag::asc_generalized_deformed;
      const bool alternating =
          spec.family == FamilyTag::asc_generalized_psi;
      const RationalFunction defo =
          deformed ? slots.get("u") : RationalFunction::symbol(Sym::q);
      RationalFunction num_poch = one;
      RationalFunction den_poch = one;
      for (int k = 0; k <= n; ++k) {
        if (den_poch.is_zero())
          throw ZeroDenominatorParameter(
              "parameter c annihilates the denominator factor at index " +
              std::to_string(k));
        RationalFunction term = qbinomial(n, k) * (num_poch / den_poch) *
                                rf_power(x(), k) * rf_power(y(), n - k);
        if (deformed || alternating) {
          const long long e =
              choose2(k + 1) - static_cast<long long>(n) * k;
          term *= rf_power(defo, e);
        }
        if (alternating && k % 2 == 1) term = -term;
        result += term;
        if (k < n) {
          const RationalFunction qk = signed_q_power(k);
          num_poch *= (one - qk * a) * (one - qk * b);
          den_poch *= one - qk * c;
        }
      }
      return result;
    }
    case FamilyTag::asc_homogeneous:
    case FamilyTag::asc_homogeneous_deformed: {
      const RationalFunction a = slots.get("a");
      const bool deformed =
          spec.family == FamilyTag::asc_homogeneous_deformed;
      const RationalFunction defo =
          deformed ? slots.get("u") : RationalFunction::symbol(Sym::q);
      RationalFunction apoch = one;
      for (int k = 0; k <= n; ++k) {
        const long long e = choose2(k + 1) - static_cast<long long>(n) * k;
        RationalFunction term = qbinomial(n, k) * rf_power(defo, e) * apoch *
                                rf_power(x(), k) * rf_power(y(), n - k);
        if (k % 2 == 1) term = -term;
        result += term;
        if (k < n) apoch *= one - signed_q_power(k) * a;
      }
      return result;
    }
  }
  throw UnsupportedExpression("unknown family tag");
}

RationalFunction deformed_plus_power(int M, const RationalFunction& c,
                                     Sym deformation) {
  if (M < 0)
    throw UnsupportedExpression("deformed plus-power needs nonnegative order");
  RationalFunction result = RationalFunction::zero();
  RationalFunction cp = RationalFunction::one();
  for (int k = 0; k <= M; ++k) {
    const long long e = choose2(k + 1) - static_cast<long long>(M) * k;
    result += qbinomial(M, k) * RationalFunction::symbol_power(deformation, e) *
              cp;
    if (k < M) cp *= c;
  }
  return result;
}

VerificationReport hahn_generating_check(int n_max, int order) {
  VerificationReport report;
  report.id = "fam-hahn-gf";
  report.meta["n_max"] = n_max;
  const int series_order = std::max(n_max, order);
  report.order_checked = series_order;

  const RationalFunction a = RationalFunction::symbol(Sym::a);
  const RationalFunction x = RationalFunction::symbol(Sym::x);
  const RationalFunction y = RationalFunction::symbol(Sym::y);
  const Sym t = Sym::z;

  TruncatedSeries lhs(t, series_order);
  RationalFunction qfac = RationalFunction::one();
  for (int n = 0; n <= series_order; ++n) {
    PolySpec spec;
    spec.family = FamilyTag::hahn;
    spec.degree = n;
    lhs.set_coeff(n, build_polynomial(spec) / qfac);
    qfac *= RationalFunction::one() -
            RationalFunction::symbol_power(Sym::q, n + 1);
  }

  TruncatedSeries rhs =
      pochhammer_series(a * x, PochhammerMode::infinite_product, t,
                        series_order);
  rhs = rhs * pochhammer_series(x, PochhammerMode::inverse_infinite_product, t,
                                series_order);
  rhs = rhs * pochhammer_series(y, PochhammerMode::inverse_infinite_product, t,
                                series_order);

  report.status = VerifyStatus::pass;
  for (int n = 0; n <= series_order; ++n) {
    const RationalFunction l = lhs.coeff(n);
    const RationalFunction r = rhs.coeff(n);
    if (!(l == r)) {
      report.status = VerifyStatus::mismatch;
      FirstMismatch fm;
      fm.degree = {n};
      fm.lhs = l;
      fm.rhs = r;
      fm.diff = l - r;
      report.first_mismatch = fm;
      break;
    }
  }
  return report;
}

}  // namespace qrs
