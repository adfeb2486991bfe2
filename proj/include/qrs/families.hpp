#pragma once

#include <map>
#include <string>

#include "qrs/qcombinatorics.hpp"
#include "qrs/rational_function.hpp"
#include "qrs/report.hpp"

namespace qrs {

enum class FamilyTag {
  rogers_szego,
  generalized_rs,
  hahn,
  asc_general_phi,
  asc_general_psi,
  asc_generalized_phi,
  asc_generalized_psi,
  asc_homogeneous,
  asc_homogeneous_deformed,
  asc_generalized_deformed,
};

const char* family_name(FamilyTag tag);
FamilyTag family_from_name(const std::string& name);

struct PolySpec {
  FamilyTag family = FamilyTag::rogers_szego;
  int degree = 0;
  // free slots default to the symbol of the same name when absent
  std::map<std::string, RationalFunction> params;
};

RationalFunction build_polynomial(const PolySpec& spec);

// sum of q-binomial(M,k) * deformation^(binom(k+1,2)-M*k) * c^k over k=0..M
RationalFunction deformed_plus_power(int M, const RationalFunction& c,
                                     Sym deformation);

VerificationReport hahn_generating_check(int n_max, int order);

}  // namespace qrs
