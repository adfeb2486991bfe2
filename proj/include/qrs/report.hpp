#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qrs/rational_function.hpp"

namespace qrs {

enum class VerifyStatus { pass, mismatch, unsupported };

inline const char* to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::pass:
      return "pass";
    case VerifyStatus::mismatch:
      return "mismatch";
    case VerifyStatus::unsupported:
      return "unsupported";
  }
  return "unsupported";
}

struct FirstMismatch {
  // one entry for a series comparison, two for a bidegree grid, empty for a
  // direct rational-function comparison
  std::vector<int> degree;
  RationalFunction lhs;
  RationalFunction rhs;
  RationalFunction diff;
};

struct VerificationReport {
  std::string id;
  VerifyStatus status = VerifyStatus::pass;
  int order_checked = 0;
  std::map<std::string, int> meta;
  std::optional<FirstMismatch> first_mismatch;
  // populated only for unsupported results
  std::string reason;
};

}  // namespace qrs
