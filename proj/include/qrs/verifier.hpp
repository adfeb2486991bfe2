#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qrs/biseries.hpp"
#include "qrs/report.hpp"
#include "qrs/series.hpp"

namespace qrs {

enum class ExpectedStatus { pass, known_discrepancy, lhs_only };

const char* expected_status_name(ExpectedStatus s);

using MetaMap = std::map<std::string, int>;

struct MetaRange {
  std::string name;
  int lo = 0;
  int hi = 0;
};

// A fully expanded side of an identity: either a univariate truncated series
// or a bidegree grid.
using Expansion = std::variant<TruncatedSeries, BivariateSeries>;

using SideBuilder = std::function<Expansion(const MetaMap&, int order)>;
using DirectCheck = std::function<VerificationReport(const MetaMap&, int order)>;

struct IdentityRecord {
  std::string id;
  std::string description;
  std::vector<MetaRange> meta_params;
  SideBuilder lhs_builder;
  // absent exactly when expected_status == lhs_only
  SideBuilder rhs_builder;
  Sym expansion_var = Sym::z;
  int default_order = 8;
  ExpectedStatus expected_status = ExpectedStatus::pass;
  // comparison region for bivariate expansions
  BiMask grid_mask = BiMask::box;
  // reported for lhs_only records
  std::string unsupported_reason;
  // overrides the builder comparison when set (polynomial-exact checks that
  // produce their own reports)
  DirectCheck direct_check;
};

const std::vector<IdentityRecord>& identity_registry();

// Throws UnknownIdentity for unregistered ids.
const IdentityRecord& find_identity(const std::string& id);

// Builds both sides of the record with the given concrete meta parameters
// (missing names default to the low end of their declared range) and compares
// coefficients exactly.  lhs_only records report unsupported with the
// record's reason.
VerificationReport verify(const std::string& id, int order, const MetaMap& meta);

// Cartesian product over ids, orders, and meta assignments.  A requested
// range narrows the record's declared range of the same name; unrequested
// names run over their full declared range.  Builder errors become
// unsupported reports; the sweep never aborts.  Reports are sorted by id,
// then meta, then order.
std::vector<VerificationReport> sweep(
    const std::vector<std::string>& ids, const std::vector<int>& orders,
    const std::map<std::string, std::pair<int, int>>& meta_ranges);

// Expands the record's left-hand side alone (defined for records whose
// left-hand side is a univariate series).
TruncatedSeries lhs_probe(const std::string& id, int order, const MetaMap& meta);

// True when the actual status is allowed by the record's expected status:
// pass expects pass, known_discrepancy tolerates pass or mismatch, lhs_only
// expects unsupported.
bool status_expected(ExpectedStatus expected, VerifyStatus actual);

}  // namespace qrs
