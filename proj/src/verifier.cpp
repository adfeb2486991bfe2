#include "qrs/verifier.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#ifdef QRS_HAVE_OPENMP
#include <omp.h>
#endif

namespace qrs {

const char* expected_status_name(ExpectedStatus s) {
  switch (s) {
    case ExpectedStatus::pass:
      return "pass";
    case ExpectedStatus::known_discrepancy:
      return "known_discrepancy";
    case ExpectedStatus::lhs_only:
      return "lhs_only";
  }
  return "pass";
}

namespace {

std::map<std::string, const IdentityRecord*> build_index() {
  std::map<std::string, const IdentityRecord*> index;
  for (const IdentityRecord& rec : identity_registry()) {
    index.emplace(rec.id, &rec);
  }
  return index;
}

MetaMap effective_meta(const IdentityRecord& rec, const MetaMap& meta) {
  MetaMap out;
  for (const MetaRange& range : rec.meta_params) {
    auto it = meta.find(range.name);
    int value = (it == meta.end()) ? range.lo : it->second;
    if (value < range.lo || value > range.hi) {
      throw UnsupportedExpression(
          "meta parameter '" + range.name + "' = " + std::to_string(value) +
          " outside declared range [" + std::to_string(range.lo) + ", " +
          std::to_string(range.hi) + "] for record " + rec.id);
    }
    out.emplace(range.name, value);
  }
  for (const auto& [name, value] : meta) {
    if (out.find(name) == out.end()) {
      throw UnsupportedExpression("record " + rec.id +
                                  " does not take meta parameter '" + name +
                                  "'");
    }
  }
  return out;
}

VerificationReport compare_univariate(const IdentityRecord& rec,
                                      const TruncatedSeries& lhs,
                                      const TruncatedSeries& rhs,
                                      MetaMap meta) {
  if (lhs.var() != rhs.var()) {
    throw VariableMismatch("record " + rec.id +
                           ": the two sides expand in different variables");
  }
  VerificationReport report;
  report.id = rec.id;
  report.meta = std::move(meta);
  report.order_checked = std::min(lhs.order(), rhs.order());
  for (int j = 0; j <= report.order_checked; ++j) {
    RationalFunction diff = lhs.coeff(j) - rhs.coeff(j);
    if (!diff.is_zero()) {
      report.status = VerifyStatus::mismatch;
      report.first_mismatch =
          FirstMismatch{{j}, lhs.coeff(j), rhs.coeff(j), std::move(diff)};
      return report;
    }
  }
  report.status = VerifyStatus::pass;
  return report;
}

VerificationReport compare_bivariate(const IdentityRecord& rec,
                                     const BivariateSeries& lhs,
                                     const BivariateSeries& rhs,
                                     MetaMap meta) {
  VerificationReport report;
  report.id = rec.id;
  report.meta = std::move(meta);
  report.order_checked =
      std::min(std::min(lhs.order1(), lhs.order2()),
               std::min(rhs.order1(), rhs.order2()));
  std::optional<BiMismatch> found =
      bivariate_first_mismatch(lhs, rhs, rec.grid_mask);
  if (found) {
    report.status = VerifyStatus::mismatch;
    report.first_mismatch =
        FirstMismatch{{found->deg1, found->deg2}, std::move(found->lhs),
                      std::move(found->rhs), std::move(found->diff)};
  } else {
    report.status = VerifyStatus::pass;
  }
  return report;
}

VerificationReport verify_record(const IdentityRecord& rec, int order,
                                 const MetaMap& meta) {
  if (order < 0) {
    throw UnsupportedExpression("negative expansion order");
  }
  MetaMap effective = effective_meta(rec, meta);
  if (rec.expected_status == ExpectedStatus::lhs_only) {
    VerificationReport report;
    report.id = rec.id;
    report.status = VerifyStatus::unsupported;
    report.order_checked = 0;
    report.meta = std::move(effective);
    report.reason = rec.unsupported_reason;
    return report;
  }
  if (rec.direct_check) {
    VerificationReport report = rec.direct_check(effective, order);
    report.id = rec.id;
    report.meta = std::move(effective);
    return report;
  }
  Expansion lhs = rec.lhs_builder(effective, order);
  Expansion rhs = rec.rhs_builder(effective, order);
  if (std::holds_alternative<TruncatedSeries>(lhs) &&
      std::holds_alternative<TruncatedSeries>(rhs)) {
    return compare_univariate(rec, std::get<TruncatedSeries>(lhs),
                              std::get<TruncatedSeries>(rhs),
                              std::move(effective));
  }
  if (std::holds_alternative<BivariateSeries>(lhs) &&
      std::holds_alternative<BivariateSeries>(rhs)) {
    return compare_bivariate(rec, std::get<BivariateSeries>(lhs),
                             std::get<BivariateSeries>(rhs),
                             std::move(effective));
  }
  throw UnsupportedExpression("record " + rec.id +
                              ": the two sides expand over different grids");
}

}  // namespace

const IdentityRecord& find_identity(const std::string& id) {
  static const std::map<std::string, const IdentityRecord*> index =
      build_index();
  auto it = index.find(id);
  if (it == index.end()) {
    throw UnknownIdentity("unknown identity id: " + id);
  }
  return *it->second;
}

VerificationReport verify(const std::string& id, int order,
                          const MetaMap& meta) {
  return verify_record(find_identity(id), order, meta);
}

std::vector<VerificationReport> sweep(
    const std::vector<std::string>& ids, const std::vector<int>& orders,
    const std::map<std::string, std::pair<int, int>>& meta_ranges) {
  struct Task {
    const IdentityRecord* rec;
    int order;
    MetaMap meta;
  };
  std::vector<Task> tasks;
  for (const std::string& id : ids) {
    const IdentityRecord& rec = find_identity(id);
    std::vector<MetaMap> assignments{MetaMap{}};
    for (const MetaRange& range : rec.meta_params) {
      int lo = range.lo;
      int hi = range.hi;
      auto it = meta_ranges.find(range.name);
      if (it != meta_ranges.end()) {
        lo = std::max(lo, it->second.first);
        hi = std::min(hi, it->second.second);
      }
      std::vector<MetaMap> extended;
      for (const MetaMap& partial : assignments) {
        for (int value = lo; value <= hi; ++value) {
          MetaMap next = partial;
          next.emplace(range.name, value);
          extended.push_back(std::move(next));
        }
      }
      assignments = std::move(extended);
    }
    for (int order : orders) {
      for (const MetaMap& meta : assignments) {
        tasks.push_back(Task{&rec, order, meta});
      }
    }
  }

  std::vector<VerificationReport> reports(tasks.size());
#ifdef QRS_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(tasks.size());
       ++i) {
    const Task& task = tasks[static_cast<std::size_t>(i)];
    VerificationReport report;
    try {
      report = verify_record(*task.rec, task.order, task.meta);
    } catch (const std::exception& e) {
      report.id = task.rec->id;
      report.status = VerifyStatus::unsupported;
      report.order_checked = 0;
      report.meta = task.meta;
      report.reason = e.what();
    }
    reports[static_cast<std::size_t>(i)] = std::move(report);
  }

  std::sort(reports.begin(), reports.end(),
            [](const VerificationReport& lhs, const VerificationReport& rhs) {
              return std::tie(lhs.id, lhs.meta, lhs.order_checked) <
                     std::tie(rhs.id, rhs.meta, rhs.order_checked);
            });
  return reports;
}

TruncatedSeries lhs_probe(const std::string& id, int order,
                          const MetaMap& meta) {
  const IdentityRecord& rec = find_identity(id);
  if (order < 0) {
    throw UnsupportedExpression("negative expansion order");
  }
  if (!rec.lhs_builder) {
    throw UnsupportedExpression("record " + id +
                                " has no series-form left-hand side");
  }
  MetaMap effective = effective_meta(rec, meta);
  Expansion lhs = rec.lhs_builder(effective, order);
  if (!std::holds_alternative<TruncatedSeries>(lhs)) {
    throw UnsupportedExpression("record " + id +
                                " expands on a bidegree grid, not a series");
  }
  return std::get<TruncatedSeries>(lhs);
}

bool status_expected(ExpectedStatus expected, VerifyStatus actual) {
  switch (expected) {
    case ExpectedStatus::pass:
      return actual == VerifyStatus::pass;
    case ExpectedStatus::known_discrepancy:
      return actual == VerifyStatus::pass || actual == VerifyStatus::mismatch;
    case ExpectedStatus::lhs_only:
      return actual == VerifyStatus::unsupported;
  }
  return false;
}

}  // namespace qrs
