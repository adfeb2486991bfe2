#include "qrs/report_json.hpp"

#include <nlohmann/json.hpp>

namespace qrs {

namespace {

nlohmann::json report_to_json_value(const VerificationReport& report) {
  nlohmann::json j;
  j["id"] = report.id;
  j["status"] = to_string(report.status);
  j["order"] = report.order_checked;
  j["meta"] = nlohmann::json::object();
  for (const auto& [name, value] : report.meta) {
    j["meta"][name] = value;
  }
  if (report.first_mismatch.has_value()) {
    const FirstMismatch& fm = *report.first_mismatch;
    nlohmann::json m;
    if (fm.degree.size() == 1) {
      m["degree"] = fm.degree[0];
    } else if (fm.degree.size() == 2) {
      m["degree"] = nlohmann::json::array({fm.degree[0], fm.degree[1]});
    } else {
      m["degree"] = 0;
    }
    m["lhs"] = fm.lhs.str();
    m["rhs"] = fm.rhs.str();
    m["diff"] = fm.diff.str();
    j["first_mismatch"] = std::move(m);
  } else {
    j["first_mismatch"] = nullptr;
  }
  if (!report.reason.empty()) {
    j["reason"] = report.reason;
  }
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& report, int indent) {
  return report_to_json_value(report).dump(indent);
}

std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            int indent) {
  nlohmann::json arr = nlohmann::json::array();
  for (const VerificationReport& report : reports) {
    arr.push_back(report_to_json_value(report));
  }
  return arr.dump(indent);
}

std::string json_reserialize(const std::string& text, int indent) {
  return nlohmann::json::parse(text).dump(indent);
}

}  // namespace qrs
