#pragma once

#include <string>
#include <vector>

#include "qrs/report.hpp"

namespace qrs {

// Canonical JSON form of a report:
//   {"first_mismatch": {"degree": ..., "diff": ..., "lhs": ..., "rhs": ...}
//      or null,
//    "id": ..., "meta": {...}, "order": ..., "reason": ..., "status": ...}
// with keys sorted alphabetically and two-space indentation.  The degree
// field is an integer for a series comparison, a two-element array for a
// bidegree grid, and 0 for a direct comparison.  Rational functions are
// rendered through their canonical string form, so equal reports serialize
// to identical bytes.  The reason key is present only when non-empty.
std::string report_to_json(const VerificationReport& report, int indent = 2);

// JSON array of report objects, same conventions.
std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            int indent = 2);

// Parses JSON text and re-serializes it with the emitter's formatting
// settings.  For text produced by the functions above the result is
// byte-identical to the input.
std::string json_reserialize(const std::string& text, int indent = 2);

}  // namespace qrs
