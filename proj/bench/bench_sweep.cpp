#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "qrs/verifier.hpp"

// Times per-record catalog sweeps.
// usage: bench_sweep [order] [id-substring]

int main(int argc, char** argv) {
  int order = argc > 1 ? std::atoi(argv[1]) : 6;
  if (order < 1) {
    std::fprintf(stderr, "order must be at least 1\n");
    return 2;
  }
  std::string filter = argc > 2 ? argv[2] : "";

  using clock = std::chrono::steady_clock;
  double total_seconds = 0.0;
  size_t total_reports = 0;
  size_t unexpected = 0;

  for (const qrs::IdentityRecord& record : qrs::identity_registry()) {
    if (!filter.empty() && record.id.find(filter) == std::string::npos) {
      continue;
    }
    auto start = clock::now();
    std::vector<qrs::VerificationReport> reports =
        qrs::sweep({record.id}, {order}, {});
    double seconds =
        std::chrono::duration<double>(clock::now() - start).count();
    total_seconds += seconds;
    total_reports += reports.size();
    size_t off = 0;
    for (const qrs::VerificationReport& r : reports) {
      if (!qrs::status_expected(record.expected_status, r.status)) ++off;
    }
    unexpected += off;
    std::printf("%-36s %3zu reports %9.3fs%s\n", record.id.c_str(),
                reports.size(), seconds,
                off ? "  UNEXPECTED" : "");
  }

  std::printf("order %d: %zu reports in %.3fs, %zu unexpected\n", order,
              total_reports, total_seconds, unexpected);
  return unexpected == 0 ? 0 : 1;
}
