#pragma once

#include <string>
#include <vector>

namespace cuntzcf {

/// One line of a verification report. `verdict` is "pass" or "fail", or an
/// informational value such as "reducible"; only "fail" counts as a violation.
struct CheckRecord {
  std::string check;
  std::string instance;
  std::string verdict;
  double residual = 0.0;
};

struct Report {
  std::vector<CheckRecord> records;

  void add(std::string check, std::string instance, bool passed, double residual = 0.0) {
    records.push_back({std::move(check), std::move(instance), passed ? "pass" : "fail", residual});
  }

  std::vector<CheckRecord> violations() const {
    std::vector<CheckRecord> out;
    for (const auto& r : records)
      if (r.verdict == "fail") out.push_back(r);
    return out;
  }

  bool ok() const {
    for (const auto& r : records)
      if (r.verdict == "fail") return false;
    return true;
  }
};

}  // namespace cuntzcf
