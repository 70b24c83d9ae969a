#pragma once

#include <string>
#include <vector>

namespace toroidal {

// One verified relation family or identity.
struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = true;
  long long checked = 0;  // number of exact comparisons performed
  std::string detail;     // counterexample on failure, summary otherwise
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const;
  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void append(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
  // One JSON object per line, in insertion order.
  std::string to_jsonl() const;
};

}  // namespace toroidal
