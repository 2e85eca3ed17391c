#pragma once

#include <string>
#include <vector>

namespace schubert {

struct SuiteResult {
  std::string name;
  bool pass = true;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> detail;  // first few failures
  double seconds = 0;
};

// In acceptance order: goldens, bijection, xtoy, uniq, split, transition,
// relations, geometrization, stability.
const std::vector<std::string>& suite_names();
// Rank used when n == 0.
int default_suite_n(const std::string& name);
// Throws ValidationError for an unknown suite or n out of range.
SuiteResult run_suite(const std::string& name, int n = 0);

}  // namespace schubert
