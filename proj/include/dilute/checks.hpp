#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dilute {

struct CheckResult {
  bool pass = false;
  std::string witness;  // reproducible failure detail, empty on pass
};

struct Check {
  std::string suite;  // algebra | ybe | markov | wreath | bratteli
  std::string name;
  std::function<CheckResult()> run;
};

// The full machine-verification battery; `verify all` runs exactly this.
const std::vector<Check>& all_checks();

std::vector<const Check*> checks_for_suite(const std::string& suite);

}  // namespace dilute
